#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lobby/cli.hpp"
#include "lobby/generators.hpp"
#include "lobby/io.hpp"
#include "test_util.hpp"

using namespace lobby;
using testutil::running_example;

namespace {

bool same_instance(const Instance& a, const Instance& b) {
    return a.k == b.k && a.m == b.m && a.n == b.n && a.prob == b.prob &&
           a.cost == b.cost && a.agenda == b.agenda &&
           a.threshold.num == b.threshold.num && a.threshold.den == b.threshold.den &&
           a.comparison == b.comparison && a.weights == b.weights &&
           a.objective == b.objective && a.budget == b.budget;
}

std::string write_temp(const Instance& inst, const std::string& name) {
    std::ofstream out(name);
    out << serialize_instance(inst);
    return name;
}

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("instances round-trip through the document format") {
    Instance inst = running_example();
    CHECK(same_instance(inst, parse_instance(serialize_instance(inst))));

    GenConfig cfg;
    cfg.agenda = AgendaPolicy::Random;
    cfg.weighted = true;
    cfg.comparison = Comparison::Weak;
    cfg.threshold = {3, 5};
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        cfg.seed = seed;
        Instance rnd = gen_random(cfg);
        CAPTURE(seed);
        CHECK(same_instance(rnd, parse_instance(serialize_instance(rnd))));
    }
}

TEST_CASE("parser reports malformed documents") {
    CHECK_THROWS_AS(parse_instance("not json"), ParseError);
    CHECK_THROWS_AS(parse_instance("{}"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"k": "three"})"), ParseError);

    // Well-formed JSON carrying an invalid instance: nonzero base cost.
    Instance bad = running_example();
    bad.cost[0][0][8] = 5;
    CHECK_THROWS_AS(parse_instance(serialize_instance(bad)), ValidationError);
}

TEST_CASE("command line: validate, eval and solve") {
    std::string file = write_temp(running_example(), "cli_example.json");

    CliRun v = run({"validate", file});
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("\"valid\": true") != std::string::npos);

    CliRun e = run({"eval", file, "--criterion", "am"});
    CHECK(e.exit_code == 0);
    CHECK(e.out.find("\"100\"") != std::string::npos);

    CliRun s = run({"solve", file, "--method", "mb", "--criterion", "sm"});
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("\"min_cost\": 245") != std::string::npos);

    CliRun o = run({"oracle", file, "--method", "mb", "--criterion", "sm"});
    CHECK(o.exit_code == 0);
    CHECK(o.out.find("\"min_cost\": 245") != std::string::npos);

    CliRun g = run({"greedy", file, "--criterion", "am"});
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("\"feasible\": true") != std::string::npos);
}

TEST_CASE("command line: exit code contract") {
    // Feasible within budget: 0.
    std::string rich = write_temp(running_example(), "cli_rich.json");
    CHECK(run({"solve", rich, "--method", "mb", "--criterion", "sm"}).exit_code == 0);

    // Optimum exists but exceeds the budget: 1.
    std::string poor =
        write_temp(running_example({1, 2}, Comparison::Strict, 100), "cli_poor.json");
    CliRun over = run({"solve", poor, "--method", "mb", "--criterion", "sm"});
    CHECK(over.exit_code == 1);
    CHECK(over.out.find("\"feasible\": false") != std::string::npos);

    // No plan ever wins: 1 with an explanation.
    std::string stuck =
        write_temp(running_example({1, 1}, Comparison::Strict), "cli_stuck.json");
    CHECK(run({"solve", stuck, "--method", "ib", "--criterion", "sm"}).exit_code == 1);

    // Invalid instances: 2 with the violation category named.
    Instance bad = running_example();
    bad.cost[0][1][6] = 5;
    std::ofstream("cli_bad.json") << serialize_instance(bad);
    CliRun inv = run({"validate", "cli_bad.json"});
    CHECK(inv.exit_code == 2);
    CHECK(inv.err.find("NonMonotoneCost") != std::string::npos);

    // Usage and input errors: 2.
    CHECK(run({"solve", "no_such_file.json"}).exit_code == 2);
    CHECK(run({"solve", rich, "--method", "zz"}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
}

TEST_CASE("command line: generation feeds back into the pipeline") {
    CliRun g = run({"gen", "--seed", "5", "--m", "2", "--n", "2", "--k", "2"});
    REQUIRE(g.exit_code == 0);
    Instance inst = parse_instance(g.out);
    CHECK(inst.m == 2);
    CHECK(inst.n == 2);

    CliRun g2 = run({"gen", "--seed", "5", "--m", "2", "--n", "2", "--k", "2"});
    CHECK(g.out == g2.out);  // seeded, hence reproducible

    CliRun ss = run({"gen", "--reduction", "subsetsum", "--seed", "9", "--size", "4"});
    REQUIRE(ss.exit_code == 0);
    Instance red = parse_instance(ss.out);
    CHECK(red.k == 0);
    CHECK(red.n == 1);
}

TEST_CASE("command line: benchmark emits the ratio table") {
    CliRun b = run({"bench", "--seed", "11", "--count", "4"});
    REQUIRE(b.exit_code == 0);
    CHECK(b.out.rfind("index,cover_number,exact_cost,greedy_cost,ratio,bound", 0) == 0);
    int lines = 0;
    for (char c : b.out)
        if (c == '\n') ++lines;
    CHECK(lines == 5);  // header plus one row per instance
}
