#include "lobby/cli.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lobby/generators.hpp"
#include "lobby/hard_solvers.hpp"
#include "lobby/io.hpp"
#include "lobby/oracle.hpp"
#include "lobby/poly_solvers.hpp"

namespace lobby::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kError = 2;

Instance load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

Criterion parse_criterion(const std::string& s) {
    if (s == "sm") return Criterion::SM;
    if (s == "am") return Criterion::AM;
    throw ParseError("criterion must be sm or am");
}

Method parse_method(const std::string& s) {
    if (s == "mb") return Method::MB;
    if (s == "ib") return Method::IB;
    if (s == "vb") return Method::VB;
    throw ParseError("method must be mb, ib or vb");
}

json plan_json(const BriberyPlan& plan) {
    if (const auto* mp = std::get_if<MicroPlan>(&plan))
        return {{"type", "micro"}, {"target", mp->target}};
    if (const auto* ip = std::get_if<IssuePlan>(&plan))
        return {{"type", "issue"}, {"dollars", ip->dollars}};
    return {{"type", "voter"}, {"dollars", std::get<VoterPlan>(plan).dollars}};
}

const char* tag_name(SolverTag t) {
    switch (t) {
        case SolverTag::ExactPoly: return "exact-poly";
        case SolverTag::ExactBrute: return "exact-brute";
        case SolverTag::Greedy: return "greedy";
        case SolverTag::Oracle: return "oracle";
        case SolverTag::KnapsackDp: return "knapsack-dp";
    }
    return "?";
}

json report_json(const SolveReport& rep) {
    json doc;
    doc["feasible"] = rep.feasible;
    if (rep.min_cost) doc["min_cost"] = *rep.min_cost;
    if (!rep.per_issue_cost.empty()) doc["per_issue_cost"] = rep.per_issue_cost;
    if (rep.plan) doc["plan"] = plan_json(*rep.plan);
    doc["solver"] = tag_name(rep.solver);
    return doc;
}

int emit(std::ostream& out, const json& doc, bool feasible) {
    out << doc.dump(2) << "\n";
    return feasible ? kOk : kInfeasible;
}

const char* validation_code_name(ValidationError::Code code) {
    switch (code) {
        case ValidationError::Code::ShapeMismatch: return "ShapeMismatch";
        case ValidationError::Code::NonMonotoneCost: return "NonMonotoneCost";
        case ValidationError::Code::NonzeroBaseCost: return "NonzeroBaseCost";
        case ValidationError::Code::MissingAgendaSideCost: return "MissingAgendaSideCost";
    }
    return "Unknown";
}

int cmd_validate(const std::string& file, std::ostream& out) {
    Instance inst = load(file);
    json doc{{"valid", true}, {"m", inst.m}, {"n", inst.n}, {"k", inst.k}};
    out << doc.dump(2) << "\n";
    return kOk;
}

int cmd_eval(const std::string& file, const std::string& crit, std::ostream& out) {
    Instance inst = load(file);
    Outcome o = evaluate(inst, parse_criterion(crit));
    std::string bits;
    for (int b : o.bits) bits += static_cast<char>('0' + b);
    json doc{{"outcome", bits}, {"bits", o.bits}};
    out << doc.dump(2) << "\n";
    return kOk;
}

int cmd_solve(const std::string& file, const std::string& method_s,
              const std::string& crit_s, bool weighted, bool exact, bool use_oracle,
              std::ostream& out) {
    Instance inst = normalize_agenda(load(file));
    const Method method = parse_method(method_s);
    const Criterion crit = parse_criterion(crit_s);

    if (exact) {
        if (method != Method::MB) throw ParseError("--exact applies to --method mb only");
        if (use_oracle) {
            bool ok = oracle_exact_spend(inst, crit);
            return emit(out, json{{"feasible", ok}, {"budget", inst.budget}}, ok);
        }
        SolveReport rep = solve_exact_mb(inst, crit);
        return emit(out, report_json(rep), rep.feasible);
    }

    SolveReport rep;
    try {
        if (use_oracle) {
            rep = weighted ? oracle_weighted(inst, method, crit)
                           : oracle_min_budget(inst, method, crit);
        } else if (weighted) {
            rep = method == Method::VB ? solve_weighted_vb_exact(inst, crit)
                                       : solve_weighted_mb_ib(inst, method, crit);
        } else {
            switch (method) {
                case Method::MB:
                    rep = crit == Criterion::SM ? solve_mb_sm(inst) : solve_mb_am(inst);
                    break;
                case Method::IB: rep = solve_ib(inst, crit); break;
                case Method::VB: rep = solve_vb_exact(inst, crit); break;
            }
        }
    } catch (const InfeasibleIssue& e) {
        return emit(out, json{{"feasible", false}, {"reason", e.what()}}, false);
    }
    return emit(out, report_json(rep), rep.feasible);
}

int cmd_greedy(const std::string& file, const std::string& crit_s, std::ostream& out) {
    Instance inst = normalize_agenda(load(file));
    auto trace = greedy_vb(inst, parse_criterion(crit_s));
    if (!trace) return emit(out, json{{"feasible", false}}, false);
    json steps = json::array();
    for (const auto& s : trace->steps)
        steps.push_back({{"voter", s.voter},
                         {"dollars", s.dollars},
                         {"issues_raised", s.issues_raised}});
    json doc{{"feasible", true},
             {"total_cost", trace->total_cost},
             {"cover_number", trace->cover_total},
             {"ratio_bound", trace->ratio_bound},
             {"steps", steps}};
    return emit(out, doc, true);
}

int cmd_gen(std::uint64_t seed, std::int64_t m, std::int64_t n, std::int64_t k,
            std::int64_t max_cost, std::int64_t max_budget, const std::string& agenda,
            bool weighted, const std::string& reduction, std::int64_t size,
            std::int64_t issues, std::int64_t max_value, std::ostream& out) {
    if (reduction.empty()) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.m_min = cfg.m_max = m;
        cfg.n_min = cfg.n_max = n;
        cfg.k_min = cfg.k_max = k;
        cfg.max_cost = max_cost;
        cfg.max_budget = max_budget;
        cfg.agenda = agenda == "random" ? AgendaPolicy::Random : AgendaPolicy::AllOnes;
        cfg.weighted = weighted;
        out << serialize_instance(gen_random(cfg)) << "\n";
        return kOk;
    }

    std::mt19937_64 rng(seed);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    if (reduction == "subsetsum") {
        std::vector<std::int64_t> a(size);
        std::int64_t total = 0;
        for (auto& x : a) {
            x = uniform(1, max_value);
            total += x;
        }
        // Half the seeds carry an exact subset sum, half a uniform target.
        std::int64_t S = 0;
        if (uniform(0, 1) == 0)
            for (std::int64_t x : a)
                if (uniform(0, 1) == 0) S += x;
        if (S == 0) S = uniform(1, total);
        out << serialize_instance(from_subset_sum(a, S)) << "\n";
        return kOk;
    }
    if (reduction == "knapsack") {
        std::vector<std::int64_t> w(size), p(size);
        std::int64_t tw = 0, tp = 0;
        for (std::int64_t j = 0; j < size; ++j) {
            w[j] = uniform(1, max_value);
            p[j] = uniform(1, max_value);
            tw += w[j];
            tp += p[j];
        }
        out << serialize_instance(
                   from_knapsack(w, p, uniform(0, tw), uniform(0, tp)))
            << "\n";
        return kOk;
    }
    if (reduction == "ol") {
        std::vector<std::vector<int>> E(size, std::vector<int>(issues));
        for (auto& row : E)
            for (auto& e : row) e = static_cast<int>(uniform(0, 1));
        std::vector<int> Z(issues, 1);
        out << serialize_instance(from_optimal_lobbying(E, Z, uniform(0, size))) << "\n";
        return kOk;
    }
    throw ParseError("reduction must be subsetsum, knapsack or ol");
}

int cmd_bench(std::uint64_t seed, std::int64_t count, const std::string& crit_s,
              std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t max_cost,
              std::ostream& out) {
    const Criterion crit = parse_criterion(crit_s);
    out << "index,cover_number,exact_cost,greedy_cost,ratio,bound\n";
    for (std::int64_t i = 0; i < count; ++i) {
        GenConfig cfg;
        cfg.seed = seed + static_cast<std::uint64_t>(i);
        cfg.m_max = m;
        cfg.n_max = n;
        cfg.k_max = k;
        cfg.max_cost = max_cost;
        Instance inst = gen_random(cfg);

        auto trace = greedy_vb(inst, crit);
        if (!trace) {
            out << i << ",,,,,\n";
            continue;
        }
        SolveReport exact = solve_vb_exact(inst, crit);
        const std::int64_t opt = exact.min_cost.value_or(0);
        const double ratio =
            opt == 0 ? 1.0
                     : static_cast<double>(trace->total_cost) / static_cast<double>(opt);
        out << i << "," << trace->cover_total << "," << opt << ","
            << trace->total_cost << "," << ratio << "," << trace->ratio_bound << "\n";
    }
    return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"probabilistic lobbying solver toolkit"};
    app.require_subcommand(1);

    std::string file, criterion = "sm", method = "mb", agenda = "allones";
    std::string reduction;
    bool weighted = false, exact = false;
    std::uint64_t seed = 0;
    std::int64_t count = 10, gm = 2, gn = 2, gk = 2, max_cost = 9, max_budget = 100;
    std::int64_t size = 5, issues = 2, max_value = 9;

    auto* c_validate = app.add_subcommand("validate", "check an instance file");
    c_validate->add_option("file", file)->required();

    auto* c_eval = app.add_subcommand("eval", "evaluate referendum outcomes");
    c_eval->add_option("file", file)->required();
    c_eval->add_option("--criterion", criterion);

    auto* c_solve = app.add_subcommand("solve", "minimum-budget solve");
    c_solve->add_option("file", file)->required();
    c_solve->add_option("--method", method);
    c_solve->add_option("--criterion", criterion);
    c_solve->add_flag("--weighted", weighted);
    c_solve->add_flag("--exact", exact);

    auto* c_greedy = app.add_subcommand("greedy", "greedy voter bribery");
    c_greedy->add_option("file", file)->required();
    c_greedy->add_option("--criterion", criterion);

    auto* c_oracle = app.add_subcommand("oracle", "brute-force reference solve");
    c_oracle->add_option("file", file)->required();
    c_oracle->add_option("--method", method);
    c_oracle->add_option("--criterion", criterion);
    c_oracle->add_flag("--weighted", weighted);
    c_oracle->add_flag("--exact", exact);

    auto* c_gen = app.add_subcommand("gen", "generate an instance");
    c_gen->add_option("--seed", seed);
    c_gen->add_option("--m", gm);
    c_gen->add_option("--n", gn);
    c_gen->add_option("--k", gk);
    c_gen->add_option("--max-cost", max_cost);
    c_gen->add_option("--max-budget", max_budget);
    c_gen->add_option("--agenda", agenda);
    c_gen->add_flag("--weighted", weighted);
    c_gen->add_option("--reduction", reduction);
    c_gen->add_option("--size", size);
    c_gen->add_option("--issues", issues);
    c_gen->add_option("--max-value", max_value);

    auto* c_bench = app.add_subcommand("bench", "greedy-vs-exact ratio CSV");
    c_bench->add_option("--seed", seed);
    c_bench->add_option("--count", count);
    c_bench->add_option("--criterion", criterion);
    c_bench->add_option("--m", gm);
    c_bench->add_option("--n", gn);
    c_bench->add_option("--k", gk);
    c_bench->add_option("--max-cost", max_cost);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kError;
    }

    try {
        if (c_validate->parsed()) return cmd_validate(file, out);
        if (c_eval->parsed()) return cmd_eval(file, criterion, out);
        if (c_solve->parsed())
            return cmd_solve(file, method, criterion, weighted, exact, false, out);
        if (c_oracle->parsed())
            return cmd_solve(file, method, criterion, weighted, exact, true, out);
        if (c_greedy->parsed()) return cmd_greedy(file, criterion, out);
        if (c_gen->parsed())
            return cmd_gen(seed, gm, gn, gk, max_cost, max_budget, agenda, weighted,
                           reduction, size, issues, max_value, out);
        if (c_bench->parsed())
            return cmd_bench(seed, count, criterion, gm, gn, gk, max_cost, out);
    } catch (const ValidationError& e) {
        err << "error: " << validation_code_name(e.code) << ": " << e.what() << "\n";
        return kError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    err << "no subcommand given\n";
    return kError;
}

}  // namespace lobby::cli
