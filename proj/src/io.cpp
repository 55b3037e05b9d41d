#include "lobby/io.hpp"

#include <json.hpp>

namespace lobby {

using nlohmann::json;

namespace {

json require_key(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    Instance inst;
    try {
        inst.k = require_key(doc, "k").get<std::int64_t>();
        const json t = require_key(doc, "threshold");
        inst.threshold.num = require_key(t, "num").get<std::int64_t>();
        inst.threshold.den = require_key(t, "den").get<std::int64_t>();
        const std::string cmp = require_key(doc, "comparison").get<std::string>();
        if (cmp == "strict")
            inst.comparison = Comparison::Strict;
        else if (cmp == "weak")
            inst.comparison = Comparison::Weak;
        else
            throw ParseError("comparison must be \"strict\" or \"weak\"");
        inst.agenda = require_key(doc, "agenda").get<std::vector<int>>();
        inst.budget = require_key(doc, "budget").get<std::int64_t>();

        const json probs = require_key(doc, "probabilities");
        const json costs = require_key(doc, "costs");
        if (!probs.is_array() || !costs.is_array())
            throw ParseError("probabilities and costs must be arrays");
        inst.m = static_cast<std::int64_t>(probs.size());
        inst.n = static_cast<std::int64_t>(inst.agenda.size());
        inst.prob.resize(inst.m);
        inst.cost.resize(inst.m);
        for (std::int64_t i = 0; i < inst.m; ++i) {
            inst.prob[i] = probs.at(i).get<std::vector<std::int64_t>>();
            const json& crow = costs.at(i);
            inst.cost[i].resize(crow.size());
            for (std::size_t j = 0; j < crow.size(); ++j) {
                CostRow row;
                for (const json& entry : crow.at(j))
                    row.push_back(entry.is_null()
                                      ? std::nullopt
                                      : std::optional<std::int64_t>(entry.get<std::int64_t>()));
                inst.cost[i][j] = std::move(row);
            }
        }
        if (doc.contains("weights"))
            inst.weights = doc.at("weights").get<std::vector<std::int64_t>>();
        if (doc.contains("objective"))
            inst.objective = doc.at("objective").get<std::int64_t>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed instance document: ") + e.what());
    }
    return validate_instance(std::move(inst));
}

std::string serialize_instance(const Instance& inst) {
    json doc;
    doc["k"] = inst.k;
    doc["threshold"] = {{"num", inst.threshold.num}, {"den", inst.threshold.den}};
    doc["comparison"] = inst.comparison == Comparison::Strict ? "strict" : "weak";
    doc["agenda"] = inst.agenda;
    doc["budget"] = inst.budget;
    doc["probabilities"] = inst.prob;
    json costs = json::array();
    for (const auto& row : inst.cost) {
        json jrow = json::array();
        for (const auto& cr : row) {
            json entries = json::array();
            for (const auto& c : cr)
                entries.push_back(c.has_value() ? json(*c) : json(nullptr));
            jrow.push_back(std::move(entries));
        }
        costs.push_back(std::move(jrow));
    }
    doc["costs"] = std::move(costs);
    if (inst.weights) doc["weights"] = *inst.weights;
    if (inst.objective) doc["objective"] = *inst.objective;
    return doc.dump(2);
}

}  // namespace lobby
