#include "fairsim/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fairsim/errors.hpp"

namespace fairsim {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& known,
                std::vector<std::string>& errors) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key()))
            errors.push_back(where + ": unknown key \"" + it.key() + "\"");
    }
}

PerGroup parse_per_group(const json& v, const std::string& where, std::vector<std::string>& errors) {
    if (v.is_number()) return PerGroup::both(v.get<double>());
    if (v.is_object()) {
        check_keys(v, where, {"non_protected", "protected"}, errors);
        PerGroup out;
        if (v.contains("non_protected") && v.contains("protected")) {
            out.non_prot = v.at("non_protected").get<double>();
            out.prot = v.at("protected").get<double>();
        } else {
            errors.push_back(where + ": per-group value needs both \"non_protected\" and \"protected\"");
        }
        return out;
    }
    errors.push_back(where + ": expected a number or a per-group object");
    return {};
}

TargetingPolicy parse_policy(const json& v, const std::string& where, std::vector<std::string>& errors) {
    if (!v.is_object()) {
        errors.push_back(where + ": expected an object with a \"policy\" key");
        return {};
    }
    check_keys(v, where, {"policy", "k"}, errors);
    const std::string policy = v.value("policy", "");
    if (policy == "all_firms") {
        if (v.contains("k")) errors.push_back(where + ".k: not allowed for all_firms");
        return TargetingPolicy::all_firms();
    }
    if (policy == "random_subset" || policy == "low_threshold_random_subset") {
        if (!v.contains("k")) {
            errors.push_back(where + ".k: required for " + policy);
            return {};
        }
        const int k = v.at("k").get<int>();
        return policy == "random_subset" ? TargetingPolicy::random_subset(k)
                                         : TargetingPolicy::low_threshold_subset(k);
    }
    errors.push_back(where + ".policy: expected one of all_firms, random_subset, "
                     "low_threshold_random_subset");
    return {};
}

json per_group_to_json(const PerGroup& v) {
    if (v.equal_across_groups()) return v.non_prot;
    return json{{"non_protected", v.non_prot}, {"protected", v.prot}};
}

json policy_to_json(const TargetingPolicy& p) {
    switch (p.kind) {
        case TargetingPolicy::Kind::AllFirms: return json{{"policy", "all_firms"}};
        case TargetingPolicy::Kind::RandomSubset: return json{{"policy", "random_subset"}, {"k", p.k}};
        case TargetingPolicy::Kind::LowThresholdRandomSubset:
            return json{{"policy", "low_threshold_random_subset"}, {"k", p.k}};
    }
    return {};
}

void validate_policy(const TargetingPolicy& p, int m, const std::string& where,
                     std::vector<std::string>& errors) {
    if (p.kind == TargetingPolicy::Kind::AllFirms) return;
    const int pool = p.kind == TargetingPolicy::Kind::RandomSubset ? m : m / 2;
    if (p.k < 1)
        errors.push_back(where + ".k: must be >= 1");
    else if (p.k > pool)
        errors.push_back(where + ".k: " + std::to_string(p.k) + " exceeds the candidate pool of " +
                         std::to_string(pool) + " firms");
}

}  // namespace

void validate(const ScenarioConfig& c, std::vector<std::string>* warnings) {
    std::vector<std::string> errors;

    if (c.n < 1) errors.push_back("n: must be >= 1");
    if (!(c.f >= 0.0 && c.f <= 1.0)) errors.push_back("protected_fraction: must be in [0, 1]");
    if (!(c.quality.std_dev > 0.0)) errors.push_back("quality.std_dev: must be > 0");
    if (!(c.quality.base_mean > 0.0 && c.quality.base_mean < 1.0))
        errors.push_back("quality.base_mean: must be in (0, 1)");
    if (c.quality.protected_shift < 0.0) errors.push_back("quality.protected_shift: must be >= 0");
    else if (!(c.quality.base_mean - c.quality.protected_shift > 0.0 &&
               c.quality.base_mean - c.quality.protected_shift < 1.0))
        errors.push_back("quality.protected_shift: base_mean - protected_shift must stay in (0, 1)");

    if (c.firms.empty()) errors.push_back("firms: at least one firm is required");
    for (std::size_t i = 0; i < c.firms.size(); ++i) {
        const FirmConfig& firm = c.firms[i];
        const std::string where = "firms[" + std::to_string(i) + "]";
        if (firm.id != static_cast<int>(i)) errors.push_back(where + ".id: must equal the position " + std::to_string(i));
        for (const auto& [g, tau] : {std::pair{"non_protected", firm.threshold.non_prot},
                                     std::pair{"protected", firm.threshold.prot}})
            if (!(tau >= 0.0 && tau <= 1.0))
                errors.push_back(where + ".threshold." + g + ": must be in [0, 1]");
        for (const auto& [g, s] : {std::pair{"non_protected", firm.sophistication.non_prot},
                                   std::pair{"protected", firm.sophistication.prot}})
            if (!(s > 0.0 && s <= 1.0))
                errors.push_back(where + ".sophistication." + g + ": must be in (0, 1]");
        if (!(firm.cost >= 0.0 && firm.cost < 1.0)) errors.push_back(where + ".cost: must be in [0, 1)");
    }

    if (c.periods < 1) errors.push_back("periods: must be >= 1");
    if (c.applicants_per_period < 1 || c.applicants_per_period > c.n)
        errors.push_back("applicants_per_period: must be in [1, n]");
    if (!(c.reward >= 0.0)) errors.push_back("reward: must be >= 0");
    if (!(c.penalty <= 0.0)) errors.push_back("penalty: must be <= 0");
    if (c.replications < 1) errors.push_back("replications: must be >= 1");

    validate_policy(c.targeting.non_prot, c.num_firms(), "targeting.non_protected", errors);
    validate_policy(c.targeting.prot, c.num_firms(), "targeting.protected", errors);

    if (!errors.empty()) {
        std::ostringstream msg;
        msg << "invalid scenario config";
        if (!c.name.empty()) msg << " \"" << c.name << "\"";
        for (const std::string& e : errors) msg << "\n  - " << e;
        throw ConfigError(msg.str());
    }

    if (warnings && c.f > 0.0 && std::llround(c.f * static_cast<double>(c.n)) == 0)
        warnings->push_back("protected_fraction: round(f*n) is 0, the protected group is empty");
}

ScenarioConfig load_config(const std::string& json_text, std::vector<std::string>* warnings) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be a JSON object");

    std::vector<std::string> errors;
    check_keys(root,
               "config",
               {"name", "n", "protected_fraction", "quality", "firms", "periods",
                "applicants_per_period", "reward", "penalty", "targeting", "replications",
                "base_seed", "metrics_mode"},
               errors);

    ScenarioConfig c;
    try {
        c.name = root.value("name", std::string("custom"));
        c.n = root.value("n", c.n);
        c.f = root.value("protected_fraction", c.f);
        if (root.contains("quality")) {
            const json& q = root.at("quality");
            check_keys(q, "quality", {"base_mean", "std_dev", "protected_shift"}, errors);
            c.quality.base_mean = q.value("base_mean", c.quality.base_mean);
            c.quality.std_dev = q.value("std_dev", c.quality.std_dev);
            c.quality.protected_shift = q.value("protected_shift", c.quality.protected_shift);
        }
        if (!root.contains("firms") || !root.at("firms").is_array() || root.at("firms").empty()) {
            errors.push_back("firms: a non-empty array is required");
        } else {
            int id = 0;
            for (const json& fj : root.at("firms")) {
                const std::string where = "firms[" + std::to_string(id) + "]";
                check_keys(fj, where, {"threshold", "sophistication", "cost"}, errors);
                FirmConfig firm;
                firm.id = id++;
                if (fj.contains("threshold"))
                    firm.threshold = parse_per_group(fj.at("threshold"), where + ".threshold", errors);
                else
                    errors.push_back(where + ".threshold: required");
                if (fj.contains("sophistication"))
                    firm.sophistication =
                        parse_per_group(fj.at("sophistication"), where + ".sophistication", errors);
                else
                    errors.push_back(where + ".sophistication: required");
                firm.cost = fj.value("cost", 0.0);
                c.firms.push_back(firm);
            }
        }
        c.periods = root.value("periods", c.periods);
        c.applicants_per_period = root.value("applicants_per_period", c.applicants_per_period);
        c.reward = root.value("reward", c.reward);
        c.penalty = root.value("penalty", c.penalty);
        if (root.contains("targeting")) {
            const json& t = root.at("targeting");
            check_keys(t, "targeting", {"non_protected", "protected"}, errors);
            if (t.contains("non_protected"))
                c.targeting.non_prot = parse_policy(t.at("non_protected"), "targeting.non_protected", errors);
            if (t.contains("protected"))
                c.targeting.prot = parse_policy(t.at("protected"), "targeting.protected", errors);
        }
        c.replications = root.value("replications", c.replications);
        c.base_seed = root.value("base_seed", c.base_seed);
        if (root.contains("metrics_mode")) {
            const std::string mode = root.at("metrics_mode").get<std::string>();
            if (mode == "per_period") c.metrics_mode = MetricsMode::PerPeriod;
            else if (mode == "cumulative") c.metrics_mode = MetricsMode::Cumulative;
            else errors.push_back("metrics_mode: expected \"per_period\" or \"cumulative\"");
        }
    } catch (const json::exception& e) {
        errors.push_back(std::string("config: ") + e.what());
    }

    if (!errors.empty()) {
        std::ostringstream msg;
        msg << "invalid scenario config";
        for (const std::string& e : errors) msg << "\n  - " << e;
        throw ConfigError(msg.str());
    }

    validate(c, warnings);
    return c;
}

ScenarioConfig load_config_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::vector<std::string> local_warnings;
    ScenarioConfig c = load_config(buf.str(), warnings ? warnings : &local_warnings);
    if (c.name == "custom") {
        // Default the name to the file stem.
        std::string stem = path;
        if (const auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
            stem = stem.substr(slash + 1);
        if (const auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
        if (!stem.empty()) c.name = stem;
    }
    return c;
}

std::string config_to_json(const ScenarioConfig& c, int indent) {
    json firms = json::array();
    for (const FirmConfig& firm : c.firms) {
        json fj;
        fj["threshold"] = per_group_to_json(firm.threshold);
        fj["sophistication"] = per_group_to_json(firm.sophistication);
        if (firm.cost != 0.0) fj["cost"] = firm.cost;
        firms.push_back(fj);
    }
    json root;
    root["name"] = c.name;
    root["n"] = c.n;
    root["protected_fraction"] = c.f;
    root["quality"] = {{"base_mean", c.quality.base_mean},
                       {"std_dev", c.quality.std_dev},
                       {"protected_shift", c.quality.protected_shift}};
    root["firms"] = firms;
    root["periods"] = c.periods;
    root["applicants_per_period"] = c.applicants_per_period;
    root["reward"] = c.reward;
    root["penalty"] = c.penalty;
    root["targeting"] = {{"non_protected", policy_to_json(c.targeting.non_prot)},
                         {"protected", policy_to_json(c.targeting.prot)}};
    root["replications"] = c.replications;
    root["base_seed"] = c.base_seed;
    root["metrics_mode"] = c.metrics_mode == MetricsMode::Cumulative ? "cumulative" : "per_period";
    return root.dump(indent);
}

const char* sweep_axis_label(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Threshold: return "threshold";
        case SweepAxis::Sophistication: return "sophistication";
        case SweepAxis::ProtectedFraction: return "f";
        case SweepAxis::Cost: return "cost";
    }
    return "?";
}

SweepAxis parse_sweep_axis(const std::string& text) {
    if (text == "threshold") return SweepAxis::Threshold;
    if (text == "sophistication") return SweepAxis::Sophistication;
    if (text == "f") return SweepAxis::ProtectedFraction;
    if (text == "cost") return SweepAxis::Cost;
    throw ConfigError("axis: expected one of threshold, sophistication, f, cost; got \"" + text + "\"");
}

void apply_sweep_value(ScenarioConfig& config, SweepAxis axis, double value) {
    switch (axis) {
        case SweepAxis::Threshold:
            for (FirmConfig& firm : config.firms) firm.threshold = PerGroup::both(value);
            break;
        case SweepAxis::Sophistication:
            for (FirmConfig& firm : config.firms) firm.sophistication = PerGroup::both(value);
            break;
        case SweepAxis::ProtectedFraction:
            config.f = value;
            break;
        case SweepAxis::Cost:
            for (FirmConfig& firm : config.firms) firm.cost = value;
            break;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value);
    config.name += std::string("-") + sweep_axis_label(axis) + "-" + buf;
}

}  // namespace fairsim
