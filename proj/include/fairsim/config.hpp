#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairsim/ecosystem.hpp"
#include "fairsim/firm.hpp"
#include "fairsim/metrics.hpp"
#include "fairsim/population.hpp"

namespace fairsim {

inline constexpr std::uint64_t kDefaultBaseSeed = 20220705;

/// Full parameter set of one scenario. A config plus its base seed determines
/// a run bit for bit.
struct ScenarioConfig {
    std::string name = "custom";
    int n = 1000;                      // individuals
    double f = 0.5;                    // protected fraction
    QualityDistConfig quality;
    std::vector<FirmConfig> firms;     // ids are positional
    int periods = 50;                  // decision cycles t
    int applicants_per_period = 100;
    double reward = 0.05;
    double penalty = -0.05;
    GroupTargeting targeting;          // defaults to all firms for both groups
    int replications = 100;
    std::uint64_t base_seed = kDefaultBaseSeed;
    MetricsMode metrics_mode = MetricsMode::PerPeriod;

    int num_firms() const { return static_cast<int>(firms.size()); }
};

/// Validates every field; throws ConfigError listing all violations by field
/// name. Appends non-fatal notes (e.g. round(f*n) == 0 with f > 0) to
/// *warnings when given.
void validate(const ScenarioConfig& config, std::vector<std::string>* warnings = nullptr);

/// Parses the JSON scenario schema (documented in the README). Unknown keys
/// are errors; omitted optional keys take the documented defaults. The result
/// is fully validated.
ScenarioConfig load_config(const std::string& json_text, std::vector<std::string>* warnings = nullptr);
ScenarioConfig load_config_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Config echo in the same schema load_config accepts (round-trips exactly).
std::string config_to_json(const ScenarioConfig& config, int indent = 2);

/// Parameter axes a sweep can vary. Threshold and sophistication apply to all
/// firms and both groups.
enum class SweepAxis { Threshold, Sophistication, ProtectedFraction, Cost };

const char* sweep_axis_label(SweepAxis axis);

/// Accepts "threshold", "sophistication", "f", "cost"; throws ConfigError on
/// anything else.
SweepAxis parse_sweep_axis(const std::string& text);

/// Sets the axis value on the config and appends "-<axis>-<value>" to its name.
void apply_sweep_value(ScenarioConfig& config, SweepAxis axis, double value);

}  // namespace fairsim
