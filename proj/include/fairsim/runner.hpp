#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairsim/config.hpp"
#include "fairsim/metrics.hpp"
#include "fairsim/replication.hpp"

namespace fairsim {

struct RunOptions {
    int parallelism = 0;                  // 0 = hardware concurrency
    bool keep_replication_series = false; // retain each replication's raw series
};

struct ScenarioResult {
    ScenarioConfig config;
    std::string engine_version;
    std::string timestamp_utc;
    std::vector<AveragedSeries> series;  // canonical order
    std::vector<std::vector<MetricSeries>> replication_series;  // when requested
};

/// Groups the per-replication series by position (the canonical order is the
/// same in every replication) and averages each group.
std::vector<AveragedSeries> average_replication_series(
    const std::vector<std::vector<MetricSeries>>& per_replication);

/// Result shell with version and UTC timestamp filled in.
ScenarioResult assemble_result(const ScenarioConfig& config, std::vector<AveragedSeries> series);

/// Runs all replications (parallel up to options.parallelism, merged in index
/// order) and averages the metric series. The result does not depend on the
/// parallelism level.
ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

/// One run per value, each applying the value to the base config on the given
/// axis; all share the base config's seed family. An empty value list yields
/// an empty result list.
std::vector<ScenarioResult> sweep(const ScenarioConfig& base, SweepAxis axis,
                                  const std::vector<double>& values, const RunOptions& options = {});

/// Helpers over a result's series.

const AveragedSeries& find_series(const ScenarioResult& result, MetricScope scope, Metric metric,
                                  std::optional<Group> group);

/// Ecosystem scope for this result's firm count.
MetricScope ecosystem_scope(const ScenarioResult& result);

}  // namespace fairsim
