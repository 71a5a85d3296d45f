#pragma once

#include <cstdint>
#include <vector>

#include "fairsim/config.hpp"
#include "fairsim/metrics.hpp"

namespace fairsim {

struct ReplicationOptions {
    bool keep_logs = false;  // retain the raw per-period event logs
};

struct ReplicationResult {
    std::uint64_t seed = 0;
    std::vector<MetricSeries> series;  // canonical order, see MetricsAccumulator
    std::vector<PeriodLog> logs;       // populated only when keep_logs
};

/// One independent seeded run: build the population from
/// derive_seed(base_seed, replication_index), run the configured periods, and
/// return the per-period metric series. Bitwise deterministic in
/// (config, replication_index).
ReplicationResult run_replication(const ScenarioConfig& config, int replication_index,
                                  const ReplicationOptions& options = {});

}  // namespace fairsim
