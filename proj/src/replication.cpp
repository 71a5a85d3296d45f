#include "fairsim/replication.hpp"

#include "fairsim/rng.hpp"

namespace fairsim {

ReplicationResult run_replication(const ScenarioConfig& config, int replication_index,
                                  const ReplicationOptions& options) {
    ReplicationResult result;
    result.seed = derive_seed(config.base_seed, static_cast<std::uint64_t>(replication_index));

    Rng rng(result.seed);
    Population pop = init_population(config.n, config.f, config.quality, rng);
    const TargetingPools pools = make_targeting_pools(config.firms);

    PeriodParams params;
    params.applicants_per_period = config.applicants_per_period;
    params.reward = config.reward;
    params.penalty = config.penalty;
    params.targeting = config.targeting;

    MetricsAccumulator acc(config.num_firms(), config.periods, config.metrics_mode);
    PeriodLog log;
    for (int period = 0; period < config.periods; ++period) {
        run_period(pop, config.firms, pools, params, period, rng, log);
        acc.accumulate(log);
        if (options.keep_logs) result.logs.push_back(log);
    }
    result.series = acc.to_series();
    return result;
}

}  // namespace fairsim
