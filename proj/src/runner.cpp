#include "fairsim/runner.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <mutex>
#include <thread>

#include "fairsim/errors.hpp"
#include "fairsim/version.hpp"

namespace fairsim {

namespace {

std::string utc_now_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::vector<AveragedSeries> average_replication_series(
    const std::vector<std::vector<MetricSeries>>& per_replication) {
    if (per_replication.empty()) throw ConfigError("no replication series to average");
    const std::size_t num_series = per_replication.front().size();
    std::vector<AveragedSeries> out;
    out.reserve(num_series);
    std::vector<MetricSeries> bucket;
    for (std::size_t i = 0; i < num_series; ++i) {
        bucket.clear();
        for (const auto& rep : per_replication) bucket.push_back(rep[i]);
        out.push_back(average_over_replications(bucket));
    }
    return out;
}

ScenarioResult assemble_result(const ScenarioConfig& config, std::vector<AveragedSeries> series) {
    ScenarioResult result;
    result.config = config;
    result.engine_version = kEngineVersion;
    result.timestamp_utc = utc_now_iso8601();
    result.series = std::move(series);
    return result;
}

ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& options) {
    validate(config);

    const int replications = config.replications;
    int parallelism = options.parallelism > 0
                          ? options.parallelism
                          : static_cast<int>(std::thread::hardware_concurrency());
    if (parallelism < 1) parallelism = 1;
    if (parallelism > replications) parallelism = replications;

    std::vector<std::vector<MetricSeries>> per_rep(static_cast<std::size_t>(replications));
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (true) {
            const int index = next.fetch_add(1);
            if (index >= replications) return;
            try {
                ReplicationResult rep = run_replication(config, index);
                per_rep[static_cast<std::size_t>(index)] = std::move(rep.series);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (parallelism == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(parallelism));
        for (int i = 0; i < parallelism; ++i) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    ScenarioResult result = assemble_result(config, average_replication_series(per_rep));
    if (options.keep_replication_series) result.replication_series = std::move(per_rep);
    return result;
}

std::vector<ScenarioResult> sweep(const ScenarioConfig& base, SweepAxis axis,
                                  const std::vector<double>& values, const RunOptions& options) {
    std::vector<ScenarioResult> results;
    results.reserve(values.size());
    for (double value : values) {
        ScenarioConfig config = base;
        apply_sweep_value(config, axis, value);
        results.push_back(run_scenario(config, options));
    }
    return results;
}

const AveragedSeries& find_series(const ScenarioResult& result, MetricScope scope, Metric metric,
                                  std::optional<Group> group) {
    for (const AveragedSeries& s : result.series)
        if (s.scope == scope && s.metric == metric && s.group == group) return s;
    throw ConfigError("series not found: scope " + std::to_string(scope.index) + ", metric " +
                      metric_label(metric));
}

MetricScope ecosystem_scope(const ScenarioResult& result) {
    return MetricScope::ecosystem(result.config.num_firms());
}

}  // namespace fairsim
