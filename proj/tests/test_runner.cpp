#include <doctest.h>

#include "fairsim/catalog.hpp"
#include "fairsim/errors.hpp"
#include "fairsim/export.hpp"
#include "fairsim/replication.hpp"
#include "fairsim/runner.hpp"

using namespace fairsim;

namespace {

ScenarioConfig tiny_scenario(int replications = 4) {
    ScenarioConfig c;
    c.name = "tiny";
    c.n = 60;
    c.f = 0.5;
    c.periods = 5;
    c.applicants_per_period = 20;
    c.replications = replications;
    c.base_seed = 4242;
    c.firms = {FirmConfig{0, PerGroup::both(0.6), PerGroup::both(0.8), 0.0},
               FirmConfig{1, PerGroup::both(0.7), PerGroup::both(0.9), 0.0}};
    return c;
}

bool same_series(const std::vector<MetricSeries>& a, const std::vector<MetricSeries>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].same_key(b[i])) return false;
        for (std::size_t p = 0; p < a[i].values.size(); ++p)
            if (a[i].values[p] != b[i].values[p]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("replications are bitwise deterministic and seed-separated") {
    const ScenarioConfig c = tiny_scenario();
    const ReplicationResult r1 = run_replication(c, 2);
    const ReplicationResult r2 = run_replication(c, 2);
    const ReplicationResult r3 = run_replication(c, 3);
    CHECK(r1.seed == derive_seed(c.base_seed, 2));
    CHECK(same_series(r1.series, r2.series));
    CHECK_FALSE(same_series(r1.series, r3.series));
    for (const MetricSeries& s : r1.series) CHECK(s.values.size() == 5);
}

TEST_CASE("replication logs are kept only on request") {
    const ScenarioConfig c = tiny_scenario();
    CHECK(run_replication(c, 0).logs.empty());
    const ReplicationResult with_logs = run_replication(c, 0, ReplicationOptions{true});
    REQUIRE(with_logs.logs.size() == 5);
    for (const PeriodLog& log : with_logs.logs) CHECK(log.records.size() == 20);
}

TEST_CASE("run_scenario with one replication echoes it with zero spread") {
    const ScenarioConfig c = tiny_scenario(1);
    const ScenarioResult result = run_scenario(c);
    const ReplicationResult rep = run_replication(c, 0);
    REQUIRE(result.series.size() == rep.series.size());
    for (std::size_t i = 0; i < result.series.size(); ++i) {
        for (std::size_t p = 0; p < rep.series[i].values.size(); ++p) {
            CHECK(result.series[i].mean[p] == rep.series[i].values[p]);
            if (rep.series[i].values[p]) {
                CHECK(*result.series[i].stddev[p] == 0.0);
                CHECK(result.series[i].n[p] == 1);
            }
        }
    }
}

TEST_CASE("parallel and serial execution agree exactly") {
    const ScenarioConfig c = tiny_scenario(8);
    const ScenarioResult serial = run_scenario(c, RunOptions{1, false});
    const ScenarioResult parallel = run_scenario(c, RunOptions{8, false});
    CHECK(metrics_csv(serial) == metrics_csv(parallel));
}

TEST_CASE("every scope and metric is present for every group") {
    const ScenarioResult result = run_scenario(tiny_scenario(2));
    CHECK(result.series.size() == 3 * 8);
    CHECK(result.engine_version == std::string("0.1.0"));
    CHECK_NOTHROW(find_series(result, ecosystem_scope(result), Metric::TprGap, std::nullopt));
    CHECK_NOTHROW(find_series(result, MetricScope::firm(1), Metric::SpRate, Group::Protected));
    CHECK_THROWS_AS(find_series(result, MetricScope::firm(5), Metric::Tpr, Group::Protected),
                    ConfigError);
}

TEST_CASE("replication series are retained only on request") {
    const ScenarioConfig c = tiny_scenario(3);
    CHECK(run_scenario(c).replication_series.empty());
    const ScenarioResult kept = run_scenario(c, RunOptions{0, true});
    REQUIRE(kept.replication_series.size() == 3);
    CHECK(same_series(kept.replication_series[1], run_replication(c, 1).series));
}

TEST_CASE("sweep produces one result per value in order") {
    const ScenarioConfig base = tiny_scenario(2);
    const std::vector<ScenarioResult> results = sweep(base, SweepAxis::Threshold, {0.3, 0.5, 0.7});
    REQUIRE(results.size() == 3);
    CHECK(results[0].config.firms[0].threshold.non_prot == 0.3);
    CHECK(results[2].config.firms[1].threshold.prot == 0.7);
    CHECK(results[0].config.name == "tiny-threshold-0.3");
    CHECK(results[0].config.base_seed == base.base_seed);

    CHECK(sweep(base, SweepAxis::Cost, {}).empty());
}

TEST_CASE("a one-value sweep equals run_scenario on the modified config") {
    const ScenarioConfig base = tiny_scenario(3);
    const std::vector<ScenarioResult> swept = sweep(base, SweepAxis::Sophistication, {0.85});
    ScenarioConfig modified = base;
    apply_sweep_value(modified, SweepAxis::Sophistication, 0.85);
    const ScenarioResult direct = run_scenario(modified);
    REQUIRE(swept.size() == 1);
    CHECK(metrics_csv(swept[0]) == metrics_csv(direct));
}

TEST_CASE("sweep values out of range are rejected") {
    CHECK_THROWS_AS(sweep(tiny_scenario(1), SweepAxis::Threshold, {1.5}), ConfigError);
    CHECK_THROWS_AS(sweep(tiny_scenario(1), SweepAxis::ProtectedFraction, {-0.1}), ConfigError);
}
