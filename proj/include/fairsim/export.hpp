#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fairsim/ecosystem.hpp"
#include "fairsim/runner.hpp"

namespace fairsim {

/// "%.6f" everywhere a rate or gap is written; byte-stable across runs.
std::string format_fixed6(double v);

inline constexpr const char* kMetricsCsvHeader =
    "scenario,scope,group_or_gap,metric,period,mean,std,n_replications";

/// One row per (series, period): scenario, scope, group_or_gap, metric,
/// period, mean, std, n_replications. Missing values print as empty fields.
/// Gap columns follow the non-protected-minus-protected convention.
void write_metrics_csv(std::ostream& os, const ScenarioResult& result);
std::string metrics_csv(const ScenarioResult& result);

inline constexpr const char* kEventsCsvHeader =
    "replication,period,individual_id,group,true_quality,ground_truth,firm_id,estimate,decision,"
    "outcome,lender,realized_repaid";

/// One row per (application record, targeted firm) for one replication's logs.
void write_events_rows(std::ostream& os, int replication, const std::vector<PeriodLog>& logs);

/// Run manifest: scenario name, engine version, base seed, UTC timestamp, and
/// the full config echo.
std::string manifest_json(const ScenarioResult& result);

}  // namespace fairsim
