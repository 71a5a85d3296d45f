#include "fairsim/export.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace fairsim {

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void write_metrics_csv(std::ostream& os, const ScenarioResult& result) {
    const int m = result.config.num_firms();
    os << kMetricsCsvHeader << '\n';
    for (const AveragedSeries& s : result.series) {
        const std::string scope = scope_label(s.scope, m);
        const std::string group_or_gap = s.group ? group_label(*s.group) : "gap";
        const char* metric = metric_label(s.metric);
        for (std::size_t p = 0; p < s.mean.size(); ++p) {
            os << result.config.name << ',' << scope << ',' << group_or_gap << ',' << metric << ','
               << p << ',';
            if (s.mean[p]) os << format_fixed6(*s.mean[p]);
            os << ',';
            if (s.stddev[p]) os << format_fixed6(*s.stddev[p]);
            os << ',' << s.n[p] << '\n';
        }
    }
}

std::string metrics_csv(const ScenarioResult& result) {
    std::ostringstream os;
    write_metrics_csv(os, result);
    return os.str();
}

void write_events_rows(std::ostream& os, int replication, const std::vector<PeriodLog>& logs) {
    for (const PeriodLog& log : logs) {
        for (const ApplicationRecord& rec : log.records) {
            for (std::size_t i = 0; i < rec.targeted_firms.size(); ++i) {
                os << replication << ',' << log.period << ',' << rec.individual_id << ','
                   << group_label(rec.group) << ',' << format_fixed6(rec.true_quality) << ','
                   << (rec.ground_truth ? 1 : 0) << ',' << rec.targeted_firms[i] << ','
                   << format_fixed6(rec.estimates[i]) << ',' << int(rec.decisions[i]) << ','
                   << (rec.outcome ? 1 : 0) << ',';
                if (rec.lender) os << *rec.lender;
                os << ',';
                if (rec.realized_repaid) os << (*rec.realized_repaid ? 1 : 0);
                os << '\n';
            }
        }
    }
}

std::string manifest_json(const ScenarioResult& result) {
    nlohmann::json root;
    root["scenario"] = result.config.name;
    root["engine_version"] = result.engine_version;
    root["base_seed"] = result.config.base_seed;
    root["replications"] = result.config.replications;
    root["timestamp_utc"] = result.timestamp_utc;
    root["config"] = nlohmann::json::parse(config_to_json(result.config));
    return root.dump(2) + "\n";
}

}  // namespace fairsim
