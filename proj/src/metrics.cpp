#include "fairsim/metrics.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "fairsim/errors.hpp"

namespace fairsim {

std::optional<double> tpr(const ConfusionCounts& c) {
    const auto denom = c.tp + c.fn;
    if (denom == 0) return std::nullopt;
    return static_cast<double>(c.tp) / static_cast<double>(denom);
}

std::optional<double> fpr(const ConfusionCounts& c) {
    const auto denom = c.fp + c.tn;
    if (denom == 0) return std::nullopt;
    return static_cast<double>(c.fp) / static_cast<double>(denom);
}

std::optional<double> sp_rate(const ConfusionCounts& c) {
    const auto denom = c.total();
    if (denom == 0) return std::nullopt;
    return static_cast<double>(c.tp + c.fp) / static_cast<double>(denom);
}

std::optional<double> gap(std::optional<double> nonprot, std::optional<double> prot) {
    if (!nonprot || !prot) return std::nullopt;
    return *nonprot - *prot;
}

std::string scope_label(MetricScope scope, int num_firms) {
    return scope.is_ecosystem(num_firms) ? "ecosystem" : "firm_" + std::to_string(scope.index);
}

const char* metric_label(Metric m) {
    switch (m) {
        case Metric::Tpr: return "tpr";
        case Metric::Fpr: return "fpr";
        case Metric::SpRate: return "sp_rate";
        case Metric::TprGap: return "tpr_gap";
        case Metric::SpGap: return "sp_gap";
    }
    throw std::logic_error("unreachable metric");
}

std::vector<ConfusionCounts> accumulate_period(const PeriodLog& log, int num_firms) {
    std::vector<ConfusionCounts> counts(static_cast<std::size_t>((num_firms + 1) * 2));
    for (const ApplicationRecord& rec : log.records) {
        const int g = group_index(rec.group);
        counts[static_cast<std::size_t>(num_firms * 2 + g)].add(rec.outcome, rec.ground_truth);
        for (std::size_t i = 0; i < rec.targeted_firms.size(); ++i) {
            const int fid = rec.targeted_firms[i];
            counts[static_cast<std::size_t>(fid * 2 + g)].add(rec.decisions[i] != 0, rec.ground_truth);
        }
    }
    return counts;
}

MetricsAccumulator::MetricsAccumulator(int num_firms, int periods, MetricsMode mode)
    : num_firms_(num_firms),
      periods_(periods),
      mode_(mode),
      counts_(static_cast<std::size_t>((num_firms + 1) * 2 * periods)) {}

std::size_t MetricsAccumulator::slot(int scope_index, int group_idx, int period) const {
    assert(scope_index >= 0 && scope_index <= num_firms_);
    assert(period >= 0 && period < periods_);
    return static_cast<std::size_t>((scope_index * 2 + group_idx) * periods_ + period);
}

void MetricsAccumulator::accumulate(const PeriodLog& log) {
    const std::vector<ConfusionCounts> period_counts = accumulate_period(log, num_firms_);
    for (int scope = 0; scope <= num_firms_; ++scope)
        for (int g = 0; g < 2; ++g)
            counts_[slot(scope, g, log.period)].merge(period_counts[static_cast<std::size_t>(scope * 2 + g)]);
}

const ConfusionCounts& MetricsAccumulator::at(MetricScope scope, Group group, int period) const {
    return counts_[slot(scope.index, group_index(group), period)];
}

std::vector<MetricSeries> MetricsAccumulator::to_series() const {
    static constexpr Group kGroups[] = {Group::NonProtected, Group::Protected};
    static constexpr Metric kRates[] = {Metric::Tpr, Metric::Fpr, Metric::SpRate};

    // Scope order: ecosystem, then firms ascending.
    std::vector<int> scopes;
    scopes.push_back(num_firms_);
    for (int f = 0; f < num_firms_; ++f) scopes.push_back(f);

    std::vector<MetricSeries> out;
    out.reserve(scopes.size() * 8);
    for (int scope : scopes) {
        // Effective counts honoring the metrics mode.
        std::vector<ConfusionCounts> np(static_cast<std::size_t>(periods_));
        std::vector<ConfusionCounts> pr(static_cast<std::size_t>(periods_));
        ConfusionCounts run_np, run_pr;
        for (int p = 0; p < periods_; ++p) {
            if (mode_ == MetricsMode::Cumulative) {
                run_np.merge(counts_[slot(scope, group_index(Group::NonProtected), p)]);
                run_pr.merge(counts_[slot(scope, group_index(Group::Protected), p)]);
                np[static_cast<std::size_t>(p)] = run_np;
                pr[static_cast<std::size_t>(p)] = run_pr;
            } else {
                np[static_cast<std::size_t>(p)] = counts_[slot(scope, group_index(Group::NonProtected), p)];
                pr[static_cast<std::size_t>(p)] = counts_[slot(scope, group_index(Group::Protected), p)];
            }
        }

        for (Metric metric : kRates) {
            for (Group g : kGroups) {
                MetricSeries s;
                s.scope = MetricScope{scope};
                s.metric = metric;
                s.group = g;
                s.values.resize(static_cast<std::size_t>(periods_));
                const auto& cs = (g == Group::Protected) ? pr : np;
                for (int p = 0; p < periods_; ++p) {
                    const ConfusionCounts& c = cs[static_cast<std::size_t>(p)];
                    s.values[static_cast<std::size_t>(p)] =
                        metric == Metric::Tpr ? tpr(c) : metric == Metric::Fpr ? fpr(c) : sp_rate(c);
                }
                out.push_back(std::move(s));
            }
        }
        for (Metric metric : {Metric::TprGap, Metric::SpGap}) {
            MetricSeries s;
            s.scope = MetricScope{scope};
            s.metric = metric;
            s.values.resize(static_cast<std::size_t>(periods_));
            for (int p = 0; p < periods_; ++p) {
                const ConfusionCounts& cn = np[static_cast<std::size_t>(p)];
                const ConfusionCounts& cp = pr[static_cast<std::size_t>(p)];
                s.values[static_cast<std::size_t>(p)] =
                    metric == Metric::TprGap ? gap(tpr(cn), tpr(cp)) : gap(sp_rate(cn), sp_rate(cp));
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

AveragedSeries average_over_replications(const std::vector<MetricSeries>& series) {
    if (series.empty()) throw ConfigError("average_over_replications: empty series list");
    for (const MetricSeries& s : series)
        if (!s.same_key(series.front()))
            throw ConfigError("average_over_replications: mismatched series shapes");

    const std::size_t periods = series.front().values.size();
    AveragedSeries avg;
    avg.scope = series.front().scope;
    avg.metric = series.front().metric;
    avg.group = series.front().group;
    avg.mean.resize(periods);
    avg.stddev.resize(periods);
    avg.n.resize(periods, 0);

    for (std::size_t p = 0; p < periods; ++p) {
        double sum = 0.0;
        int n = 0;
        for (const MetricSeries& s : series) {
            if (s.values[p]) {
                sum += *s.values[p];
                ++n;
            }
        }
        avg.n[p] = n;
        if (n == 0) continue;
        const double mean = sum / static_cast<double>(n);
        avg.mean[p] = mean;
        if (n == 1) {
            avg.stddev[p] = 0.0;
            continue;
        }
        double ss = 0.0;
        for (const MetricSeries& s : series) {
            if (s.values[p]) {
                const double d = *s.values[p] - mean;
                ss += d * d;
            }
        }
        avg.stddev[p] = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return avg;
}

}  // namespace fairsim
