#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairsim/ecosystem.hpp"
#include "fairsim/population.hpp"

namespace fairsim {

struct ConfusionCounts {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t tn = 0;
    std::int64_t fn = 0;

    void add(bool predicted, bool actual) {
        if (predicted && actual) ++tp;
        else if (predicted && !actual) ++fp;
        else if (!predicted && actual) ++fn;
        else ++tn;
    }
    void merge(const ConfusionCounts& o) { tp += o.tp; fp += o.fp; tn += o.tn; fn += o.fn; }
    std::int64_t total() const { return tp + fp + tn + fn; }
};

/// Rates are missing (not zero, not an error) on an empty denominator.
std::optional<double> tpr(const ConfusionCounts& c);
std::optional<double> fpr(const ConfusionCounts& c);
std::optional<double> sp_rate(const ConfusionCounts& c);

/// Between-group difference, non-protected minus protected, so a disadvantaged
/// protected group shows up positive. Missing if either side is missing.
std::optional<double> gap(std::optional<double> nonprot, std::optional<double> prot);

/// Counter scope: one per firm (counting that firm's decisions over the
/// applications it was targeted with) plus the ecosystem (counting each
/// application once with its OR-aggregated outcome).
struct MetricScope {
    int index = 0;  // 0..m-1 firm id, m = ecosystem

    static MetricScope firm(int id) { return {id}; }
    static MetricScope ecosystem(int num_firms) { return {num_firms}; }
    bool is_ecosystem(int num_firms) const { return index == num_firms; }
    bool operator==(const MetricScope&) const = default;
};

std::string scope_label(MetricScope scope, int num_firms);

enum class Metric { Tpr, Fpr, SpRate, TprGap, SpGap };

inline constexpr bool is_gap_metric(Metric m) { return m == Metric::TprGap || m == Metric::SpGap; }
const char* metric_label(Metric m);

/// Per-period confusion counts for one period log, indexed
/// scope.index * 2 + group_index(group) with scope.index in [0, m].
std::vector<ConfusionCounts> accumulate_period(const PeriodLog& log, int num_firms);

struct MetricSeries {
    MetricScope scope;
    Metric metric = Metric::Tpr;
    std::optional<Group> group;  // empty for gap metrics
    std::vector<std::optional<double>> values;  // indexed by period

    bool same_key(const MetricSeries& o) const {
        return scope == o.scope && metric == o.metric && group == o.group &&
               values.size() == o.values.size();
    }
};

enum class MetricsMode { PerPeriod, Cumulative };

/// Per-replication accumulator; replications each own one and are merged
/// after the parallel phase (count merging is plain integer addition).
class MetricsAccumulator {
  public:
    MetricsAccumulator(int num_firms, int periods, MetricsMode mode);

    void accumulate(const PeriodLog& log);

    const ConfusionCounts& at(MetricScope scope, Group group, int period) const;

    /// All series in canonical order: ecosystem first then firms ascending;
    /// within a scope tpr/fpr/sp_rate for non-protected then protected, then
    /// tpr_gap and sp_gap. Cumulative mode sums counts over periods <= p
    /// before computing rates.
    std::vector<MetricSeries> to_series() const;

  private:
    int num_firms_;
    int periods_;
    MetricsMode mode_;
    std::vector<ConfusionCounts> counts_;  // [(scope * 2 + group) * periods + period]

    std::size_t slot(int scope_index, int group_idx, int period) const;
};

/// Replication-averaged series: per-period mean and sample standard deviation
/// over the replications where the value is present, plus that count.
struct AveragedSeries {
    MetricScope scope;
    Metric metric = Metric::Tpr;
    std::optional<Group> group;
    std::vector<std::optional<double>> mean;
    std::vector<std::optional<double>> stddev;  // 0 when a single value contributes
    std::vector<int> n;

    std::optional<double> final_mean() const { return mean.empty() ? std::nullopt : mean.back(); }
};

/// All inputs must share (scope, metric, group, length); throws ConfigError
/// otherwise.
AveragedSeries average_over_replications(const std::vector<MetricSeries>& series);

}  // namespace fairsim
