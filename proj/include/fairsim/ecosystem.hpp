#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fairsim/firm.hpp"
#include "fairsim/population.hpp"
#include "fairsim/rng.hpp"

namespace fairsim {

/// Which firms an applicant sends an application to.
struct TargetingPolicy {
    enum class Kind { AllFirms, RandomSubset, LowThresholdRandomSubset };
    Kind kind = Kind::AllFirms;
    int k = 0;  // subset size for the random variants

    static TargetingPolicy all_firms() { return {Kind::AllFirms, 0}; }
    static TargetingPolicy random_subset(int k) { return {Kind::RandomSubset, k}; }
    static TargetingPolicy low_threshold_subset(int k) { return {Kind::LowThresholdRandomSubset, k}; }
};

struct GroupTargeting {
    TargetingPolicy non_prot;
    TargetingPolicy prot;

    const TargetingPolicy& of(Group g) const { return g == Group::Protected ? prot : non_prot; }
};

/// Candidate pools precomputed from an immutable firm list.
struct TargetingPools {
    std::vector<int> all;       // every firm id, ascending
    std::vector<int> low_half;  // the floor(m/2) ids with the lowest
                                // non-protected threshold, ties by id
};

TargetingPools make_targeting_pools(const std::vector<FirmConfig>& firms);

/// Draws the targeted firm ids for one application event into `out`,
/// ascending. RandomSubset draws k distinct firms over all of them,
/// LowThresholdRandomSubset over the low-threshold half; redrawn
/// independently per event.
void target_firms(const TargetingPolicy& policy, const TargetingPools& pools, Rng& rng,
                  std::vector<int>& out);

/// a distinct applicant ids, uniform without replacement, ascending.
std::vector<int> select_applicants(const Population& pop, int a, Rng& rng);

/// Positive iff at least one firm approved. Requires a non-empty set.
bool aggregate_outcome(std::span<const std::uint8_t> decisions);

/// Uniform choice among the approving firms; consumes exactly one uniform
/// draw. Requires a non-empty set.
int assign_lender(std::span<const int> approving, Rng& rng);

/// The repayment that actually happens: a would-default borrower always
/// defaults; a would-repay borrower repays with probability 1 - lender.cost.
/// Consumes exactly one uniform draw.
bool realize_repayment(bool ground_truth, const FirmConfig& lender, Rng& rng);

/// Everything observed for one application event.
struct ApplicationRecord {
    int period = 0;
    int individual_id = 0;
    Group group = Group::NonProtected;
    double true_quality = 0.0;
    bool ground_truth = false;              // counterfactual label Y
    std::vector<int> targeted_firms;        // ascending firm ids
    std::vector<double> estimates;          // parallel to targeted_firms
    std::vector<std::uint8_t> decisions;    // parallel, 0/1
    bool outcome = false;                   // OR of decisions
    std::optional<int> lender;              // present iff outcome
    std::optional<bool> realized_repaid;    // present iff outcome
};

struct PeriodLog {
    int period = 0;
    std::vector<ApplicationRecord> records;  // one per sampled applicant, by id
};

struct PeriodParams {
    int applicants_per_period = 0;
    double reward = 0.0;
    double penalty = 0.0;
    GroupTargeting targeting;
};

/// One decision cycle. Applicants are processed in ascending id order; per
/// applicant the stream is consumed as: ground truth, targeting, one estimate
/// per targeted firm ascending, then exactly two draws for lender choice and
/// realized repayment (consumed even on a denial, so consumption does not
/// depend on decisions and runs sharing a seed stay draw-aligned). Denied
/// applicants keep their quality. The log object is reused across periods to
/// keep buffers warm.
void run_period(Population& pop, const std::vector<FirmConfig>& firms, const TargetingPools& pools,
                const PeriodParams& params, int period, Rng& rng, PeriodLog& log);

}  // namespace fairsim
