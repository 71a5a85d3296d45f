#include "fairsim/ecosystem.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "fairsim/errors.hpp"

namespace fairsim {

TargetingPools make_targeting_pools(const std::vector<FirmConfig>& firms) {
    TargetingPools pools;
    const int m = static_cast<int>(firms.size());
    pools.all.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        assert(firms[static_cast<std::size_t>(i)].id == i);  // ids are positional
        pools.all[static_cast<std::size_t>(i)] = i;
    }

    std::vector<int> by_threshold = pools.all;
    std::sort(by_threshold.begin(), by_threshold.end(), [&](int a, int b) {
        const double ta = firms[static_cast<std::size_t>(a)].threshold.non_prot;
        const double tb = firms[static_cast<std::size_t>(b)].threshold.non_prot;
        return ta != tb ? ta < tb : a < b;
    });
    by_threshold.resize(static_cast<std::size_t>(m / 2));
    std::sort(by_threshold.begin(), by_threshold.end());
    pools.low_half = std::move(by_threshold);
    return pools;
}

namespace {

void draw_subset(const std::vector<int>& pool, int k, Rng& rng, std::vector<int>& out) {
    const int size = static_cast<int>(pool.size());
    if (k < 1 || k > size)
        throw ConfigError("targeting.k: subset size " + std::to_string(k) + " exceeds pool of " +
                          std::to_string(size) + " firms");
    const std::vector<int> picks = rng.sample_without_replacement(size, k);
    out.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(picks[static_cast<std::size_t>(i)])];
    std::sort(out.begin(), out.end());
}

}  // namespace

void target_firms(const TargetingPolicy& policy, const TargetingPools& pools, Rng& rng,
                  std::vector<int>& out) {
    switch (policy.kind) {
        case TargetingPolicy::Kind::AllFirms:
            out = pools.all;
            return;
        case TargetingPolicy::Kind::RandomSubset:
            draw_subset(pools.all, policy.k, rng, out);
            return;
        case TargetingPolicy::Kind::LowThresholdRandomSubset:
            draw_subset(pools.low_half, policy.k, rng, out);
            return;
    }
    throw std::logic_error("unreachable targeting kind");
}

std::vector<int> select_applicants(const Population& pop, int a, Rng& rng) {
    const int n = pop.size();
    if (a < 1 || a > n)
        throw ConfigError("applicants_per_period: must be in [1, n], got " + std::to_string(a) +
                          " with n = " + std::to_string(n));
    return rng.sample_without_replacement(n, a);
}

bool aggregate_outcome(std::span<const std::uint8_t> decisions) {
    if (decisions.empty()) throw std::logic_error("aggregate_outcome: empty decision set");
    return std::any_of(decisions.begin(), decisions.end(), [](std::uint8_t d) { return d != 0; });
}

int assign_lender(std::span<const int> approving, Rng& rng) {
    if (approving.empty()) throw std::logic_error("assign_lender: no approving firm");
    auto idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(approving.size()));
    if (idx >= approving.size()) idx = approving.size() - 1;  // u == 1 cannot happen, belt anyway
    return approving[idx];
}

bool realize_repayment(bool ground_truth, const FirmConfig& lender, Rng& rng) {
    const bool cost_default = rng.bernoulli(lender.cost);
    return ground_truth && !cost_default;
}

void run_period(Population& pop, const std::vector<FirmConfig>& firms, const TargetingPools& pools,
                const PeriodParams& params, int period, Rng& rng, PeriodLog& log) {
    const std::vector<int> applicants = select_applicants(pop, params.applicants_per_period, rng);

    log.period = period;
    log.records.resize(applicants.size());

    std::vector<int> approving;
    approving.reserve(firms.size());

    for (std::size_t i = 0; i < applicants.size(); ++i) {
        const int id = applicants[i];
        const Individual& ind = pop.individuals[static_cast<std::size_t>(id)];

        ApplicationRecord& rec = log.records[i];
        rec.period = period;
        rec.individual_id = id;
        rec.group = ind.group;
        rec.true_quality = ind.quality;
        rec.ground_truth = draw_ground_truth(ind, rng);

        target_firms(params.targeting.of(ind.group), pools, rng, rec.targeted_firms);
        rec.estimates.clear();
        rec.decisions.clear();
        approving.clear();
        for (int fid : rec.targeted_firms) {
            const FirmConfig& firm = firms[static_cast<std::size_t>(fid)];
            const Estimate est = estimate_quality(firm, ind, rng);
            const bool approved = decide(firm, est, ind.group);
            rec.estimates.push_back(est.value);
            rec.decisions.push_back(approved ? 1 : 0);
            if (approved) approving.push_back(fid);
        }

        rec.outcome = aggregate_outcome(rec.decisions);
        if (rec.outcome) {
            const int lender = assign_lender(approving, rng);
            const bool repaid = realize_repayment(rec.ground_truth, firms[static_cast<std::size_t>(lender)], rng);
            rec.lender = lender;
            rec.realized_repaid = repaid;
            pop.individuals[static_cast<std::size_t>(id)] =
                apply_feedback(ind, repaid, params.reward, params.penalty);
        } else {
            // Consume the two post-decision draws anyway so per-applicant
            // consumption is outcome-independent and runs sharing a seed stay
            // draw-aligned across configurations.
            rng.uniform();
            rng.uniform();
            rec.lender.reset();
            rec.realized_repaid.reset();
        }
    }
}

}  // namespace fairsim
