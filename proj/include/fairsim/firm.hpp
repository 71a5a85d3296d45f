#pragma once

#include <algorithm>
#include <cmath>

#include "fairsim/population.hpp"
#include "fairsim/rng.hpp"

namespace fairsim {

/// One value per group. Unbiased firms carry the same value on both sides.
struct PerGroup {
    double non_prot = 0.0;
    double prot = 0.0;

    static PerGroup both(double v) { return PerGroup{v, v}; }
    double of(Group g) const { return g == Group::Protected ? prot : non_prot; }
    bool equal_across_groups() const { return non_prot == prot; }
};

/// A lender: per-group risk threshold tau, per-group sophistication s (the
/// estimator error variance is 1 - s), and a cost of service that turns a
/// would-repay borrower into a default with probability cost.
struct FirmConfig {
    int id = 0;
    PerGroup threshold;
    PerGroup sophistication;
    double cost = 0.0;
};

struct Estimate {
    int firm_id = 0;
    int individual_id = 0;
    double value = 0.0;  // clipped to [0, 1]
    double raw = 0.0;    // pre-clip, kept for noise calibration
};

/// Q-hat = clip(Q + eps, 0, 1) with eps ~ Normal(0, 1 - s_g). Always consumes
/// one normal draw, including at s = 1 where the noise is exactly zero.
inline Estimate estimate_quality(const FirmConfig& firm, const Individual& ind, Rng& rng) {
    const double s = firm.sophistication.of(ind.group);
    const double raw = ind.quality + rng.normal(0.0, std::sqrt(1.0 - s));
    return Estimate{firm.id, ind.id, std::clamp(raw, 0.0, 1.0), raw};
}

/// Approve iff the estimate strictly exceeds the group's threshold.
inline bool decide(const FirmConfig& firm, const Estimate& est, Group group) {
    return est.value > firm.threshold.of(group);
}

}  // namespace fairsim
