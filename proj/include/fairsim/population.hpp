#pragma once

#include <cstdint>
#include <vector>

#include "fairsim/rng.hpp"

namespace fairsim {

enum class Group : std::uint8_t { Protected = 0, NonProtected = 1 };

/// Stable index used wherever counters are kept per group.
inline constexpr int group_index(Group g) { return g == Group::Protected ? 0 : 1; }

inline constexpr const char* group_label(Group g) {
    return g == Group::Protected ? "protected" : "non_protected";
}

struct Individual {
    int id = 0;
    Group group = Group::NonProtected;
    double quality = 0.0;  // latent repayment probability, always in [0, 1]
};

/// Initial quality law: Normal(base_mean, std_dev) clipped to [0, 1], with the
/// protected group's mean shifted down by protected_shift.
struct QualityDistConfig {
    double base_mean = 0.65;
    double std_dev = 0.15;
    double protected_shift = 0.10;

    double mean_for(Group g) const {
        return g == Group::Protected ? base_mean - protected_shift : base_mean;
    }
};

struct Population {
    std::vector<Individual> individuals;  // indexed by id
    double protected_fraction = 0.0;      // configured f

    int size() const { return static_cast<int>(individuals.size()); }
    int protected_count() const;
};

/// Builds n individuals with exactly round(f*n) of them protected; which ids
/// are protected is random, the count is not. Consumes the stream in a fixed
/// order: first the protected-id subset, then one quality draw per id
/// ascending. Throws ConfigError on invalid parameters.
Population init_population(int n, double f, const QualityDistConfig& dist, Rng& rng);

/// Quality update after a realized loan: +reward when repaid, +penalty when
/// defaulted, clipped to [0, 1]. reward >= 0 and penalty <= 0 are required.
Individual apply_feedback(Individual ind, bool repaid, double reward, double penalty);

/// One Bernoulli(quality) draw; the counterfactual repayment label shared by
/// every firm evaluating this application.
bool draw_ground_truth(const Individual& ind, Rng& rng);

}  // namespace fairsim
