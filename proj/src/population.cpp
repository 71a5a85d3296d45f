#include "fairsim/population.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "fairsim/errors.hpp"

namespace fairsim {

int Population::protected_count() const {
    return static_cast<int>(std::count_if(individuals.begin(), individuals.end(),
                                          [](const Individual& i) { return i.group == Group::Protected; }));
}

Population init_population(int n, double f, const QualityDistConfig& dist, Rng& rng) {
    if (n < 1) throw ConfigError("n: must be >= 1, got " + std::to_string(n));
    if (!(f >= 0.0 && f <= 1.0)) throw ConfigError("f: must be in [0, 1], got " + std::to_string(f));
    if (!(dist.std_dev > 0.0)) throw ConfigError("quality.std_dev: must be > 0");
    if (!(dist.base_mean > 0.0 && dist.base_mean < 1.0)) throw ConfigError("quality.base_mean: must be in (0, 1)");
    if (dist.protected_shift < 0.0) throw ConfigError("quality.protected_shift: must be >= 0");
    const double shifted = dist.base_mean - dist.protected_shift;
    if (!(shifted > 0.0 && shifted < 1.0))
        throw ConfigError("quality.protected_shift: base_mean - protected_shift must stay in (0, 1)");

    const int protected_count = static_cast<int>(std::llround(f * static_cast<double>(n)));
    const std::vector<int> protected_ids = rng.sample_without_replacement(n, protected_count);
    std::vector<char> is_protected(static_cast<std::size_t>(n), 0);
    for (int id : protected_ids) is_protected[static_cast<std::size_t>(id)] = 1;

    Population pop;
    pop.protected_fraction = f;
    pop.individuals.reserve(static_cast<std::size_t>(n));
    for (int id = 0; id < n; ++id) {
        const Group g = is_protected[static_cast<std::size_t>(id)] ? Group::Protected : Group::NonProtected;
        const double q = std::clamp(rng.normal(dist.mean_for(g), dist.std_dev), 0.0, 1.0);
        pop.individuals.push_back(Individual{id, g, q});
    }
    return pop;
}

Individual apply_feedback(Individual ind, bool repaid, double reward, double penalty) {
    assert(reward >= 0.0 && penalty <= 0.0);
    ind.quality = std::clamp(ind.quality + (repaid ? reward : penalty), 0.0, 1.0);
    return ind;
}

bool draw_ground_truth(const Individual& ind, Rng& rng) {
    assert(ind.quality >= 0.0 && ind.quality <= 1.0);
    return rng.bernoulli(ind.quality);
}

}  // namespace fairsim
