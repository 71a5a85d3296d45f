#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fairsim {

/// SplitMix64 finalizer (Steele/Lea/Flood constants). Bijective on uint64.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Replication seed: the SplitMix64 output at position (index + 1) of the
/// stream whose state starts at base_seed. The increment is odd, so states
/// never collide at a fixed base seed, and mix64 is a bijection, so neither
/// do the derived seeds.
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
    return mix64(base_seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Random stream owned by a single replication.
///
/// Raw 64-bit words come from std::mt19937_64, whose output sequence is fixed
/// by the standard, and every distribution on top is implemented here, so the
/// same seed yields the same draws on any conforming toolchain. Draw
/// consumption per call:
///   - uniform():          one word
///   - bernoulli(p):       one word
///   - below(n):           zero words for n <= 1, otherwise one word per
///                         mask-rejection round
///   - normal_std():       two words when the Box-Muller spare is empty,
///                         zero when it is cached
///   - sample_without_replacement(n, k): k below(n - i) calls
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// True with probability p (p <= 0 never, p >= 1 always).
    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, bound) by power-of-two mask rejection.
    std::uint64_t below(std::uint64_t bound);

    /// Standard normal via Box-Muller; the second value of each pair is
    /// cached inside the stream.
    double normal_std();

    double normal(double mean, double stddev) { return mean + stddev * normal_std(); }

    /// k distinct values from {0,...,n-1}, uniform over k-subsets, returned
    /// ascending. Partial Fisher-Yates over a fresh identity array.
    std::vector<int> sample_without_replacement(int n, int k);

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace fairsim
