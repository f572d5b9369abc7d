#pragma once

#include <cstdint>
#include <random>

#include "sied/bigint.hpp"

namespace sied {

/// Deterministic seedable random source. Every run of the toolkit is fully
/// determined by one 64-bit seed; independent substreams come from fork(),
/// so trial order (or parallel execution) cannot change results.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();
    // Uniform in [0, n), n > 0.
    std::uint64_t below_u64(std::uint64_t n);
    int next_bit();
    // Uniform double in [0, 1).
    double next_unit();
    // Rounded centered Gaussian, hand-rolled Box-Muller (the std distributions
    // are implementation-defined and would break cross-platform determinism).
    long gaussian_int(double sigma);

    // Uniform in [0, n), n > 0.
    BigInt below(const BigInt& n);
    // Uniform over the units of Z_n: value in [1, n) with gcd(value, n) = 1.
    BigInt unit(const BigInt& n);

    // Independent derived stream; fork(s) depends only on (seed, s).
    Rng fork(std::uint64_t salt) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    bool have_cached_gauss_ = false;
    double cached_gauss_ = 0.0;
};

// SplitMix64 mixing step, used for seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace sied
