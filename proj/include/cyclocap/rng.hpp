// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cyclocap contributors

#pragma once

#include <cstdint>
#include <random>

namespace cyclocap {

/// Derives the seed of substream `stream` from a base seed (SplitMix64 mix).
/// This is the counter scheme used everywhere a seeded pipeline needs
/// independent substreams (Monte Carlo trials, generator draws): results are
/// reproducible and independent of evaluation order or thread count.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0,1) from a raw 64-bit word (53-bit mantissa).
double to_unit_interval(std::uint64_t word);

/// Seeded uniform/Gaussian source. The Gaussian transform is an explicit
/// Box-Muller so a given seed produces the same sequence under any standard
/// library (std::normal_distribution is implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed, 0x9e3779b97f4a7c15ull)) {}

    double uniform() { return to_unit_interval(engine_()); }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace cyclocap
