// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cyclocap contributors

#include "cyclocap/rng.hpp"

#include <cmath>

namespace cyclocap {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // SplitMix64 finalizer applied to seed + stream * golden gamma.
    std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ull + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double to_unit_interval(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0,1] so the log is finite.
    const double u1 = 1.0 - to_unit_interval(engine_());
    const double u2 = to_unit_interval(engine_());
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

}  // namespace cyclocap
