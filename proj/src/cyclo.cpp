// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cyclocap contributors

#include "cyclocap/cyclo.hpp"

#include <string>

#include "cyclocap/errors.hpp"

namespace cyclocap {

PolyphaseFrame dcd_decompose(const Eigen::VectorXd& x, Eigen::Index period) {
    if (period < 1) {
        throw ValidationError("dcd_decompose: period must be >= 1");
    }
    if (x.size() % period != 0) {
        throw ValidationError("dcd_decompose: sequence length " + std::to_string(x.size()) +
                              " is not a multiple of period " + std::to_string(period));
    }
    const Eigen::Index blocks = x.size() / period;
    PolyphaseFrame frame;
    frame.period = period;
    frame.components.reserve(static_cast<std::size_t>(period));
    for (Eigen::Index i = 0; i < period; ++i) {
        Eigen::VectorXd comp(blocks);
        for (Eigen::Index n = 0; n < blocks; ++n) {
            comp[n] = x[n * period + i];
        }
        frame.components.push_back(std::move(comp));
    }
    return frame;
}

Eigen::VectorXd dcd_reconstruct(const PolyphaseFrame& frame) {
    if (frame.period < 1 || frame.components.size() != static_cast<std::size_t>(frame.period)) {
        throw ValidationError("dcd_reconstruct: frame has " +
                              std::to_string(frame.components.size()) +
                              " components, period says " + std::to_string(frame.period));
    }
    const Eigen::Index blocks = frame.block_count();
    for (const auto& comp : frame.components) {
        if (comp.size() != blocks) {
            throw ValidationError("dcd_reconstruct: ragged components");
        }
    }
    Eigen::VectorXd out(blocks * frame.period);
    for (Eigen::Index n = 0; n < blocks; ++n) {
        for (Eigen::Index i = 0; i < frame.period; ++i) {
            out[n * frame.period + i] = frame.components[static_cast<std::size_t>(i)][n];
        }
    }
    return out;
}

}  // namespace cyclocap
