// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cyclocap contributors

#pragma once

#include <Eigen/Core>
#include <vector>

namespace cyclocap {

/// Polyphase frame of a scalar sequence: component i holds x[n*period + i],
/// n = 0..block_count-1. All components have equal length.
struct PolyphaseFrame {
    Eigen::Index period = 0;
    std::vector<Eigen::VectorXd> components;

    Eigen::Index block_count() const {
        return components.empty() ? 0 : components.front().size();
    }
};

/// Splits x into its `period` decimated components. The length of x must be
/// an integer multiple of `period`; shorter inputs are rejected rather than
/// zero-padded (padding would bias autocorrelation estimates downstream).
PolyphaseFrame dcd_decompose(const Eigen::VectorXd& x, Eigen::Index period);

/// Interleaves the components back into the scalar sequence:
/// out[m] = component[m % period][m / period]. Exact inverse of
/// dcd_decompose.
Eigen::VectorXd dcd_reconstruct(const PolyphaseFrame& frame);

}  // namespace cyclocap
