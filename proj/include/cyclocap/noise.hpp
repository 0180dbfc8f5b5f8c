// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cyclocap contributors

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace cyclocap {

/// One class of the sine-envelope noise model: magnitude, exponent applied to
/// |sin|, and phase in radians. Exponent 0 contributes a constant floor
/// (0^0 := 1 at sine zeros).
struct NoiseClass {
    double magnitude = 0.0;
    double exponent = 0.0;
    double phase_rad = 0.0;
};

/// Parameters of the sine-envelope cyclostationary noise model. The lag decay
/// constant alpha1 and the sampling interval are in seconds; n_noise is the
/// number of samples per noise cycle (mains cycle / t_samp, assumed integer).
struct KatayamaParams {
    std::vector<NoiseClass> classes;
    double alpha1 = 0.0;
    double t_samp = 0.0;
    Eigen::Index n_noise = 0;

    void validate() const;
};

/// Parameters of the filter-bank cyclostationary noise model: M FIR shaping
/// filters driven by a shared unit-variance white Gaussian input, with the
/// active filter switching on interval boundaries
/// 0 = n_0 < n_1 < ... < n_M = n_noise.
struct NassarParams {
    std::vector<Eigen::VectorXd> filters;
    std::vector<Eigen::Index> boundaries;  // full list, boundaries[0] == 0

    Eigen::Index n_noise() const { return boundaries.empty() ? 0 : boundaries.back(); }
    /// 0-based index of the filter active at time n (n taken mod n_noise).
    Eigen::Index filter_index(Eigen::Index n) const;

    void validate() const;
};

/// Periodic autocorrelation c(n,l) with period `period` and one-sided support
/// `support` (c(n,l) = 0 for l >= support). Negative lags are never stored:
/// c(n,-l) = c(n-l,l), which follows from c(n,l) = E{w[n+l]w[n]}.
class CyclicAutocorrelation {
  public:
    CyclicAutocorrelation(Eigen::Index period, Eigen::MatrixXd table);

    Eigen::Index period() const { return table_.rows(); }
    Eigen::Index support() const { return table_.cols(); }

    /// c(n, lag) for any integer n and lag (periodic in n, symmetric rule for
    /// negative lags, zero beyond the support).
    double at(Eigen::Index n, Eigen::Index lag) const;

    /// Time-averaged lag-0 power (1/N) sum_n c(n,0); the noise floor used by
    /// the input-SNR definition.
    double mean_lag0_power() const;

    /// Copy with the support shortened to `support` columns (values kept
    /// verbatim, larger lags zeroed). Extending the support is rejected.
    CyclicAutocorrelation truncated(Eigen::Index support) const;

    const Eigen::MatrixXd& table() const { return table_; }

  private:
    Eigen::MatrixXd table_;  // period x support, entry (n,l) = c(n,l)
};

/// c(n,l) = sum_i A_i |sin(pi n / N + theta_i)|^(kappa_i)
///          / (1 + (2 pi l t_samp / alpha1)^2), tabulated for l < support.
CyclicAutocorrelation katayama_autocorrelation(const KatayamaParams& params,
                                               Eigen::Index support);

/// c(n,l) = sum_m h_{I[n+l]}[m] h_{I[n]}[m-l]; support is the longest filter.
CyclicAutocorrelation nassar_autocorrelation(const NassarParams& params);

/// One sample path of the filter-bank noise: w[n] = (h_{I[n]} * v)[n] with a
/// shared white Gaussian v. Deterministic for a fixed seed.
Eigen::VectorXd nassar_sample_path(const NassarParams& params, Eigen::Index length,
                                   std::uint64_t seed);

/// Smallest L such that max_n |c(n,l)| < rel_threshold * max|c| for every
/// l >= L. A lag column exactly at the threshold is kept.
Eigen::Index truncate_support(const CyclicAutocorrelation& c, double rel_threshold);

/// Block covariance from the periodic table: entry (u,v) = c(v + offset, u-v).
/// Symmetric and banded (exact zeros where |u-v| >= support). Rejects
/// matrices whose smallest eigenvalue is <= 1e-10 times the largest; such
/// degeneracy is surfaced, never regularized.
Eigen::MatrixXd build_noise_covariance(const CyclicAutocorrelation& c, Eigen::Index dim,
                                       Eigen::Index offset);

/// CSV export with header n,l,c (17 significant digits).
void write_autocorrelation_csv(const CyclicAutocorrelation& c, std::ostream& out);

}  // namespace cyclocap
