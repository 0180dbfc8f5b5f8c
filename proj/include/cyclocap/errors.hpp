// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cyclocap contributors

#pragma once

#include <stdexcept>
#include <string>

namespace cyclocap {

/// Invalid parameters, malformed inputs, broken invariants. CLI exit code 1.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical degeneracy: covariance not positive definite within tolerance,
/// near-singular whitening, nonpositive cell noise power. Never regularized
/// away; surfaces to the caller. CLI exit code 2.
class DegeneracyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed structured-text input (config or channel CSV); carries the
/// 1-based line number of the offending line.
class ParseError : public ValidationError {
  public:
    ParseError(const std::string& what, long line)
        : ValidationError(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    long line() const { return line_; }

  private:
    long line_;
};

}  // namespace cyclocap
