#pragma once

namespace fermihat {

enum class CompareMode { absolute, relative };

/// Numeric thresholds shared by the symbolic and numeric layers.
///
/// `zero_threshold` prunes coefficients when polynomials are built.
/// `check_tolerance` is the bound used when an operation asserts an identity
/// or when two values are compared.
struct ToleranceConfig {
  double zero_threshold = 1e-12;
  double check_tolerance = 1e-10;
  CompareMode mode = CompareMode::absolute;

  /// Throws GuardError unless 0 <= zero_threshold < 1 and check_tolerance >= 0.
  void validate() const;

  /// Defaults, with check_tolerance taken from FERMIHAT_TOL when it is set to
  /// a valid non-negative number.
  static ToleranceConfig from_env();
};

}  // namespace fermihat
