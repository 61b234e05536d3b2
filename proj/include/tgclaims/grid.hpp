#pragma once

namespace tgclaims {

/// Evaluation-grid parameters shared by the numeric checks. Grids are
/// quantile-spaced over the probability band [coverage_lower, coverage_upper]
/// of the continuous part of the distribution(s) under test, so points
/// concentrate where the mass lives.
struct GridSpec {
  int point_count = 1024;
  double coverage_lower = 1e-4;
  double coverage_upper = 1.0 - 1e-4;
  double slack = 1e-12;

  /// Throws std::invalid_argument when the band or point count is unusable.
  void validate() const;
};

}  // namespace tgclaims
