#pragma once

#include <string>
#include <vector>

#include "tgclaims/grid.hpp"

namespace tgclaims {

enum class BaselineFamily { exponential, weibull, tabulated };

/// Result of the decreasing-failure-rate probe on a baseline.
struct DfrCheck {
  bool is_dfr = false;
  double witness_x = 0.0;  // location where the hazard increases, if any
};

/// Absolutely continuous baseline distribution on [0, inf).
///
/// cdf/sf/pdf/quantile/hazard are the usual maps. pdf(0) may legitimately be
/// +infinity (weibull with shape < 1); callers that care must handle it.
class Baseline {
 public:
  static Baseline exponential(double mean);
  static Baseline weibull(double shape, double scale);
  /// Piecewise-linear cdf through (x[i], u[i]); x strictly increasing from 0,
  /// u strictly increasing from 0 to 1.
  static Baseline tabulated(std::vector<double> x, std::vector<double> u);

  double cdf(double x) const;
  double sf(double x) const { return 1.0 - cdf(x); }
  double pdf(double x) const;
  double quantile(double u) const;
  double hazard(double x) const;

  /// Closed-form answer for exponential (always) and weibull (shape <= 1);
  /// tabulated baselines are probed on a quantile-spaced grid, and a hazard
  /// increase beyond the grid slack refutes DFR with a witness location.
  DfrCheck is_dfr(const GridSpec& grid = {}) const;

  BaselineFamily family() const { return family_; }
  std::string describe() const;

  // Stored parameters, meaningful for the matching family only (used by
  // scenario re-serialization).
  double mean() const { return mean_; }
  double shape() const { return shape_; }
  double scale() const { return scale_; }
  const std::vector<double>& knots_x() const { return tab_x_; }
  const std::vector<double>& knots_u() const { return tab_u_; }

  friend bool operator==(const Baseline&, const Baseline&) = default;

 private:
  Baseline() = default;

  BaselineFamily family_ = BaselineFamily::exponential;
  double mean_ = 1.0;    // exponential
  double shape_ = 1.0;   // weibull
  double scale_ = 1.0;   // weibull
  std::vector<double> tab_x_;
  std::vector<double> tab_u_;
};

}  // namespace tgclaims
