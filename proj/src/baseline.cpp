#include "tgclaims/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace tgclaims {

namespace {

void require_nonnegative(double x) {
  if (x < 0.0 || std::isnan(x))
    throw std::domain_error("baseline: x must be nonnegative");
}

}  // namespace

Baseline Baseline::exponential(double mean) {
  if (!(mean > 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("exponential: mean must be positive and finite");
  Baseline b;
  b.family_ = BaselineFamily::exponential;
  b.mean_ = mean;
  return b;
}

Baseline Baseline::weibull(double shape, double scale) {
  if (!(shape > 0.0) || !std::isfinite(shape))
    throw std::invalid_argument("weibull: shape must be positive and finite");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("weibull: scale must be positive and finite");
  Baseline b;
  b.family_ = BaselineFamily::weibull;
  b.shape_ = shape;
  b.scale_ = scale;
  return b;
}

Baseline Baseline::tabulated(std::vector<double> x, std::vector<double> u) {
  if (x.size() != u.size() || x.size() < 2)
    throw std::invalid_argument("tabulated: need matching x/u arrays of size >= 2");
  if (x.front() != 0.0 || u.front() != 0.0)
    throw std::invalid_argument("tabulated: table must start at (0, 0)");
  if (u.back() != 1.0)
    throw std::invalid_argument("tabulated: table must end at probability 1");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1]) || !(u[i] > u[i - 1]))
      throw std::invalid_argument("tabulated: x and u must be strictly increasing");
    if (!std::isfinite(x[i]))
      throw std::invalid_argument("tabulated: x values must be finite");
  }
  Baseline b;
  b.family_ = BaselineFamily::tabulated;
  b.tab_x_ = std::move(x);
  b.tab_u_ = std::move(u);
  return b;
}

double Baseline::cdf(double x) const {
  require_nonnegative(x);
  if (x == 0.0) return 0.0;
  switch (family_) {
    case BaselineFamily::exponential:
      return -std::expm1(-x / mean_);
    case BaselineFamily::weibull:
      return -std::expm1(-std::pow(x / scale_, shape_));
    case BaselineFamily::tabulated: {
      if (x >= tab_x_.back()) return 1.0;
      auto it = std::upper_bound(tab_x_.begin(), tab_x_.end(), x);
      std::size_t i = static_cast<std::size_t>(it - tab_x_.begin());
      double t = (x - tab_x_[i - 1]) / (tab_x_[i] - tab_x_[i - 1]);
      return tab_u_[i - 1] + t * (tab_u_[i] - tab_u_[i - 1]);
    }
  }
  return 0.0;
}

double Baseline::pdf(double x) const {
  require_nonnegative(x);
  switch (family_) {
    case BaselineFamily::exponential:
      return std::exp(-x / mean_) / mean_;
    case BaselineFamily::weibull: {
      if (x == 0.0) {
        // Density blows up at the origin for shape < 1; callers must treat
        // the infinity as a distinguished value, not a large float.
        if (shape_ < 1.0) return std::numeric_limits<double>::infinity();
        if (shape_ == 1.0) return 1.0 / scale_;
        return 0.0;
      }
      double z = x / scale_;
      return (shape_ / scale_) * std::pow(z, shape_ - 1.0) *
             std::exp(-std::pow(z, shape_));
    }
    case BaselineFamily::tabulated: {
      if (x >= tab_x_.back()) return 0.0;
      auto it = std::upper_bound(tab_x_.begin(), tab_x_.end(), x);
      std::size_t i = static_cast<std::size_t>(it - tab_x_.begin());
      if (i == 0) i = 1;
      return (tab_u_[i] - tab_u_[i - 1]) / (tab_x_[i] - tab_x_[i - 1]);
    }
  }
  return 0.0;
}

double Baseline::quantile(double u) const {
  if (!(u >= 0.0) || !(u < 1.0))
    throw std::domain_error("quantile: u must lie in [0, 1)");
  if (u == 0.0) return 0.0;
  switch (family_) {
    case BaselineFamily::exponential:
      return -mean_ * std::log1p(-u);
    case BaselineFamily::weibull:
      return scale_ * std::pow(-std::log1p(-u), 1.0 / shape_);
    case BaselineFamily::tabulated: {
      auto it = std::upper_bound(tab_u_.begin(), tab_u_.end(), u);
      std::size_t i = static_cast<std::size_t>(it - tab_u_.begin());
      if (i >= tab_u_.size()) return tab_x_.back();
      double t = (u - tab_u_[i - 1]) / (tab_u_[i] - tab_u_[i - 1]);
      return tab_x_[i - 1] + t * (tab_x_[i] - tab_x_[i - 1]);
    }
  }
  return 0.0;
}

double Baseline::hazard(double x) const {
  double s = sf(x);
  if (s <= 0.0)
    throw std::domain_error("hazard: undefined where the survival function vanishes");
  return pdf(x) / s;
}

DfrCheck Baseline::is_dfr(const GridSpec& grid) const {
  if (family_ == BaselineFamily::exponential) return {true, 0.0};
  if (family_ == BaselineFamily::weibull) {
    if (shape_ <= 1.0) return {true, 0.0};
    // Hazard (shape/scale) z^{shape-1} strictly increases; witness anywhere.
    return {false, scale_};
  }
  grid.validate();
  double prev_x = quantile(grid.coverage_lower);
  if (prev_x <= 0.0) prev_x = std::nextafter(0.0, 1.0);
  double prev = hazard(prev_x);
  for (int k = 1; k < grid.point_count; ++k) {
    double u = grid.coverage_lower +
               (grid.coverage_upper - grid.coverage_lower) *
                   static_cast<double>(k) / (grid.point_count - 1);
    double x = quantile(u);
    if (!(x > prev_x)) continue;
    double h = hazard(x);
    if (h > prev + grid.slack) return {false, prev_x};
    prev = h;
    prev_x = x;
  }
  return {true, 0.0};
}

std::string Baseline::describe() const {
  char buf[96];
  switch (family_) {
    case BaselineFamily::exponential:
      std::snprintf(buf, sizeof buf, "exponential(mean=%g)", mean_);
      return buf;
    case BaselineFamily::weibull:
      std::snprintf(buf, sizeof buf, "weibull(shape=%g, scale=%g)", shape_, scale_);
      return buf;
    case BaselineFamily::tabulated:
      std::snprintf(buf, sizeof buf, "tabulated(%zu knots)", tab_x_.size());
      return buf;
  }
  return "unknown";
}

}  // namespace tgclaims
