#include "tgclaims/orders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tgclaims {

namespace {

double const kUnderflowFloor = 1e-300;

// cdf of the continuous part: (cdf - atom) / (1 - atom).
double continuous_cdf(const ExtremeDistribution& d, double x) {
  double atom = d.atom_at_zero();
  return (d.cdf(x) - atom) / (1.0 - atom);
}

// Inverts 0.5 * (C1(x) + C2(x)) = u by bracketed bisection.
double pooled_quantile(const ExtremeDistribution& d1, const ExtremeDistribution& d2,
                       double u) {
  auto pooled = [&](double x) {
    return 0.5 * (continuous_cdf(d1, x) + continuous_cdf(d2, x));
  };
  double lo = 0.0;
  double hi = 1.0;
  for (int guard = 0; guard < 400 && pooled(hi) < u; ++guard) hi *= 2.0;
  for (int it = 0; it < 120; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pooled(mid) < u)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Ratio increments are judged relative to the running ratio magnitude so a
// fixed slack stays meaningful when the ratio grows large.
bool ratio_steps_nondecreasing(const std::vector<double>& ratio,
                               const std::vector<double>& at_x, double slack,
                               OrderVerdict& v) {
  v.margin = 0.0;
  bool ok = true;
  for (std::size_t k = 1; k < ratio.size(); ++k) {
    double scale = std::max(1.0, std::abs(ratio[k - 1]));
    double drop = (ratio[k - 1] - ratio[k]) / scale;
    if (drop > v.margin) {
      v.margin = drop;
      if (drop > slack) {
        v.has_witness = true;
        v.witness_x = at_x[k];
        ok = false;
      }
    }
  }
  return ok;
}

}  // namespace

const char* order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::st: return "st";
    case OrderKind::hr: return "hr";
    case OrderKind::rh: return "rh";
    case OrderKind::disp: return "disp";
  }
  return "unknown";
}

std::vector<double> comparison_grid(const ExtremeDistribution& d1,
                                    const ExtremeDistribution& d2,
                                    const GridSpec& grid) {
  grid.validate();
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(grid.point_count));
  double prev = 0.0;
  for (int k = 0; k < grid.point_count; ++k) {
    double u = grid.coverage_lower +
               (grid.coverage_upper - grid.coverage_lower) *
                   static_cast<double>(k) / (grid.point_count - 1);
    double x = pooled_quantile(d1, d2, u);
    if (x > prev) {
      xs.push_back(x);
      prev = x;
    }
  }
  return xs;
}

OrderVerdict check_st(const ExtremeDistribution& d1, const ExtremeDistribution& d2,
                      const GridSpec& grid) {
  OrderVerdict v;
  v.kind = OrderKind::st;
  auto xs = comparison_grid(d1, d2, grid);
  xs.insert(xs.begin(), 0.0);  // atom comparison participates
  v.margin = -std::numeric_limits<double>::infinity();
  for (double x : xs) {
    double excess = d1.sf(x) - d2.sf(x);
    if (excess > v.margin) {
      v.margin = excess;
      v.witness_x = x;
    }
  }
  v.holds = v.margin <= grid.slack;
  v.has_witness = !v.holds;
  return v;
}

OrderVerdict check_hr(const ExtremeDistribution& d1, const ExtremeDistribution& d2,
                      const GridSpec& grid) {
  OrderVerdict v;
  v.kind = OrderKind::hr;
  auto xs = comparison_grid(d1, d2, grid);
  std::vector<double> ratio;
  std::vector<double> at_x;
  ratio.reserve(xs.size() + 2);
  at_x.reserve(xs.size() + 2);
  // Left of the support both survivals equal 1; the first real comparison is
  // the survival-atom step at x = 0.
  ratio.push_back(1.0);
  at_x.push_back(-0.0);
  ratio.push_back((1.0 - d2.atom_at_zero()) / (1.0 - d1.atom_at_zero()));
  at_x.push_back(0.0);
  bool truncated = false;
  for (double x : xs) {
    double s1 = d1.sf(x);
    double s2 = d2.sf(x);
    if (s1 < kUnderflowFloor || s2 < kUnderflowFloor) {
      truncated = true;
      break;
    }
    ratio.push_back(s2 / s1);
    at_x.push_back(x);
  }
  if (truncated) v.note = "band truncated where a survival function underflows";
  v.holds = ratio_steps_nondecreasing(ratio, at_x, grid.slack, v);
  return v;
}

OrderVerdict check_rh(const ExtremeDistribution& d1, const ExtremeDistribution& d2,
                      const GridSpec& grid) {
  OrderVerdict v;
  v.kind = OrderKind::rh;
  auto xs = comparison_grid(d1, d2, grid);
  std::vector<double> ratio;
  std::vector<double> at_x;
  ratio.reserve(xs.size() + 1);
  at_x.reserve(xs.size() + 1);
  if (d1.atom_at_zero() > 0.0 && d2.atom_at_zero() > 0.0) {
    ratio.push_back(d2.atom_at_zero() / d1.atom_at_zero());
    at_x.push_back(0.0);
  } else if (d1.atom_at_zero() > 0.0 || d2.atom_at_zero() > 0.0) {
    v.note = "x = 0 skipped: only one distribution has an atom there";
  }
  bool truncated = false;
  for (double x : xs) {
    double c1 = d1.cdf(x);
    double c2 = d2.cdf(x);
    if (c1 < kUnderflowFloor || c2 < kUnderflowFloor) {
      truncated = true;
      continue;  // cdfs grow along the grid; only a left tail can vanish
    }
    ratio.push_back(c2 / c1);
    at_x.push_back(x);
  }
  if (truncated) {
    if (!v.note.empty()) v.note += "; ";
    v.note += "band truncated where a cdf underflows";
  }
  v.holds = ratio_steps_nondecreasing(ratio, at_x, grid.slack, v);
  return v;
}

OrderVerdict check_disp(const ExtremeDistribution& d1, const ExtremeDistribution& d2,
                        const GridSpec& grid) {
  grid.validate();
  OrderVerdict v;
  v.kind = OrderKind::disp;
  int const kLattice = 64;
  double lower = std::max(d1.atom_at_zero(), d2.atom_at_zero());
  double upper = 1.0 - 1e-4;
  if (!(lower < upper))
    throw std::invalid_argument("check_disp: atom mass leaves no probability band");
  std::vector<double> us(kLattice), q1(kLattice), q2(kLattice);
  for (int k = 0; k < kLattice; ++k) {
    // Interior lattice: both ends strictly inside (lower, upper).
    us[k] = lower + (upper - lower) * static_cast<double>(k + 1) / (kLattice + 1);
    q1[k] = d1.quantile(us[k]);
    q2[k] = d2.quantile(us[k]);
  }
  // Spread comparison over all alpha < beta reduces to a running minimum of
  // the quantile differences d[k] = q1[k] - q2[k].
  double best_min = q1[0] - q2[0];
  int best_min_at = 0;
  v.margin = -std::numeric_limits<double>::infinity();
  int wit_a = 0, wit_b = 1;
  for (int j = 1; j < kLattice; ++j) {
    double excess = (q1[j] - q2[j]) - best_min;
    if (excess > v.margin) {
      v.margin = excess;
      wit_a = best_min_at;
      wit_b = j;
    }
    double dj = q1[j] - q2[j];
    if (dj < best_min) {
      best_min = dj;
      best_min_at = j;
    }
  }
  v.holds = v.margin <= grid.slack;
  if (!v.holds) {
    v.has_witness = true;
    v.witness_x = us[wit_a];
    v.witness_beta = us[wit_b];
  }
  return v;
}

double EmpiricalSf::sf(double x) const {
  auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(sorted.end() - it) / static_cast<double>(sorted.size());
}

double EmpiricalSf::sup_distance(const ExtremeDistribution& d) const {
  // Walk distinct sample values; at value x with first index i and one-past
  // index j the empirical cdf is i/n just left of x and j/n at x. The
  // analytic cdf jumps only at 0, so its left limit there is 0.
  double n = static_cast<double>(sorted.size());
  double sup = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    double x = sorted[i];
    double cdf_at = d.cdf(x);
    double cdf_left = x == 0.0 ? 0.0 : cdf_at;
    sup = std::max(sup, std::abs(static_cast<double>(j) / n - cdf_at));
    sup = std::max(sup, std::abs(static_cast<double>(i) / n - cdf_left));
    i = j;
  }
  return sup;
}

EmpiricalSf mc_empirical_sf(const ExtremeDistribution& d, std::size_t count,
                            std::uint64_t seed) {
  if (count < 10000)
    throw std::invalid_argument("mc_empirical_sf: count must be >= 10^4");
  EmpiricalSf out;
  out.sorted = d.sample(count, seed);
  std::sort(out.sorted.begin(), out.sorted.end());
  out.dkw_radius = std::sqrt(std::log(2.0 / 0.001) / (2.0 * static_cast<double>(count)));
  return out;
}

double mc_variance(const ExtremeDistribution& d, std::size_t count,
                   std::uint64_t seed) {
  if (count < 10000)
    throw std::invalid_argument("mc_variance: count must be >= 10^4");
  auto draws = d.sample(count, seed);
  double n = static_cast<double>(count);
  double mean = 0.0;
  for (double y : draws) mean += y;
  mean /= n;
  double ss = 0.0;
  for (double y : draws) ss += (y - mean) * (y - mean);
  return ss / (n - 1.0);
}

McCheck mc_check(const ExtremeDistribution& d, std::size_t count,
                 std::uint64_t seed) {
  auto emp = mc_empirical_sf(d, count, seed);
  McCheck out;
  out.count = count;
  out.sup_distance = emp.sup_distance(d);
  out.dkw_radius = emp.dkw_radius;
  out.within_dkw = out.sup_distance <= out.dkw_radius;

  double n = static_cast<double>(count);
  std::size_t zeros = 0;
  while (zeros < emp.sorted.size() && emp.sorted[zeros] == 0.0) ++zeros;
  out.atom_frequency = static_cast<double>(zeros) / n;
  out.atom_expected = d.atom_at_zero();
  out.atom_se = std::sqrt(out.atom_expected * (1.0 - out.atom_expected) / n);
  out.atom_within_3se =
      std::abs(out.atom_frequency - out.atom_expected) <= 3.0 * out.atom_se;

  double mean = 0.0;
  for (double y : emp.sorted) mean += y;
  mean /= n;
  double m2 = 0.0, m4 = 0.0;
  for (double y : emp.sorted) {
    double c = (y - mean) * (y - mean);
    m2 += c;
    m4 += c * c;
  }
  double var = m2 / (n - 1.0);
  m2 /= n;
  m4 /= n;
  out.mean = mean;
  out.variance = var;
  out.variance_se = std::sqrt(std::max(m4 - m2 * m2, 0.0) / n);
  return out;
}

}  // namespace tgclaims
