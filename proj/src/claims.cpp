#include "tgclaims/claims.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "tgclaims/transmuted.hpp"

namespace tgclaims {

namespace {

void require_nonnegative(double x) {
  if (x < 0.0 || std::isnan(x))
    throw std::domain_error("claims: x must be nonnegative");
}

// Uniform in (0, 1): 53 mantissa bits of the engine output, shifted into
// [0, 1) and nudged off zero so quantile transforms stay finite.
double next_uniform(std::mt19937_64& rng) {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u > 0.0 ? u : 0x1.0p-53;
}

}  // namespace

void Portfolio::validate() const {
  if (lambda.empty() || lambda.size() != occurrence.size())
    throw std::invalid_argument(
        "portfolio: lambda and occurrence must be nonempty and equal-sized");
  for (double l : lambda)
    if (!(l >= -1.0 && l <= 1.0))
      throw std::invalid_argument("portfolio: lambda entries must lie in [-1, 1]");
  for (double p : occurrence)
    if (!(p > 0.0 && p <= 1.0))
      throw std::invalid_argument("portfolio: occurrence entries must lie in (0, 1]");
}

double Portfolio::all_claim_probability() const {
  double prod = 1.0;
  for (double p : occurrence) prod *= p;
  return prod;
}

double Portfolio::no_claim_probability() const {
  double prod = 1.0;
  for (double p : occurrence) prod *= 1.0 - p;
  return prod;
}

double largest_cdf(const Portfolio& pf, double x) {
  require_nonnegative(x);
  double F = pf.base.cdf(x);
  double Fbar = 1.0 - F;
  double prod = 1.0;
  for (std::size_t i = 0; i < pf.size(); ++i)
    prod *= 1.0 - pf.occurrence[i] * Fbar * (1.0 - pf.lambda[i] * F);
  return prod;
}

double largest_reversed_hazard(const Portfolio& pf, double x) {
  require_nonnegative(x);
  if (x == 0.0) return 1.0;
  double F = pf.base.cdf(x);
  double Fbar = 1.0 - F;
  double f = pf.base.pdf(x);
  double sum = 0.0;
  for (std::size_t i = 0; i < pf.size(); ++i) {
    double li = pf.lambda[i];
    double pi = pf.occurrence[i];
    sum += pi * f * (1.0 + li * (1.0 - 2.0 * F)) /
           (1.0 - pi * Fbar * (1.0 - li * F));
  }
  return sum;
}

double smallest_sf(const Portfolio& pf, double x) {
  require_nonnegative(x);
  double F = pf.base.cdf(x);
  double Fbar = 1.0 - F;
  double prod = pf.all_claim_probability();
  for (std::size_t i = 0; i < pf.size(); ++i)
    prod *= Fbar * (1.0 - pf.lambda[i] * F);
  return prod;
}

SmallestHazard smallest_hazard(const Portfolio& pf, double x) {
  require_nonnegative(x);
  SmallestHazard out;
  out.atom_at_zero = 1.0 - pf.all_claim_probability();
  if (x == 0.0) return out;
  if (smallest_sf(pf, x) <= 0.0)
    throw std::domain_error("smallest_hazard: undefined where the survival vanishes");
  double F = pf.base.cdf(x);
  double r = pf.base.hazard(x);
  double sum = 0.0;
  for (double li : pf.lambda)
    sum += (1.0 + li * (1.0 - 2.0 * F)) / (1.0 - li * F);
  out.rate = sum * r;
  return out;
}

ExtremeDistribution::ExtremeDistribution(Portfolio portfolio, Extreme which)
    : portfolio_(std::move(portfolio)), which_(which) {
  portfolio_.validate();
  atom_ = which_ == Extreme::largest ? portfolio_.no_claim_probability()
                                     : 1.0 - portfolio_.all_claim_probability();
}

double ExtremeDistribution::cdf(double x) const {
  if (which_ == Extreme::largest) return largest_cdf(portfolio_, x);
  return 1.0 - smallest_sf(portfolio_, x);
}

double ExtremeDistribution::hazard(double x) const {
  require_nonnegative(x);
  if (which_ == Extreme::smallest) return smallest_hazard(portfolio_, x).rate;
  // Largest claim: density = cdf * reversed hazard, so hazard = that / sf.
  double s = sf(x);
  if (s <= 0.0)
    throw std::domain_error("hazard: undefined where the survival vanishes");
  return largest_cdf(portfolio_, x) * largest_reversed_hazard(portfolio_, x) / s;
}

double ExtremeDistribution::reversed_hazard(double x) const {
  require_nonnegative(x);
  if (which_ == Extreme::largest) return largest_reversed_hazard(portfolio_, x);
  double c = cdf(x);
  if (c <= 0.0)
    throw std::domain_error("reversed_hazard: undefined where the cdf vanishes");
  if (x == 0.0) return atom_;
  return smallest_sf(portfolio_, x) * smallest_hazard(portfolio_, x).rate / c;
}

double ExtremeDistribution::quantile(double u) const {
  if (!(u >= 0.0 && u < 1.0))
    throw std::domain_error("extreme quantile: u must lie in [0, 1)");
  if (u <= atom_) return 0.0;
  // Bracket the root of cdf(x) = u, then bisect. The cdf is continuous and
  // strictly increasing above the atom.
  double lo = 0.0;
  double hi = std::max(portfolio_.base.quantile(0.5), 1.0);
  for (int guard = 0; guard < 200 && cdf(hi) < u; ++guard) hi *= 2.0;
  for (int it = 0; it < 120; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (cdf(mid) < u)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> ExtremeDistribution::sample(std::size_t count,
                                                std::uint64_t seed) const {
  if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
  std::mt19937_64 rng(seed);
  std::size_t n = portfolio_.size();
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    double extreme = which_ == Extreme::largest
                         ? 0.0
                         : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      double u_occ = next_uniform(rng);
      double u_amt = next_uniform(rng);
      double y = 0.0;
      if (u_occ < portfolio_.occurrence[i])
        y = tg::quantile(portfolio_.base, portfolio_.lambda[i], u_amt);
      extreme = which_ == Extreme::largest ? std::max(extreme, y)
                                           : std::min(extreme, y);
    }
    out.push_back(extreme);
  }
  return out;
}

double largest_bound_sf(const Portfolio& pf, const HFunction& h, double x) {
  require_nonnegative(x);
  if (pf.size() != 2)
    throw std::invalid_argument("largest_bound_sf: portfolio must have exactly 2 policies");
  double lambda_bar = 0.5 * (pf.lambda[0] + pf.lambda[1]);
  double h_bar = 0.5 * (h.eval(pf.occurrence[0]) + h.eval(pf.occurrence[1]));
  double p_bar = h.inverse(h_bar);
  double F = pf.base.cdf(x);
  double term = 1.0 - p_bar * (1.0 - F) * (1.0 - lambda_bar * F);
  return 1.0 - term * term;
}

SmallestBoundParams smallest_bound_params(const Portfolio& pf) {
  pf.validate();
  SmallestBoundParams out;
  out.occurrence_geomean =
      std::pow(pf.all_claim_probability(), 1.0 / static_cast<double>(pf.size()));
  out.lambda_tilde = 0.0;
  for (double l : pf.lambda)
    out.lambda_tilde = std::max(out.lambda_tilde, 0.5 * (1.0 + l));
  return out;
}

double smallest_bound_sf(const Portfolio& pf, double x) {
  require_nonnegative(x);
  auto params = smallest_bound_params(pf);
  double F = pf.base.cdf(x);
  double factor =
      params.occurrence_geomean * (1.0 - F) * (1.0 - params.lambda_tilde * F);
  return std::pow(factor, static_cast<double>(pf.size()));
}

}  // namespace tgclaims
