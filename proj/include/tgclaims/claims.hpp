#pragma once

#include <cstdint>
#include <vector>

#include "tgclaims/baseline.hpp"
#include "tgclaims/majorization.hpp"

namespace tgclaims {

/// A heterogeneous portfolio of n policies over a common baseline. Policy i
/// produces a claim with probability occurrence[i]; when it does, the claim
/// amount follows the transmuted baseline with shape lambda[i]. A policy
/// with no claim contributes amount zero.
struct Portfolio {
  Baseline base = Baseline::exponential(1.0);
  std::vector<double> lambda;
  std::vector<double> occurrence;

  std::size_t size() const { return lambda.size(); }
  void validate() const;

  /// Product of occurrence probabilities: the chance every policy claims.
  double all_claim_probability() const;
  /// Product of complements: the chance no policy claims.
  double no_claim_probability() const;
};

enum class Extreme { smallest, largest };

/// cdf of the largest claim amount: prod_i (1 - p_i sf(x) (1 - lambda_i F(x))).
double largest_cdf(const Portfolio& pf, double x);

/// Reversed hazard of the largest claim for x > 0; equals 1 at x = 0 where
/// the distribution places its atom (the additive decomposition collapses).
double largest_reversed_hazard(const Portfolio& pf, double x);

/// sf of the smallest claim amount: (prod p_i) * prod_i sf(x) (1 - lambda_i F(x)).
double smallest_sf(const Portfolio& pf, double x);

/// Hazard of the smallest claim's continuous part for x > 0, plus the atom
/// mass 1 - prod(p_i) reported separately (the x = 0 value is a probability,
/// not a rate, and mixing the two would break monotonicity checks).
struct SmallestHazard {
  double rate = 0.0;
  double atom_at_zero = 0.0;
};
SmallestHazard smallest_hazard(const Portfolio& pf, double x);

/// Distribution of the largest or smallest claim amount in a portfolio.
/// Both extremes carry an atom at zero:
///   largest: mass prod(1 - p_i) when no policy claims;
///   smallest: mass 1 - prod(p_i) when at least one policy is claim-free.
class ExtremeDistribution {
 public:
  ExtremeDistribution(Portfolio portfolio, Extreme which);

  double cdf(double x) const;
  double sf(double x) const { return 1.0 - cdf(x); }
  double atom_at_zero() const { return atom_; }

  /// Hazard of the continuous part for x > 0.
  double hazard(double x) const;
  /// Reversed hazard for x > 0; 1 at x = 0 for the largest claim.
  double reversed_hazard(double x) const;

  /// Right-continuous inverse of the cdf: 0 for u <= atom_at_zero, else the
  /// root of cdf(x) = u found by bracketed bisection.
  double quantile(double u) const;

  /// count i.i.d. draws, deterministic per seed. Each policy draws a
  /// Bernoulli occurrence and a transmuted amount; the extreme is taken
  /// over the n per-policy amounts (zero for claim-free policies).
  std::vector<double> sample(std::size_t count, std::uint64_t seed) const;

  const Portfolio& portfolio() const { return portfolio_; }
  Extreme which() const { return which_; }

 private:
  Portfolio portfolio_;
  Extreme which_ = Extreme::largest;
  double atom_ = 0.0;
};

/// Survival bound for the largest claim in a 2-policy portfolio, built from
/// homogeneous proxies: the mean shape and the h-pullback of the mean h(p).
/// A lower envelope of the exact survival whenever (lambda, h(p)) lies in S_2.
double largest_bound_sf(const Portfolio& pf, const HFunction& h, double x);

/// Survival bound for the smallest claim from homogeneous proxies: the
/// geometric-mean occurrence and the worst-case shape max((1+lambda_i)/2).
/// Always a lower envelope of the exact survival.
double smallest_bound_sf(const Portfolio& pf, double x);

/// Proxy parameters used by smallest_bound_sf, exposed for reporting.
struct SmallestBoundParams {
  double occurrence_geomean = 0.0;
  double lambda_tilde = 0.0;
};
SmallestBoundParams smallest_bound_params(const Portfolio& pf);

}  // namespace tgclaims
