#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tgclaims/claims.hpp"
#include "tgclaims/grid.hpp"

namespace tgclaims {

enum class OrderKind { st, hr, rh, disp };

const char* order_kind_name(OrderKind k);

/// Outcome of a numeric order check between two extreme-claim distributions.
/// All checks run on finite grids, so holds = true is evidence, not proof.
/// margin is the worst violation found (signed; <= grid slack when holds).
struct OrderVerdict {
  OrderKind kind = OrderKind::st;
  bool holds = false;
  bool has_witness = false;
  double witness_x = 0.0;     // violating x (st/hr/rh) or alpha (disp)
  double witness_beta = 0.0;  // violating beta (disp only)
  double margin = 0.0;
  std::string note;  // diagnostics: band truncation, atom handling
};

/// Strictly increasing x grid shared by a pair of distributions:
/// quantile-spaced over the coverage band of the pooled continuous mixture
/// 0.5 * (C1 + C2), where C_k is the cdf of d_k's continuous part.
std::vector<double> comparison_grid(const ExtremeDistribution& d1,
                                    const ExtremeDistribution& d2,
                                    const GridSpec& grid);

/// d1 precedes d2 in the usual stochastic order: sf1 <= sf2 pointwise,
/// including the atom comparison at x = 0.
OrderVerdict check_st(const ExtremeDistribution& d1, const ExtremeDistribution& d2,
                      const GridSpec& grid = {});

/// Hazard rate order: sf2/sf1 nondecreasing along the grid, including the
/// step from x = 0- (ratio 1) to x = 0 (survival-atom ratio).
OrderVerdict check_hr(const ExtremeDistribution& d1, const ExtremeDistribution& d2,
                      const GridSpec& grid = {});

/// Reversed hazard rate order: cdf2/cdf1 nondecreasing along the grid;
/// x = 0 participates when both atoms are positive.
OrderVerdict check_rh(const ExtremeDistribution& d1, const ExtremeDistribution& d2,
                      const GridSpec& grid = {});

/// Dispersive order: quantile spreads of d1 never exceed those of d2 on a
/// 64x64 lattice of probability pairs above both atoms.
OrderVerdict check_disp(const ExtremeDistribution& d1, const ExtremeDistribution& d2,
                        const GridSpec& grid = {});

/// Empirical survival function of a Monte Carlo sample, with the
/// Dvoretzky-Kiefer-Wolfowitz radius at confidence 0.999.
struct EmpiricalSf {
  std::vector<double> sorted;  // ascending draws
  double dkw_radius = 0.0;

  double sf(double x) const;  // fraction of draws strictly above x
  /// Exact sup-distance between the empirical cdf and the analytic cdf,
  /// honoring the shared jump at x = 0.
  double sup_distance(const ExtremeDistribution& d) const;
};

EmpiricalSf mc_empirical_sf(const ExtremeDistribution& d, std::size_t count,
                            std::uint64_t seed);

/// Unbiased sample variance of count draws.
double mc_variance(const ExtremeDistribution& d, std::size_t count,
                   std::uint64_t seed);

/// Full Monte Carlo cross-check of one distribution against its formulas.
struct McCheck {
  std::size_t count = 0;
  double sup_distance = 0.0;
  double dkw_radius = 0.0;
  bool within_dkw = false;
  double atom_frequency = 0.0;
  double atom_expected = 0.0;
  double atom_se = 0.0;  // binomial standard error at the expected mass
  bool atom_within_3se = false;
  double mean = 0.0;
  double variance = 0.0;
  double variance_se = 0.0;  // sqrt((m4 - s^4) / n)
};

McCheck mc_check(const ExtremeDistribution& d, std::size_t count,
                 std::uint64_t seed);

}  // namespace tgclaims
