#pragma once

#include "tgclaims/baseline.hpp"

namespace tgclaims {

/// Quadratic-rank-transmuted transform of a baseline distribution.
/// For shape parameter lambda in [-1, 1] and baseline cdf F:
///   cdf(x) = F(x) * (1 + lambda * (1 - F(x))).
/// lambda = 0 recovers the baseline exactly.
namespace tg {

void require_lambda(double lambda);

double cdf(const Baseline& base, double lambda, double x);
double sf(const Baseline& base, double lambda, double x);
double pdf(const Baseline& base, double lambda, double x);
double hazard(const Baseline& base, double lambda, double x);
double reversed_hazard(const Baseline& base, double lambda, double x);

/// Inverse of cdf on [0, 1); exact at u = 0.
double quantile(const Baseline& base, double lambda, double u);

}  // namespace tg

}  // namespace tgclaims
