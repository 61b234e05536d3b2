#include "tgclaims/transmuted.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tgclaims::tg {

void require_lambda(double lambda) {
  if (!(lambda >= -1.0 && lambda <= 1.0))
    throw std::domain_error("transmuted: lambda must lie in [-1, 1]");
}

double cdf(const Baseline& base, double lambda, double x) {
  require_lambda(lambda);
  double F = base.cdf(x);
  return F * (1.0 + lambda * (1.0 - F));
}

double sf(const Baseline& base, double lambda, double x) {
  require_lambda(lambda);
  double F = base.cdf(x);
  return (1.0 - F) * (1.0 - lambda * F);
}

double pdf(const Baseline& base, double lambda, double x) {
  require_lambda(lambda);
  double F = base.cdf(x);
  double f = base.pdf(x);
  double w = 1.0 + lambda * (1.0 - 2.0 * F);
  if (std::isinf(f)) return w > 0.0 ? f : 0.0;
  return f * w;
}

double hazard(const Baseline& base, double lambda, double x) {
  require_lambda(lambda);
  double F = base.cdf(x);
  double denom = 1.0 - lambda * F;
  if (F >= 1.0 || denom <= 0.0) return std::numeric_limits<double>::infinity();
  double w = (1.0 + lambda * (1.0 - 2.0 * F)) / denom;
  return w * base.hazard(x);
}

double reversed_hazard(const Baseline& base, double lambda, double x) {
  require_lambda(lambda);
  double c = cdf(base, lambda, x);
  if (c <= 0.0) return std::numeric_limits<double>::infinity();
  return pdf(base, lambda, x) / c;
}

double quantile(const Baseline& base, double lambda, double u) {
  require_lambda(lambda);
  if (!(u >= 0.0) || !(u < 1.0))
    throw std::domain_error("transmuted quantile: u must lie in [0, 1)");
  if (u == 0.0) return 0.0;
  // Solve u = v (1 + lambda (1 - v)) for v = F(x). Writing the quadratic's
  // smaller root as 2u / ((1+lambda) + sqrt((1+lambda)^2 - 4 lambda u))
  // avoids subtractive cancellation and needs no special case at lambda = 0.
  // The discriminant equals (1-lambda)^2 + 4 lambda (1-u) >= 0 on the domain.
  double a = 1.0 + lambda;
  double disc = a * a - 4.0 * lambda * u;
  double v = 2.0 * u / (a + std::sqrt(std::max(disc, 0.0)));
  if (v >= 1.0) v = std::nextafter(1.0, 0.0);
  return base.quantile(v);
}

}  // namespace tgclaims::tg
