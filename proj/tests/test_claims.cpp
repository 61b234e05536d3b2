#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "tgclaims/claims.hpp"
#include "tgclaims/transmuted.hpp"

using namespace tgclaims;

namespace {

Portfolio exp_portfolio() {
  return {Baseline::exponential(0.5), {-0.7, 0.8, -0.9}, {0.4, 0.2, 0.7}};
}

Portfolio exp2_portfolio() {
  return {Baseline::exponential(2.0), {0.1, 0.3, -0.6}, {0.5, 0.3, 0.7}};
}

Portfolio weibull_portfolio() {
  return {Baseline::weibull(0.3, 1.5), {0.7, 0.3, -0.9}, {0.1, 0.4, 0.8}};
}

// Mixture sampler for one transmuted amount, independent of tg::quantile:
// lambda >= 0 takes the min of two baseline draws with probability lambda,
// lambda < 0 the max with probability -lambda, else a single draw.
double draw_amount(const Baseline& base, double lambda, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double x1 = base.quantile(unit(rng));
  if (lambda >= 0.0) {
    if (unit(rng) < lambda) return std::min(x1, base.quantile(unit(rng)));
    return x1;
  }
  if (unit(rng) < -lambda) return std::max(x1, base.quantile(unit(rng)));
  return x1;
}

std::vector<double> draw_extremes(const Portfolio& pf, Extreme which,
                                  std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    double ext = which == Extreme::largest
                     ? 0.0
                     : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pf.size(); ++i) {
      double y = 0.0;
      if (unit(rng) < pf.occurrence[i])
        y = draw_amount(pf.base, pf.lambda[i], rng);
      ext = which == Extreme::largest ? std::max(ext, y) : std::min(ext, y);
    }
    out.push_back(ext);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double ecdf(const std::vector<double>& sorted, double x) {
  auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(it - sorted.begin()) /
         static_cast<double>(sorted.size());
}

}  // namespace

TEST_CASE("portfolio validation and claim probabilities") {
  Portfolio pf = exp_portfolio();
  CHECK_NOTHROW(pf.validate());
  CHECK(pf.size() == 3);
  CHECK(pf.all_claim_probability() == doctest::Approx(0.4 * 0.2 * 0.7));
  CHECK(pf.no_claim_probability() == doctest::Approx(0.6 * 0.8 * 0.3));

  Portfolio bad = pf;
  bad.lambda = {0.5, 0.5};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = pf;
  bad.lambda[1] = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = pf;
  bad.occurrence[0] = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = pf;
  bad.occurrence[2] = 1.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.lambda.clear();
  bad.occurrence.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  // p = 1 is a legitimate always-claims policy.
  Portfolio sure{Baseline::exponential(1.0), {0.0}, {1.0}};
  CHECK_NOTHROW(sure.validate());
}

TEST_CASE("extreme formulas factor over the policies") {
  for (const Portfolio& pf :
       {exp_portfolio(), exp2_portfolio(), weibull_portfolio()}) {
    for (double u : {0.05, 0.3, 0.6, 0.9, 0.99}) {
      double x = pf.base.quantile(u);
      double prod_largest = 1.0;
      double prod_smallest = 1.0;
      for (std::size_t i = 0; i < pf.size(); ++i) {
        double s = tg::sf(pf.base, pf.lambda[i], x);
        prod_largest *= 1.0 - pf.occurrence[i] * s;
        prod_smallest *= pf.occurrence[i] * s;
      }
      CHECK(largest_cdf(pf, x) == doctest::Approx(prod_largest).epsilon(1e-14));
      CHECK(smallest_sf(pf, x) == doctest::Approx(prod_smallest).epsilon(1e-14));
    }
  }
}

TEST_CASE("frozen distribution values") {
  CHECK(largest_cdf(exp_portfolio(), 1.0) ==
        doctest::Approx(0.75294678199786291).epsilon(1e-15));
  CHECK(smallest_sf(exp2_portfolio(), 1.0) ==
        doctest::Approx(0.024536340300249242).epsilon(1e-15));
}

TEST_CASE("values at zero") {
  Portfolio pf = exp_portfolio();
  CHECK(largest_cdf(pf, 0.0) == doctest::Approx(pf.no_claim_probability()));
  CHECK(smallest_sf(pf, 0.0) == doctest::Approx(pf.all_claim_probability()));
  CHECK(largest_reversed_hazard(pf, 0.0) == 1.0);
  auto h0 = smallest_hazard(pf, 0.0);
  CHECK(h0.rate == 0.0);
  CHECK(h0.atom_at_zero ==
        doctest::Approx(1.0 - pf.all_claim_probability()).epsilon(1e-15));
}

TEST_CASE("rate functions match log-derivatives") {
  for (const Portfolio& pf : {exp_portfolio(), exp2_portfolio()}) {
    for (double u : {0.2, 0.5, 0.8}) {
      double x = pf.base.quantile(u);
      double step = 1e-5 * x;
      double rh_fd = (std::log(largest_cdf(pf, x + step)) -
                      std::log(largest_cdf(pf, x - step))) /
                     (2.0 * step);
      CHECK(largest_reversed_hazard(pf, x) ==
            doctest::Approx(rh_fd).epsilon(1e-5));
      double hz_fd = -(std::log(smallest_sf(pf, x + step)) -
                       std::log(smallest_sf(pf, x - step))) /
                     (2.0 * step);
      CHECK(smallest_hazard(pf, x).rate == doctest::Approx(hz_fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("permutation invariance") {
  Portfolio pf = exp_portfolio();
  Portfolio shuffled = pf;
  shuffled.lambda = {-0.9, -0.7, 0.8};
  shuffled.occurrence = {0.7, 0.4, 0.2};
  for (double x : {0.1, 0.7, 2.0}) {
    CHECK(largest_cdf(pf, x) ==
          doctest::Approx(largest_cdf(shuffled, x)).epsilon(1e-15));
    CHECK(smallest_sf(pf, x) ==
          doctest::Approx(smallest_sf(shuffled, x)).epsilon(1e-15));
  }
}

TEST_CASE("identical zero-shape policies double the baseline hazard") {
  Portfolio pf{Baseline::exponential(1.0), {0.0, 0.0}, {0.8, 0.6}};
  for (double x : {0.3, 1.0, 2.5})
    CHECK(smallest_hazard(pf, x).rate ==
          doctest::Approx(2.0 * pf.base.hazard(x)).epsilon(1e-13));
}

TEST_CASE("extreme distribution atoms and cdf") {
  Portfolio pf = exp_portfolio();
  ExtremeDistribution largest(pf, Extreme::largest);
  ExtremeDistribution smallest(pf, Extreme::smallest);

  CHECK(largest.atom_at_zero() == doctest::Approx(pf.no_claim_probability()));
  CHECK(smallest.atom_at_zero() ==
        doctest::Approx(1.0 - pf.all_claim_probability()));
  CHECK(largest.cdf(0.0) == doctest::Approx(largest.atom_at_zero()));
  CHECK(smallest.cdf(0.0) == doctest::Approx(smallest.atom_at_zero()));

  for (double x : {0.2, 1.0, 3.0}) {
    CHECK(largest.cdf(x) == doctest::Approx(largest_cdf(pf, x)).epsilon(1e-15));
    CHECK(smallest.sf(x) == doctest::Approx(smallest_sf(pf, x)).epsilon(1e-15));
    // Two routes to the largest-claim hazard and smallest reversed hazard.
    CHECK(largest.hazard(x) ==
          doctest::Approx(largest.cdf(x) * largest.reversed_hazard(x) /
                          largest.sf(x))
              .epsilon(1e-13));
    CHECK(smallest.reversed_hazard(x) ==
          doctest::Approx(smallest.sf(x) * smallest.hazard(x) / smallest.cdf(x))
              .epsilon(1e-13));
  }
  CHECK_THROWS_AS(largest.cdf(-0.1), std::domain_error);
}

TEST_CASE("extreme quantile honors the atom and inverts the cdf") {
  for (Extreme which : {Extreme::largest, Extreme::smallest}) {
    ExtremeDistribution d(exp_portfolio(), which);
    double atom = d.atom_at_zero();
    CHECK(d.quantile(0.0) == 0.0);
    CHECK(d.quantile(0.5 * atom) == 0.0);
    CHECK(d.quantile(atom) == 0.0);
    for (double t : {0.05, 0.3, 0.7, 0.95, 0.999}) {
      double u = atom + (1.0 - atom) * t;
      double x = d.quantile(u);
      CHECK(x > 0.0);
      CHECK(d.cdf(x) == doctest::Approx(u).epsilon(1e-9));
    }
    CHECK_THROWS_AS(d.quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(d.quantile(-0.1), std::domain_error);
  }
}

TEST_CASE("sampling is deterministic per seed") {
  ExtremeDistribution d(exp_portfolio(), Extreme::largest);
  auto a = d.sample(500, 7);
  auto b = d.sample(500, 7);
  auto c = d.sample(500, 8);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.size() == 500);
  CHECK_THROWS_AS(d.sample(0, 1), std::invalid_argument);
}

TEST_CASE("sampler agrees with an independent mixture construction") {
  std::size_t const n = 200000;
  // 0.999-confidence DKW radius for each empirical curve; the comparison of
  // two independent empirical cdfs gets the sum of the radii.
  double radius = 2.0 * std::sqrt(std::log(2.0 / 0.001) / (2.0 * n));
  for (const Portfolio& pf : {exp_portfolio(), weibull_portfolio()}) {
    for (Extreme which : {Extreme::largest, Extreme::smallest}) {
      ExtremeDistribution d(pf, which);
      auto lib = d.sample(n, 2024);
      std::sort(lib.begin(), lib.end());
      auto ref = draw_extremes(pf, which, n, 4048);
      for (double u : {0.05, 0.2, 0.4, 0.6, 0.8, 0.95}) {
        double x = d.quantile(d.atom_at_zero() +
                              (1.0 - d.atom_at_zero()) * u);
        CHECK(std::abs(ecdf(lib, x) - ecdf(ref, x)) <= radius);
        // Both empirical curves track the analytic cdf.
        CHECK(std::abs(ecdf(lib, x) - d.cdf(x)) <= 0.5 * radius);
      }
    }
  }
}

TEST_CASE("largest-claim bound stays below the exact survival") {
  Portfolio pf{Baseline::exponential(0.5), {-0.7, 0.8}, {0.4, 0.2}};
  HFunction h = HFunction::log_shift();
  ExtremeDistribution d(pf, Extreme::largest);
  for (int k = 0; k < 50; ++k) {
    double u = 0.01 + 0.98 * static_cast<double>(k) / 49.0;
    double x = pf.base.quantile(u);
    CHECK(largest_bound_sf(pf, h, x) <= d.sf(x) + 1e-12);
  }

  // Homogeneous pair: the proxy portfolio is the portfolio itself.
  Portfolio homo{Baseline::exponential(0.5), {0.5, 0.5}, {0.3, 0.3}};
  ExtremeDistribution dh(homo, Extreme::largest);
  for (double x : {0.1, 0.5, 1.5})
    CHECK(largest_bound_sf(homo, h, x) == doctest::Approx(dh.sf(x)).epsilon(1e-12));

  CHECK_THROWS_AS(largest_bound_sf(exp_portfolio(), h, 1.0),
                  std::invalid_argument);
}

TEST_CASE("smallest-claim bound stays below the exact survival") {
  Portfolio pf = exp2_portfolio();
  for (int k = 0; k < 50; ++k) {
    double u = 0.01 + 0.98 * static_cast<double>(k) / 49.0;
    double x = pf.base.quantile(u);
    CHECK(smallest_bound_sf(pf, x) <= smallest_sf(pf, x) + 1e-12);
  }

  auto params = smallest_bound_params(pf);
  CHECK(params.occurrence_geomean ==
        doctest::Approx(std::cbrt(0.5 * 0.3 * 0.7)).epsilon(1e-14));
  CHECK(params.lambda_tilde == doctest::Approx(0.65).epsilon(1e-14));

  // All shapes at one: the proxy parameters coincide with the real ones.
  Portfolio ones{Baseline::exponential(1.0), {1.0, 1.0, 1.0}, {0.9, 0.5, 0.2}};
  for (double x : {0.05, 0.4, 1.2})
    CHECK(smallest_bound_sf(ones, x) ==
          doctest::Approx(smallest_sf(ones, x)).epsilon(1e-12));
}

TEST_CASE("undefined rates raise domain errors") {
  Portfolio pf{Baseline::tabulated({0.0, 2.0}, {0.0, 1.0}), {0.0, 0.0},
               {0.5, 0.5}};
  CHECK_THROWS_AS(smallest_hazard(pf, 2.5), std::domain_error);
  CHECK_THROWS_AS(largest_cdf(pf, -1.0), std::domain_error);
  CHECK_THROWS_AS(smallest_sf(pf, -1.0), std::domain_error);
  CHECK_THROWS_AS(largest_reversed_hazard(pf, -1.0), std::domain_error);
}
