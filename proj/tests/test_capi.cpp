#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>

#include "tgclaims.h"
#include "tgclaims/claims.hpp"
#include "tgclaims/scenario.hpp"
#include "tgclaims/transmuted.hpp"

namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) {
  return std::string(TGC_SCENARIO_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("baseline lifecycle and parity with the native route") {
  tgc_baseline* b = nullptr;
  REQUIRE(tgc_baseline_exponential(0.5, &b) == TGC_OK);
  REQUIRE(b != nullptr);

  tgclaims::Baseline ref = tgclaims::Baseline::exponential(0.5);
  double out = 0.0;
  CHECK(tgc_base_cdf(b, 1.0, &out) == TGC_OK);
  CHECK(out == ref.cdf(1.0));
  CHECK(tgc_base_pdf(b, 1.0, &out) == TGC_OK);
  CHECK(out == ref.pdf(1.0));
  CHECK(tgc_base_quantile(b, 0.3, &out) == TGC_OK);
  CHECK(out == ref.quantile(0.3));
  CHECK(tgc_base_hazard(b, 1.0, &out) == TGC_OK);
  CHECK(out == ref.hazard(1.0));

  int dfr = -1;
  CHECK(tgc_base_is_dfr(b, &dfr) == TGC_OK);
  CHECK(dfr == 1);
  tgc_baseline_free(b);

  tgc_baseline* w = nullptr;
  REQUIRE(tgc_baseline_weibull(2.0, 0.6, &w) == TGC_OK);
  CHECK(tgc_base_is_dfr(w, &dfr) == TGC_OK);
  CHECK(dfr == 0);
  tgc_baseline_free(w);
}

TEST_CASE("status codes for bad input") {
  tgc_baseline* b = nullptr;
  CHECK(tgc_baseline_exponential(-1.0, &b) == TGC_ERR_INVALID);
  CHECK(b == nullptr);
  CHECK(std::strlen(tgc_last_error()) > 0);
  CHECK(tgc_baseline_exponential(1.0, nullptr) == TGC_ERR_INVALID);

  REQUIRE(tgc_baseline_exponential(1.0, &b) == TGC_OK);
  double out = -7.0;
  CHECK(tgc_base_cdf(nullptr, 1.0, &out) == TGC_ERR_INVALID);
  CHECK(tgc_base_cdf(b, 1.0, nullptr) == TGC_ERR_INVALID);

  // Domain failures leave the out-parameter untouched.
  CHECK(tgc_base_cdf(b, -2.0, &out) == TGC_ERR_DOMAIN);
  CHECK(out == -7.0);
  CHECK(tgc_base_quantile(b, 1.5, &out) == TGC_ERR_DOMAIN);
  CHECK(out == -7.0);
  CHECK(tgc_tg_cdf(b, 1.5, 1.0, &out) == TGC_ERR_DOMAIN);
  CHECK(out == -7.0);
  tgc_baseline_free(b);
}

TEST_CASE("transmuted evaluations match the native route") {
  tgc_baseline* b = nullptr;
  REQUIRE(tgc_baseline_weibull(0.3, 1.5, &b) == TGC_OK);
  tgclaims::Baseline ref = tgclaims::Baseline::weibull(0.3, 1.5);

  double out = 0.0;
  for (double lam : {-0.9, 0.0, 0.7}) {
    for (double x : {0.2, 1.0, 3.0}) {
      CHECK(tgc_tg_cdf(b, lam, x, &out) == TGC_OK);
      CHECK(out == tgclaims::tg::cdf(ref, lam, x));
      CHECK(tgc_tg_sf(b, lam, x, &out) == TGC_OK);
      CHECK(out == tgclaims::tg::sf(ref, lam, x));
      CHECK(tgc_tg_pdf(b, lam, x, &out) == TGC_OK);
      CHECK(out == tgclaims::tg::pdf(ref, lam, x));
      CHECK(tgc_tg_hazard(b, lam, x, &out) == TGC_OK);
      CHECK(out == tgclaims::tg::hazard(ref, lam, x));
    }
    CHECK(tgc_tg_quantile(b, lam, 0.42, &out) == TGC_OK);
    CHECK(out == tgclaims::tg::quantile(ref, lam, 0.42));
  }
  tgc_baseline_free(b);
}

TEST_CASE("portfolio evaluations match the native route") {
  tgc_baseline* b = nullptr;
  REQUIRE(tgc_baseline_exponential(0.5, &b) == TGC_OK);
  double lambdas[] = {-0.7, 0.8, -0.9};
  double probs[] = {0.4, 0.2, 0.7};

  tgc_portfolio* p = nullptr;
  REQUIRE(tgc_portfolio_create(b, lambdas, probs, 3, &p) == TGC_OK);
  tgclaims::Portfolio ref{tgclaims::Baseline::exponential(0.5),
                          {-0.7, 0.8, -0.9},
                          {0.4, 0.2, 0.7}};

  double out = 0.0;
  CHECK(tgc_largest_cdf(p, 1.0, &out) == TGC_OK);
  CHECK(out == tgclaims::largest_cdf(ref, 1.0));
  CHECK(tgc_largest_reversed_hazard(p, 1.0, &out) == TGC_OK);
  CHECK(out == tgclaims::largest_reversed_hazard(ref, 1.0));
  CHECK(tgc_smallest_sf(p, 1.0, &out) == TGC_OK);
  CHECK(out == tgclaims::smallest_sf(ref, 1.0));

  double rate = 0.0, atom = 0.0;
  CHECK(tgc_smallest_hazard(p, 1.0, &rate, &atom) == TGC_OK);
  auto h = tgclaims::smallest_hazard(ref, 1.0);
  CHECK(rate == h.rate);
  CHECK(atom == h.atom_at_zero);

  CHECK(tgc_extreme_atom(p, 1, &out) == TGC_OK);
  CHECK(out == ref.no_claim_probability());
  CHECK(tgc_extreme_atom(p, 0, &out) == TGC_OK);
  CHECK(out == 1.0 - ref.all_claim_probability());

  double q = 0.0;
  CHECK(tgc_extreme_quantile(p, 1, 0.9, &q) == TGC_OK);
  CHECK(tgc_largest_cdf(p, q, &out) == TGC_OK);
  CHECK(out == doctest::Approx(0.9).epsilon(1e-9));

  CHECK(tgc_largest_cdf(p, -1.0, &out) == TGC_ERR_DOMAIN);
  tgc_portfolio_free(p);

  // Out-of-range shape parameters are rejected at creation.
  double bad[] = {2.0, 0.0, 0.0};
  tgc_portfolio* p2 = nullptr;
  CHECK(tgc_portfolio_create(b, bad, probs, 3, &p2) == TGC_ERR_INVALID);
  CHECK(p2 == nullptr);
  CHECK(tgc_portfolio_create(b, nullptr, probs, 3, &p2) == TGC_ERR_INVALID);
  CHECK(tgc_portfolio_create(b, bad, probs, 0, &p2) == TGC_ERR_INVALID);
  tgc_baseline_free(b);
}

TEST_CASE("scenario loading distinguishes io, parse, and content errors") {
  tgc_scenario* s = nullptr;
  CHECK(tgc_scenario_load("/no/such/file.json", &s) == TGC_ERR_IO);
  CHECK(s == nullptr);
  CHECK(tgc_scenario_parse("{broken", &s) == TGC_ERR_PARSE);
  CHECK(tgc_scenario_parse(R"({
    "baseline": {"kind": "exponential", "mean": 1.0},
    "portfolio_a": {"lambdas": [0.1], "probs": [0.5]},
    "portfolio_b": {"lambdas": [0.0], "probs": [0.4]},
    "chain": [{"omega": 0.5, "i": 1, "j": 2}]
  })", &s) == TGC_ERR_INVALID);
  CHECK(tgc_scenario_load(nullptr, &s) == TGC_ERR_INVALID);

  REQUIRE(tgc_scenario_load(fixture("te_largest_chain.json").c_str(), &s) ==
          TGC_OK);
  REQUIRE(s != nullptr);
  CHECK(tgc_scenario_set_grid_points(s, 4) == TGC_ERR_INVALID);
  CHECK(tgc_scenario_set_grid_points(s, 128) == TGC_OK);
  CHECK(tgc_scenario_set_seed(s, 42) == TGC_OK);
  CHECK(tgc_scenario_set_grid_points(nullptr, 128) == TGC_ERR_INVALID);
  tgc_scenario_free(s);
}

TEST_CASE("commands produce reports matching the native route") {
  tgc_scenario* s = nullptr;
  REQUIRE(tgc_scenario_load(fixture("te_largest_chain.json").c_str(), &s) ==
          TGC_OK);

  tgc_report* r = nullptr;
  REQUIRE(tgc_run_check(s, "largest-chain", &r) == TGC_OK);
  CHECK(tgc_report_satisfied(r) == 1);
  CHECK(std::strlen(tgc_report_json(r)) > 0);
  CHECK(std::strlen(tgc_report_text(r)) > 0);

  tgclaims::Scenario ref =
      tgclaims::load_scenario(fixture("te_largest_chain.json"));
  auto native = tgclaims::run_check(ref, "largest-chain");
  CHECK(tgc_report_json(r) == native.json);
  CHECK(tgc_report_text(r) == native.text);
  tgc_report_free(r);

  r = nullptr;
  REQUIRE(tgc_run_verify(s, "st", &r) == TGC_OK);
  CHECK(tgc_report_satisfied(r) == 1);
  tgc_report_free(r);

  r = nullptr;
  CHECK(tgc_run_check(s, "no-such-theorem", &r) == TGC_ERR_INVALID);
  CHECK(r == nullptr);
  CHECK(tgc_run_verify(s, "no-such-order", &r) == TGC_ERR_INVALID);

  fs::path dir = fs::temp_directory_path() / "tgclaims_capi_curves";
  fs::remove_all(dir);
  fs::create_directories(dir);
  REQUIRE(tgc_run_curves(s, dir.string().c_str(), &r) == TGC_OK);
  CHECK(tgc_report_satisfied(r) == 1);
  CHECK(fs::exists(dir / "sf_largest_a.csv"));
  tgc_report_free(r);

  // Unwritable target directory surfaces as an io failure.
  r = nullptr;
  CHECK(tgc_run_curves(s, (dir / "missing_subdir").string().c_str(), &r) ==
        TGC_ERR_IO);

  REQUIRE(tgc_run_simulate(s, 10000, &r) == TGC_OK);
  CHECK(tgc_report_satisfied(r) == 1);
  tgc_report_free(r);
  CHECK(tgc_run_simulate(s, 100, &r) == TGC_ERR_INVALID);

  tgc_scenario_free(s);
}

TEST_CASE("null handles are tolerated") {
  tgc_baseline_free(nullptr);
  tgc_portfolio_free(nullptr);
  tgc_scenario_free(nullptr);
  tgc_report_free(nullptr);
  CHECK(std::string(tgc_report_json(nullptr)).empty());
  CHECK(std::string(tgc_report_text(nullptr)).empty());
  CHECK(tgc_report_satisfied(nullptr) == 0);
  CHECK(tgc_run_check(nullptr, "bounds", nullptr) == TGC_ERR_INVALID);
}
