#include "tgclaims.h"

#include <cstring>
#include <stdexcept>
#include <string>

#include "tgclaims/claims.hpp"
#include "tgclaims/scenario.hpp"
#include "tgclaims/transmuted.hpp"

struct tgc_baseline {
  tgclaims::Baseline impl;
};
struct tgc_portfolio {
  tgclaims::Portfolio impl;
};
struct tgc_scenario {
  tgclaims::Scenario impl;
};
struct tgc_report {
  tgclaims::CommandResult impl;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string& msg) { g_last_error = msg; }

// Runs fn, translating exceptions into status codes. fn performs its own
// writes to out-parameters only on success, so failures leave them alone.
template <class Fn>
tgc_status guarded(Fn&& fn) {
  try {
    fn();
    return TGC_OK;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return TGC_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    std::string what = e.what();
    if (what.find("JSON parse error") != std::string::npos) return TGC_ERR_PARSE;
    if (what.find("cannot open") != std::string::npos) return TGC_ERR_IO;
    return TGC_ERR_INVALID;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return TGC_ERR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return TGC_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return TGC_ERR_INTERNAL;
  }
}

tgc_status require(bool ok, const char* msg) {
  if (ok) return TGC_OK;
  set_error(msg);
  return TGC_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* tgc_last_error(void) { return g_last_error.c_str(); }

tgc_status tgc_baseline_exponential(double mean, tgc_baseline** out) {
  if (tgc_status s = require(out != nullptr, "out must not be NULL")) return s;
  return guarded([&] {
    *out = new tgc_baseline{tgclaims::Baseline::exponential(mean)};
  });
}

tgc_status tgc_baseline_weibull(double shape, double scale, tgc_baseline** out) {
  if (tgc_status s = require(out != nullptr, "out must not be NULL")) return s;
  return guarded([&] {
    *out = new tgc_baseline{tgclaims::Baseline::weibull(shape, scale)};
  });
}

void tgc_baseline_free(tgc_baseline* b) { delete b; }

#define TGC_REQUIRE_HANDLES(handle, outp)                                      \
  if (tgc_status s = require((handle) != nullptr && (outp) != nullptr,         \
                             "handle and out must not be NULL"))               \
  return s

tgc_status tgc_base_cdf(const tgc_baseline* b, double x, double* out) {
  TGC_REQUIRE_HANDLES(b, out);
  return guarded([&] { *out = b->impl.cdf(x); });
}

tgc_status tgc_base_pdf(const tgc_baseline* b, double x, double* out) {
  TGC_REQUIRE_HANDLES(b, out);
  return guarded([&] { *out = b->impl.pdf(x); });
}

tgc_status tgc_base_quantile(const tgc_baseline* b, double u, double* out) {
  TGC_REQUIRE_HANDLES(b, out);
  return guarded([&] { *out = b->impl.quantile(u); });
}

tgc_status tgc_base_hazard(const tgc_baseline* b, double x, double* out) {
  TGC_REQUIRE_HANDLES(b, out);
  return guarded([&] { *out = b->impl.hazard(x); });
}

tgc_status tgc_base_is_dfr(const tgc_baseline* b, int* out) {
  TGC_REQUIRE_HANDLES(b, out);
  return guarded([&] { *out = b->impl.is_dfr().is_dfr ? 1 : 0; });
}

tgc_status tgc_tg_cdf(const tgc_baseline* b, double lambda, double x, double* out) {
  TGC_REQUIRE_HANDLES(b, out);
  return guarded([&] { *out = tgclaims::tg::cdf(b->impl, lambda, x); });
}

tgc_status tgc_tg_sf(const tgc_baseline* b, double lambda, double x, double* out) {
  TGC_REQUIRE_HANDLES(b, out);
  return guarded([&] { *out = tgclaims::tg::sf(b->impl, lambda, x); });
}

tgc_status tgc_tg_pdf(const tgc_baseline* b, double lambda, double x, double* out) {
  TGC_REQUIRE_HANDLES(b, out);
  return guarded([&] { *out = tgclaims::tg::pdf(b->impl, lambda, x); });
}

tgc_status tgc_tg_hazard(const tgc_baseline* b, double lambda, double x,
                         double* out) {
  TGC_REQUIRE_HANDLES(b, out);
  return guarded([&] { *out = tgclaims::tg::hazard(b->impl, lambda, x); });
}

tgc_status tgc_tg_quantile(const tgc_baseline* b, double lambda, double u,
                           double* out) {
  TGC_REQUIRE_HANDLES(b, out);
  return guarded([&] { *out = tgclaims::tg::quantile(b->impl, lambda, u); });
}

tgc_status tgc_portfolio_create(const tgc_baseline* b, const double* lambdas,
                                const double* probs, size_t n,
                                tgc_portfolio** out) {
  if (tgc_status s = require(b != nullptr && lambdas != nullptr &&
                                 probs != nullptr && out != nullptr && n >= 1,
                             "baseline, arrays, out required; n >= 1"))
    return s;
  return guarded([&] {
    tgclaims::Portfolio pf;
    pf.base = b->impl;
    pf.lambda.assign(lambdas, lambdas + n);
    pf.occurrence.assign(probs, probs + n);
    pf.validate();
    *out = new tgc_portfolio{std::move(pf)};
  });
}

void tgc_portfolio_free(tgc_portfolio* p) { delete p; }

tgc_status tgc_largest_cdf(const tgc_portfolio* p, double x, double* out) {
  TGC_REQUIRE_HANDLES(p, out);
  return guarded([&] { *out = tgclaims::largest_cdf(p->impl, x); });
}

tgc_status tgc_largest_reversed_hazard(const tgc_portfolio* p, double x,
                                       double* out) {
  TGC_REQUIRE_HANDLES(p, out);
  return guarded([&] { *out = tgclaims::largest_reversed_hazard(p->impl, x); });
}

tgc_status tgc_smallest_sf(const tgc_portfolio* p, double x, double* out) {
  TGC_REQUIRE_HANDLES(p, out);
  return guarded([&] { *out = tgclaims::smallest_sf(p->impl, x); });
}

tgc_status tgc_smallest_hazard(const tgc_portfolio* p, double x, double* rate,
                               double* atom) {
  if (tgc_status s = require(p != nullptr && rate != nullptr && atom != nullptr,
                             "handle and outs must not be NULL"))
    return s;
  return guarded([&] {
    tgclaims::SmallestHazard h = tgclaims::smallest_hazard(p->impl, x);
    *rate = h.rate;
    *atom = h.atom_at_zero;
  });
}

tgc_status tgc_extreme_atom(const tgc_portfolio* p, int largest, double* out) {
  TGC_REQUIRE_HANDLES(p, out);
  return guarded([&] {
    tgclaims::ExtremeDistribution d(
        p->impl, largest ? tgclaims::Extreme::largest : tgclaims::Extreme::smallest);
    *out = d.atom_at_zero();
  });
}

tgc_status tgc_extreme_quantile(const tgc_portfolio* p, int largest, double u,
                                double* out) {
  TGC_REQUIRE_HANDLES(p, out);
  return guarded([&] {
    tgclaims::ExtremeDistribution d(
        p->impl, largest ? tgclaims::Extreme::largest : tgclaims::Extreme::smallest);
    *out = d.quantile(u);
  });
}

tgc_status tgc_scenario_load(const char* path, tgc_scenario** out) {
  if (tgc_status s = require(path != nullptr && out != nullptr,
                             "path and out must not be NULL"))
    return s;
  return guarded([&] {
    *out = new tgc_scenario{tgclaims::load_scenario(path)};
  });
}

tgc_status tgc_scenario_parse(const char* json_text, tgc_scenario** out) {
  if (tgc_status s = require(json_text != nullptr && out != nullptr,
                             "json_text and out must not be NULL"))
    return s;
  return guarded([&] {
    *out = new tgc_scenario{tgclaims::parse_scenario(json_text)};
  });
}

void tgc_scenario_free(tgc_scenario* s) { delete s; }

tgc_status tgc_scenario_set_grid_points(tgc_scenario* s, int point_count) {
  if (tgc_status st = require(s != nullptr, "scenario must not be NULL")) return st;
  return guarded([&] {
    tgclaims::GridSpec g = s->impl.grid;
    g.point_count = point_count;
    g.validate();
    s->impl.grid = g;
  });
}

tgc_status tgc_scenario_set_seed(tgc_scenario* s, uint64_t seed) {
  if (tgc_status st = require(s != nullptr, "scenario must not be NULL")) return st;
  s->impl.seed = seed;
  return TGC_OK;
}

tgc_status tgc_run_check(const tgc_scenario* s, const char* theorem,
                         tgc_report** out) {
  if (tgc_status st = require(s != nullptr && theorem != nullptr && out != nullptr,
                              "scenario, theorem, out required"))
    return st;
  return guarded([&] {
    *out = new tgc_report{tgclaims::run_check(s->impl, theorem)};
  });
}

tgc_status tgc_run_verify(const tgc_scenario* s, const char* order,
                          tgc_report** out) {
  if (tgc_status st = require(s != nullptr && order != nullptr && out != nullptr,
                              "scenario, order, out required"))
    return st;
  return guarded([&] {
    *out = new tgc_report{tgclaims::run_verify(s->impl, order)};
  });
}

tgc_status tgc_run_curves(const tgc_scenario* s, const char* out_dir,
                          tgc_report** out) {
  if (tgc_status st = require(s != nullptr && out_dir != nullptr && out != nullptr,
                              "scenario, out_dir, out required"))
    return st;
  return guarded([&] {
    *out = new tgc_report{tgclaims::run_curves(s->impl, out_dir)};
  });
}

tgc_status tgc_run_simulate(const tgc_scenario* s, uint64_t count,
                            tgc_report** out) {
  if (tgc_status st = require(s != nullptr && out != nullptr,
                              "scenario and out required"))
    return st;
  return guarded([&] {
    *out = new tgc_report{tgclaims::run_simulate(s->impl, count)};
  });
}

const char* tgc_report_json(const tgc_report* r) {
  return r ? r->impl.json.c_str() : "";
}

const char* tgc_report_text(const tgc_report* r) {
  return r ? r->impl.text.c_str() : "";
}

int tgc_report_satisfied(const tgc_report* r) {
  return r && r->impl.satisfied ? 1 : 0;
}

void tgc_report_free(tgc_report* r) { delete r; }

}  // extern "C"
