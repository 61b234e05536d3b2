#include "tgclaims/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tgclaims {

namespace {

std::string fmt(const char* f, ...) {
  va_list args;
  va_start(args, f);
  char buf[256];
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

void require_comparable(const Portfolio& a, const Portfolio& b) {
  a.validate();
  b.validate();
  if (!(a.base == b.base))
    throw std::invalid_argument("theorem check: portfolios must share the baseline");
  if (a.size() != b.size())
    throw std::invalid_argument("theorem check: portfolios must have equal size");
}

Condition h_valid_condition(const HFunction& h) {
  Condition c;
  c.name = "h is strictly increasing and concave";
  try {
    h.validate();
    c.holds = true;
    c.detail = fmt("validated '%s' on a 1001-point grid", h.name().c_str());
  } catch (const std::exception& e) {
    c.holds = false;
    c.detail = e.what();
  }
  return c;
}

Condition sn_condition(const char* name, const ParamMatrix& m, double slack) {
  Condition c;
  c.name = name;
  SnCheck check = in_S_n(m, slack);
  c.holds = check.in_region;
  c.detail = check.in_region
                 ? "rows are oppositely ordered"
                 : fmt("%s (columns %zu, %zu)", check.reason.c_str(),
                       check.col_a + 1, check.col_b + 1);
  return c;
}

// weak_submajorize with a report of the first failing top-k sum.
Condition submajorize_condition(const std::string& name,
                                const std::vector<double>& lhs,
                                const std::vector<double>& rhs, double slack) {
  Condition c;
  c.name = name;
  auto a = lhs;
  auto b = rhs;
  std::sort(a.begin(), a.end(), std::greater<double>());
  std::sort(b.begin(), b.end(), std::greater<double>());
  double sa = 0.0, sb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa += a[k];
    sb += b[k];
    if (sa > sb + slack) {
      c.holds = false;
      c.detail = fmt("top-%zu sums: %.9g > %.9g", k + 1, sa, sb);
      return c;
    }
  }
  c.holds = true;
  c.detail = "all top-k partial sums ordered";
  return c;
}

ParamMatrix lambda_h_matrix(const Portfolio& pf, const HFunction& h) {
  ParamMatrix m;
  m.row0 = pf.lambda;
  m.row1.reserve(pf.size());
  for (double p : pf.occurrence) m.row1.push_back(h.eval(p));
  return m;
}

void confirm(TheoremVerdict& v, OrderKind kind, const std::string& statement,
             const std::function<OrderVerdict()>& run) {
  if (v.all_conditions_hold()) {
    v.implied_order = ImpliedOrder{kind, statement};
    v.exploratory = false;
  } else {
    v.exploratory = true;
  }
  v.numeric_confirmation = run();
}

}  // namespace

const char* theorem_id_name(TheoremId id) {
  switch (id) {
    case TheoremId::largest_st_single_transform:
      return "largest_st_single_transform";
    case TheoremId::largest_st_uniform_chain:
      return "largest_st_uniform_chain";
    case TheoremId::largest_st_mixed_chain:
      return "largest_st_mixed_chain";
    case TheoremId::largest_rh_weak_majorization:
      return "largest_rh_weak_majorization";
    case TheoremId::smallest_st_majorization:
      return "smallest_st_majorization";
    case TheoremId::smallest_hr_majorization:
      return "smallest_hr_majorization";
    case TheoremId::smallest_disp_dfr:
      return "smallest_disp_dfr";
    case TheoremId::homogeneous_bounds:
      return "homogeneous_bounds";
  }
  return "unknown";
}

bool TheoremVerdict::all_conditions_hold() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const Condition& c) { return c.holds; });
}

TheoremVerdict check_thm_largest_chain(const Portfolio& a, const Portfolio& b,
                                       const HFunction& h,
                                       const std::vector<TTransform>& chain,
                                       const GridSpec& grid) {
  require_comparable(a, b);
  TheoremVerdict v;

  bool same_structure = true;
  for (std::size_t k = 1; k < chain.size(); ++k)
    same_structure = same_structure && chain[k].same_structure(chain.front());
  v.theorem_id = chain.size() <= 1 ? TheoremId::largest_st_single_transform
                 : same_structure  ? TheoremId::largest_st_uniform_chain
                                   : TheoremId::largest_st_mixed_chain;

  Condition h_ok = h_valid_condition(h);
  v.conditions.push_back(h_ok);

  Condition source{"(lambda, h(p)) lies in S_n", false, ""};
  Condition reproduces{"chain reproduces the target parameters", false, ""};
  Condition intermediates{"intermediate stages lie in S_n", false, ""};

  if (chain.empty()) {
    reproduces.detail = "no chain supplied";
    intermediates.detail = "no chain supplied";
  }

  if (h_ok.holds && chain.empty()) {
    source = sn_condition("(lambda, h(p)) lies in S_n", lambda_h_matrix(a, h),
                          grid.slack);
  }
  if (h_ok.holds && !chain.empty()) {
    ParamMatrix ma = lambda_h_matrix(a, h);
    ParamMatrix mb = lambda_h_matrix(b, h);

    source = sn_condition("(lambda, h(p)) lies in S_n", ma, grid.slack);

    std::vector<ParamMatrix> stages = chain_apply(ma, chain);
    const ParamMatrix& last = stages.back();
    double worst = 0.0;
    for (std::size_t k = 0; k < last.cols(); ++k) {
      worst = std::max(worst, std::abs(last.row0[k] - mb.row0[k]));
      worst = std::max(worst, std::abs(last.row1[k] - mb.row1[k]));
    }
    reproduces.holds = worst <= kChainEntryTolerance;
    reproduces.detail = fmt("worst entry deviation %.3g (tolerance %.3g)", worst,
                            kChainEntryTolerance);

    if (chain.size() <= 1) {
      intermediates.holds = true;
      intermediates.detail = "single transform, no intermediate stages";
    } else if (same_structure) {
      TTransform collapsed = collapse_chain(chain);
      intermediates.holds = true;
      intermediates.detail =
          fmt("chain shares one coordinate pair and collapses to omega=%.9g; "
              "no intermediate membership needed",
              collapsed.omega);
    } else {
      intermediates.holds = true;
      intermediates.detail = "all intermediate stages verified";
      for (std::size_t k = 0; k + 1 < stages.size(); ++k) {
        SnCheck check = in_S_n(stages[k], grid.slack);
        if (!check.in_region) {
          intermediates.holds = false;
          intermediates.detail =
              fmt("stage %zu: %s (columns %zu, %zu)", k + 1,
                  check.reason.c_str(), check.col_a + 1, check.col_b + 1);
          break;
        }
      }
    }
  }
  if (!h_ok.holds) {
    source.detail = "not evaluated: h failed validation";
    reproduces.detail = "not evaluated: h failed validation";
    intermediates.detail = "not evaluated: h failed validation";
  }

  v.conditions.push_back(source);
  v.conditions.push_back(reproduces);
  v.conditions.push_back(intermediates);

  ExtremeDistribution db(b, Extreme::largest);
  ExtremeDistribution da(a, Extreme::largest);
  confirm(v, OrderKind::st, "largest claim of portfolio_b precedes portfolio_a (st)",
          [&] { return check_st(db, da, grid); });
  return v;
}

TheoremVerdict check_thm_largest_rh(const Portfolio& a, const Portfolio& b,
                                    const HFunction& h, const GridSpec& grid) {
  require_comparable(a, b);
  TheoremVerdict v;
  v.theorem_id = TheoremId::largest_rh_weak_majorization;

  Condition common{"shape parameters share one common value", true,
                   fmt("lambda = %.9g", a.lambda.front())};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.lambda[i] != a.lambda.front() || b.lambda[i] != a.lambda.front()) {
      common.holds = false;
      common.detail = fmt("entry %zu differs: %.9g vs %.9g", i + 1, a.lambda[i],
                          b.lambda[i]);
      break;
    }
  }
  v.conditions.push_back(common);
  Condition h_ok = h_valid_condition(h);
  v.conditions.push_back(h_ok);

  if (h_ok.holds) {
    std::vector<double> ha, hb;
    for (double p : a.occurrence) ha.push_back(h.eval(p));
    for (double p : b.occurrence) hb.push_back(h.eval(p));
    v.conditions.push_back(submajorize_condition(
        "h(p_b) weakly submajorized by h(p_a)", hb, ha, grid.slack));
  } else {
    v.conditions.push_back(
        {"h(p_b) weakly submajorized by h(p_a)", false,
         "not evaluated: h failed validation"});
  }

  ExtremeDistribution db(b, Extreme::largest);
  ExtremeDistribution da(a, Extreme::largest);
  confirm(v, OrderKind::rh, "largest claim of portfolio_b precedes portfolio_a (rh)",
          [&] { return check_rh(db, da, grid); });
  return v;
}

namespace {

// The shared hypothesis pair of the smallest-claim st and hr results.
void smallest_conditions(TheoremVerdict& v, const Portfolio& a, const Portfolio& b,
                         double slack) {
  Condition prod{"occurrence products ordered: prod(p_b) <= prod(p_a)", false, ""};
  double pa = a.all_claim_probability();
  double pb = b.all_claim_probability();
  prod.holds = pb <= pa + slack;
  prod.detail = fmt("prod(p_b) = %.9g, prod(p_a) = %.9g", pb, pa);
  v.conditions.push_back(prod);
  v.conditions.push_back(submajorize_condition(
      "lambda_a weakly submajorized by lambda_b", a.lambda, b.lambda, slack));
}

}  // namespace

TheoremVerdict check_thm_smallest_st(const Portfolio& a, const Portfolio& b,
                                     const GridSpec& grid) {
  require_comparable(a, b);
  TheoremVerdict v;
  v.theorem_id = TheoremId::smallest_st_majorization;
  smallest_conditions(v, a, b, grid.slack);
  ExtremeDistribution db(b, Extreme::smallest);
  ExtremeDistribution da(a, Extreme::smallest);
  confirm(v, OrderKind::st, "smallest claim of portfolio_b precedes portfolio_a (st)",
          [&] { return check_st(db, da, grid); });
  return v;
}

TheoremVerdict check_thm_smallest_hr(const Portfolio& a, const Portfolio& b,
                                     const GridSpec& grid) {
  require_comparable(a, b);
  TheoremVerdict v;
  v.theorem_id = TheoremId::smallest_hr_majorization;
  smallest_conditions(v, a, b, grid.slack);
  ExtremeDistribution db(b, Extreme::smallest);
  ExtremeDistribution da(a, Extreme::smallest);
  confirm(v, OrderKind::hr, "smallest claim of portfolio_b precedes portfolio_a (hr)",
          [&] { return check_hr(db, da, grid); });
  return v;
}

TheoremVerdict check_thm_smallest_disp(const Portfolio& a, const Portfolio& b,
                                       const GridSpec& grid) {
  require_comparable(a, b);
  TheoremVerdict v;
  v.theorem_id = TheoremId::smallest_disp_dfr;
  smallest_conditions(v, a, b, grid.slack);

  Condition dfr{"baseline has decreasing failure rate", false, ""};
  DfrCheck check = a.base.is_dfr(grid);
  dfr.holds = check.is_dfr;
  dfr.detail = check.is_dfr ? "hazard nonincreasing"
                            : fmt("hazard increases near x = %.9g", check.witness_x);
  v.conditions.push_back(dfr);

  Condition range{"portfolio_b shapes lie in [0, 1]", true, ""};
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!(b.lambda[i] >= 0.0 && b.lambda[i] <= 1.0)) {
      range.holds = false;
      range.detail = fmt("entry %zu is %.9g", i + 1, b.lambda[i]);
      break;
    }
  }
  if (range.holds) range.detail = "all entries within range";
  v.conditions.push_back(range);

  Condition ceiling{"density at zero below (1 - prod(p_b)) / sum(1 + lambda_b)", false,
                    ""};
  double f0 = a.base.pdf(0.0);
  double cap = (1.0 - b.all_claim_probability()) /
               std::accumulate(b.lambda.begin(), b.lambda.end(),
                               static_cast<double>(b.size()));
  if (std::isinf(f0)) {
    ceiling.holds = false;
    ceiling.detail = "density is infinite at zero";
  } else {
    ceiling.holds = f0 <= cap + grid.slack;
    ceiling.detail = fmt("f(0) = %.9g, ceiling = %.9g", f0, cap);
  }
  v.conditions.push_back(ceiling);

  ExtremeDistribution db(b, Extreme::smallest);
  ExtremeDistribution da(a, Extreme::smallest);
  confirm(v, OrderKind::disp,
          "smallest claim of portfolio_b precedes portfolio_a (disp)",
          [&] { return check_disp(db, da, grid); });
  return v;
}

TheoremVerdict check_bounds(const Portfolio& pf, const HFunction* h,
                            const GridSpec& grid) {
  pf.validate();
  grid.validate();
  TheoremVerdict v;
  v.theorem_id = TheoremId::homogeneous_bounds;

  Condition two{"portfolio has exactly two policies", pf.size() == 2,
                fmt("n = %zu", pf.size())};
  v.conditions.push_back(two);

  Condition h_ok{"h is strictly increasing and concave", false, "h not provided"};
  Condition s2{"(lambda, h(p)) lies in S_2", false, "not evaluated"};
  if (h != nullptr) {
    h_ok = h_valid_condition(*h);
    if (h_ok.holds && pf.size() == 2)
      s2 = sn_condition("(lambda, h(p)) lies in S_2", lambda_h_matrix(pf, *h),
                        grid.slack);
  }
  v.conditions.push_back(h_ok);
  v.conditions.push_back(s2);

  Condition largest{"largest-claim bound stays below the exact survival", false,
                    "not evaluated: prerequisites failed"};
  ExtremeDistribution dl(pf, Extreme::largest);
  if (two.holds && h_ok.holds && s2.holds) {
    auto xs = comparison_grid(dl, dl, grid);
    double worst = -1.0;  // largest bound excess over the exact survival
    for (double x : xs)
      worst = std::max(worst, largest_bound_sf(pf, *h, x) - dl.sf(x));
    largest.holds = worst <= grid.slack;
    largest.detail = fmt("worst bound excess %.3g over %zu grid points", worst,
                         xs.size());
  }
  v.conditions.push_back(largest);

  Condition smallest{"smallest-claim bound stays below the exact survival", false, ""};
  ExtremeDistribution ds(pf, Extreme::smallest);
  auto xs = comparison_grid(ds, ds, grid);
  double worst = -1.0;
  for (double x : xs)
    worst = std::max(worst, smallest_bound_sf(pf, x) - ds.sf(x));
  smallest.holds = worst <= grid.slack;
  smallest.detail = fmt("worst bound excess %.3g over %zu grid points", worst,
                        xs.size());
  v.conditions.push_back(smallest);

  return v;
}

}  // namespace tgclaims
