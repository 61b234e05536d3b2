#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgclaims/claims.hpp"
#include "tgclaims/majorization.hpp"
#include "tgclaims/orders.hpp"

namespace tgclaims {

enum class TheoremId {
  largest_st_single_transform,
  largest_st_uniform_chain,
  largest_st_mixed_chain,
  largest_rh_weak_majorization,
  smallest_st_majorization,
  smallest_hr_majorization,
  smallest_disp_dfr,
  homogeneous_bounds,
};

const char* theorem_id_name(TheoremId id);

struct Condition {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct ImpliedOrder {
  OrderKind kind = OrderKind::st;
  std::string statement;  // human-readable direction
};

/// Structured outcome of a sufficient-condition check: the hypothesis
/// checklist, the ordering the result would imply, and the grid
/// confirmation. When hypotheses fail the implied order is absent but the
/// numeric check still runs, flagged exploratory, since the conditions are
/// sufficient rather than necessary.
struct TheoremVerdict {
  TheoremId theorem_id = TheoremId::smallest_st_majorization;
  std::vector<Condition> conditions;
  std::optional<ImpliedOrder> implied_order;
  std::optional<OrderVerdict> numeric_confirmation;
  bool exploratory = false;

  bool all_conditions_hold() const;
};

/// Tolerance for matching a chain's output against supplied parameters;
/// generous enough to absorb 4-decimal roundings in scenario files.
inline constexpr double kChainEntryTolerance = 5e-4;

/// Largest-claim comparison via chain majorization. Portfolio a dominates:
/// applying the chain to (lambda_a, h(p_a)) must reproduce portfolio b's
/// parameters. Verifies, in order: h validity, membership of the source
/// matrix in S_n, chain reproduction, and S_n membership of intermediate
/// stages when the transforms mix different coordinate pairs (same-structure
/// chains collapse to a single transform and need no intermediate checks).
/// Implied order: largest(b) precedes largest(a) in st.
TheoremVerdict check_thm_largest_chain(const Portfolio& a, const Portfolio& b,
                                       const HFunction& h,
                                       const std::vector<TTransform>& chain,
                                       const GridSpec& grid = {});

/// Largest-claim reversed-hazard comparison for portfolios sharing one
/// common shape value: h(p_b) weakly submajorized by h(p_a) implies
/// largest(b) precedes largest(a) in rh.
TheoremVerdict check_thm_largest_rh(const Portfolio& a, const Portfolio& b,
                                    const HFunction& h, const GridSpec& grid = {});

/// Smallest-claim st comparison: prod(p_b) <= prod(p_a) and lambda_a weakly
/// submajorized by lambda_b imply smallest(b) precedes smallest(a) in st.
TheoremVerdict check_thm_smallest_st(const Portfolio& a, const Portfolio& b,
                                     const GridSpec& grid = {});

/// Same hypotheses as the st version but concluding the stronger hr order.
TheoremVerdict check_thm_smallest_hr(const Portfolio& a, const Portfolio& b,
                                     const GridSpec& grid = {});

/// Dispersive comparison: adds a DFR baseline, lambda_b in [0,1]^n, and the
/// density ceiling f(0) <= (1 - prod p_b) / sum(1 + lambda_b,i). A baseline
/// with infinite density at zero fails the ceiling.
TheoremVerdict check_thm_smallest_disp(const Portfolio& a, const Portfolio& b,
                                       const GridSpec& grid = {});

/// Homogeneous-proxy bounds for one portfolio. The largest-claim bound needs
/// n = 2, a valid h, and (lambda, h(p)) in S_2; the smallest-claim bound has
/// no side conditions. Pass h = nullptr to skip the largest-claim bound.
TheoremVerdict check_bounds(const Portfolio& pf, const HFunction* h,
                            const GridSpec& grid = {});

}  // namespace tgclaims
