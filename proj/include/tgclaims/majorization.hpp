#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tgclaims {

/// Weak submajorization: every top-k partial sum (largest entries first) of
/// lhs is <= the corresponding sum of rhs, up to an absolute slack.
bool weak_submajorize(const std::vector<double>& lhs, const std::vector<double>& rhs,
                      double slack = 1e-12);

/// Weak supermajorization: every bottom-up partial sum of decreasingly sorted
/// lhs is >= that of rhs; equivalent formulation via prefix sums of the
/// increasing rearrangement.
bool weak_supermajorize(const std::vector<double>& lhs, const std::vector<double>& rhs,
                        double slack = 1e-12);

/// Full majorization: weak submajorization plus equal totals (tolerance 1e-9).
bool majorize(const std::vector<double>& lhs, const std::vector<double>& rhs,
              double slack = 1e-12, double total_tol = 1e-9);

/// A T-transform acting on column vectors of length n: the doubly stochastic
/// matrix w*I + (1-w)*P where P swaps coordinates i and j. Stored
/// structurally; never materialized as a dense matrix.
struct TTransform {
  double omega = 1.0;
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t n = 2;

  void validate() const;
  bool same_structure(const TTransform& other) const {
    return n == other.n && ((i == other.i && j == other.j) ||
                            (i == other.j && j == other.i));
  }
};

/// Two-row parameter matrix: row 0 carries shape parameters, row 1 carries
/// occurrence-derived values. Columns index policies.
struct ParamMatrix {
  std::vector<double> row0;
  std::vector<double> row1;

  std::size_t cols() const { return row0.size(); }
  void validate() const;
};

/// Right-multiplication by the transform: columns i and j are mixed,
///   col_i' = w*col_i + (1-w)*col_j,  col_j' = (1-w)*col_i + w*col_j,
/// all other columns unchanged.
ParamMatrix apply_t_transform(const ParamMatrix& m, const TTransform& t);

/// Applies transforms left to right; result[k] is the matrix after k+1
/// transforms, so result.back() is the final matrix.
std::vector<ParamMatrix> chain_apply(const ParamMatrix& m,
                                     const std::vector<TTransform>& chain);

/// Collapses a chain of same-structure transforms into one. Two transforms
/// with mixing weights w1, w2 on the same coordinate pair compose to weight
/// w1*w2 + (1-w1)*(1-w2). Throws if structures differ.
TTransform collapse_chain(const std::vector<TTransform>& chain);

/// Membership report for the oppositely-ordered parameter region.
struct SnCheck {
  bool in_region = false;
  std::string reason;    // empty when in_region
  std::size_t col_a = 0; // offending column pair, when applicable
  std::size_t col_b = 0;
};

/// The region S_n: matrices (lambda; u) with lambda in [-1,1]^n, u > 0
/// componentwise, and rows oppositely ordered:
/// (lambda_i - lambda_j) * (u_i - u_j) <= slack for every pair i < j.
SnCheck in_S_n(const ParamMatrix& m, double slack = 1e-12);

/// Strictly increasing concave transform of occurrence probabilities.
class HFunction {
 public:
  static HFunction log_shift();  // h(p) = log(2 + p)
  static HFunction rational();   // h(p) = (5p + 2) / (p + 1)
  static HFunction custom(std::function<double(double)> h,
                          std::function<double(double)> h_inverse,
                          std::string name);
  /// Piecewise-linear h through (p[k], value[k]); p must span [0, 1] and
  /// both arrays must be strictly increasing. validate() gates concavity.
  static HFunction tabulated(std::vector<double> p, std::vector<double> value);

  double eval(double p) const;
  double inverse(double u) const;
  const std::string& name() const { return name_; }
  const std::vector<double>& table_p() const { return table_p_; }
  const std::vector<double>& table_value() const { return table_value_; }

  /// Checks increase and concavity on a 1001-point grid over [0, 1]:
  /// first differences must be >= 1e-9 and second differences nonpositive
  /// up to a small slack. Throws std::invalid_argument on failure.
  void validate() const;

 private:
  HFunction() = default;
  std::function<double(double)> h_;
  std::function<double(double)> inv_;
  std::string name_;
  std::vector<double> table_p_;      // populated for tabulated h only
  std::vector<double> table_value_;
};

}  // namespace tgclaims
