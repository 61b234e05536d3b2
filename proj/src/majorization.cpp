#include "tgclaims/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tgclaims {

namespace {

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<double>());
  return v;
}

void require_same_size(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("majorization: vectors must be nonempty and equal-sized");
}

}  // namespace

bool weak_submajorize(const std::vector<double>& lhs, const std::vector<double>& rhs,
                      double slack) {
  require_same_size(lhs, rhs);
  auto a = sorted_desc(lhs);
  auto b = sorted_desc(rhs);
  double sa = 0.0, sb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa += a[k];
    sb += b[k];
    if (sa > sb + slack) return false;
  }
  return true;
}

bool weak_supermajorize(const std::vector<double>& lhs, const std::vector<double>& rhs,
                        double slack) {
  require_same_size(lhs, rhs);
  // Bottom-k sums of lhs >= bottom-k sums of rhs, smallest entries first.
  auto a = lhs;
  auto b = rhs;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double sa = 0.0, sb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa += a[k];
    sb += b[k];
    if (sa < sb - slack) return false;
  }
  return true;
}

bool majorize(const std::vector<double>& lhs, const std::vector<double>& rhs,
              double slack, double total_tol) {
  require_same_size(lhs, rhs);
  double ta = std::accumulate(lhs.begin(), lhs.end(), 0.0);
  double tb = std::accumulate(rhs.begin(), rhs.end(), 0.0);
  if (std::abs(ta - tb) > total_tol) return false;
  return weak_submajorize(lhs, rhs, slack);
}

void TTransform::validate() const {
  if (!(omega >= 0.0 && omega <= 1.0))
    throw std::invalid_argument("t-transform: omega must lie in [0, 1]");
  if (n < 2) throw std::invalid_argument("t-transform: need n >= 2");
  if (i >= n || j >= n || i == j)
    throw std::invalid_argument("t-transform: coordinate pair out of range");
}

void ParamMatrix::validate() const {
  if (row0.size() != row1.size() || row0.empty())
    throw std::invalid_argument("param matrix: rows must be nonempty and equal-sized");
}

ParamMatrix apply_t_transform(const ParamMatrix& m, const TTransform& t) {
  m.validate();
  t.validate();
  if (t.n != m.cols())
    throw std::invalid_argument("t-transform: dimension mismatch with matrix");
  ParamMatrix out = m;
  double w = t.omega;
  for (auto* row : {&out.row0, &out.row1}) {
    double ci = (*row)[t.i];
    double cj = (*row)[t.j];
    (*row)[t.i] = w * ci + (1.0 - w) * cj;
    (*row)[t.j] = (1.0 - w) * ci + w * cj;
  }
  return out;
}

std::vector<ParamMatrix> chain_apply(const ParamMatrix& m,
                                     const std::vector<TTransform>& chain) {
  if (chain.empty()) throw std::invalid_argument("chain_apply: empty chain");
  std::vector<ParamMatrix> stages;
  stages.reserve(chain.size());
  ParamMatrix cur = m;
  for (const auto& t : chain) {
    cur = apply_t_transform(cur, t);
    stages.push_back(cur);
  }
  return stages;
}

TTransform collapse_chain(const std::vector<TTransform>& chain) {
  if (chain.empty()) throw std::invalid_argument("collapse_chain: empty chain");
  TTransform acc = chain.front();
  acc.validate();
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const auto& t = chain[k];
    t.validate();
    if (!acc.same_structure(t))
      throw std::invalid_argument("collapse_chain: transforms mix different coordinate pairs");
    // Composing two symmetric mixes on the same pair stays in the family:
    // the identity coefficient multiplies out to w1*w2 + (1-w1)*(1-w2).
    acc.omega = acc.omega * t.omega + (1.0 - acc.omega) * (1.0 - t.omega);
  }
  return acc;
}

SnCheck in_S_n(const ParamMatrix& m, double slack) {
  m.validate();
  std::size_t n = m.cols();
  for (std::size_t k = 0; k < n; ++k) {
    if (!(m.row0[k] >= -1.0 && m.row0[k] <= 1.0)) {
      return {false, "shape parameter outside [-1, 1]", k, k};
    }
    if (!(m.row1[k] > 0.0)) {
      return {false, "second-row entry not positive", k, k};
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      double prod = (m.row0[a] - m.row0[b]) * (m.row1[a] - m.row1[b]);
      if (prod > slack) {
        return {false, "rows are not oppositely ordered", a, b};
      }
    }
  }
  return {true, "", 0, 0};
}

HFunction HFunction::log_shift() {
  HFunction h;
  h.h_ = [](double p) { return std::log(2.0 + p); };
  h.inv_ = [](double u) { return std::exp(u) - 2.0; };
  h.name_ = "log_shift";
  return h;
}

HFunction HFunction::rational() {
  HFunction h;
  h.h_ = [](double p) { return (5.0 * p + 2.0) / (p + 1.0); };
  h.inv_ = [](double u) { return (u - 2.0) / (5.0 - u); };
  h.name_ = "rational";
  return h;
}

HFunction HFunction::custom(std::function<double(double)> h,
                            std::function<double(double)> h_inverse,
                            std::string name) {
  if (!h || !h_inverse) throw std::invalid_argument("h-function: callbacks required");
  HFunction out;
  out.h_ = std::move(h);
  out.inv_ = std::move(h_inverse);
  out.name_ = std::move(name);
  return out;
}

HFunction HFunction::tabulated(std::vector<double> p, std::vector<double> value) {
  if (p.size() != value.size() || p.size() < 2)
    throw std::invalid_argument("h-function table: need matching arrays of size >= 2");
  if (p.front() != 0.0 || p.back() != 1.0)
    throw std::invalid_argument("h-function table: p must span [0, 1]");
  for (std::size_t k = 1; k < p.size(); ++k)
    if (!(p[k] > p[k - 1]) || !(value[k] > value[k - 1]))
      throw std::invalid_argument("h-function table: p and value must be strictly increasing");
  HFunction out;
  out.name_ = "tabulated";
  out.table_p_ = std::move(p);
  out.table_value_ = std::move(value);
  auto interp = [](const std::vector<double>& xs, const std::vector<double>& ys,
                   double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs.begin());
    double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
  };
  // Captured by value: HFunction objects are copied around, so the callbacks
  // must not reference the instance that built them.
  std::vector<double> tp = out.table_p_;
  std::vector<double> tv = out.table_value_;
  out.h_ = [tp, tv, interp](double x) { return interp(tp, tv, x); };
  out.inv_ = [tp, tv, interp](double u) { return interp(tv, tp, u); };
  return out;
}

double HFunction::eval(double p) const {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("h-function: p must lie in [0, 1]");
  return h_(p);
}

double HFunction::inverse(double u) const { return inv_(u); }

void HFunction::validate() const {
  int const kPoints = 1001;
  std::vector<double> vals(kPoints);
  for (int k = 0; k < kPoints; ++k) {
    double p = static_cast<double>(k) / (kPoints - 1);
    vals[k] = h_(p);
    if (!std::isfinite(vals[k]))
      throw std::invalid_argument("h-function '" + name_ + "': non-finite value on [0, 1]");
  }
  double scale = std::max(std::abs(vals.front()), std::abs(vals.back()));
  double curve_slack = 1e-9 * std::max(1.0, scale);
  for (int k = 1; k < kPoints; ++k) {
    double d1 = vals[k] - vals[k - 1];
    if (d1 < 1e-9)
      throw std::invalid_argument("h-function '" + name_ + "': not strictly increasing");
    if (k >= 2) {
      double d0 = vals[k - 1] - vals[k - 2];
      if (d1 - d0 > curve_slack)
        throw std::invalid_argument("h-function '" + name_ + "': not concave");
    }
  }
  // Round-trip inverse sanity at a few interior points.
  for (double p : {0.1, 0.4, 0.75}) {
    double back = inv_(h_(p));
    if (std::abs(back - p) > 1e-8)
      throw std::invalid_argument("h-function '" + name_ + "': inverse does not round-trip");
  }
}

}  // namespace tgclaims
