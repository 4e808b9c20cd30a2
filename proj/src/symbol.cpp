#include "trigsub/symbol.hpp"

#include <cmath>
#include <vector>

namespace trigsub {

namespace {

int parity(int exponent) { return ((exponent % 2) + 2) % 2; }

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::map<int, double> terms)
    : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < kEpsilon)
      it = terms_.erase(it);
    else
      ++it;
  }
}

double LaurentPolynomial::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0.0 : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (empty()) throw Error("zero polynomial has no exponent range");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (empty()) throw Error("zero polynomial has no exponent range");
  return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::shifted(int offset) const {
  std::map<int, double> result;
  for (const auto& [e, c] : terms_) result[e + offset] = c;
  return LaurentPolynomial(std::move(result));
}

LaurentPolynomial operator+(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  std::map<int, double> result = a.terms_;
  for (const auto& [e, c] : b.terms_) result[e] += c;
  return LaurentPolynomial(std::move(result));
}

LaurentPolynomial operator-(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  std::map<int, double> result = a.terms_;
  for (const auto& [e, c] : b.terms_) result[e] -= c;
  return LaurentPolynomial(std::move(result));
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  std::map<int, double> result;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) result[ea + eb] += ca * cb;
  return LaurentPolynomial(std::move(result));
}

LaurentPolynomial operator*(double s, const LaurentPolynomial& p) {
  std::map<int, double> result;
  for (const auto& [e, c] : p.terms_) result[e] = s * c;
  return LaurentPolynomial(std::move(result));
}

LaurentPolynomial symbol_of_mask(const Mask& mask) {
  const Eigen::ArrayXd lo = mask.low_rule();
  const Eigen::ArrayXd hi = mask.high_rule();
  const int m = mask.arity();
  const int b = mask.stencil_back();
  std::map<int, double> terms;
  for (int s = 0; s < m; ++s) {
    terms[2 * (b - s)] += lo[s];
    terms[2 * (b - s) + 1] += hi[s];
  }
  return LaurentPolynomial(std::move(terms));
}

LaurentPolynomial multiply_by_smoothing_factor(const LaurentPolynomial& p) {
  std::map<int, double> result;
  for (const auto& [e, c] : p.terms()) {
    result[e] += 0.5 * c;
    result[e + 1] += 0.5 * c;
  }
  return LaurentPolynomial(std::move(result));
}

LaurentPolynomial divide_by_smoothing_factor(const LaurentPolynomial& p) {
  if (p.empty()) throw NotDivisible(0.0);
  const int lo = p.min_exponent();
  const int hi = p.max_exponent();
  std::vector<double> dense(hi - lo + 1, 0.0);
  for (const auto& [e, c] : p.terms()) dense[e - lo] = c;

  // p = (1+z) q: q_0 = p_0, q_i = p_i - q_{i-1}; the last carry is the
  // remainder.
  std::map<int, double> q;
  double carry = 0.0;
  for (int i = 0; i + 1 < static_cast<int>(dense.size()); ++i) {
    carry = dense[i] - carry;
    q[lo + i] = 2.0 * carry;
  }
  const double residual = std::abs(dense.back() - carry);
  if (residual > 1e-10) throw NotDivisible(residual);
  return LaurentPolynomial(std::move(q));
}

double scheme_norm(const LaurentPolynomial& p) {
  double sums[2] = {0.0, 0.0};
  for (const auto& [e, c] : p.terms()) sums[parity(e)] += std::abs(c);
  return std::max(sums[0], sums[1]);
}

double iterated_scheme_norm(const LaurentPolynomial& p, int iterates) {
  if (iterates < 1) throw Error("iterate count must be positive");
  LaurentPolynomial product({{0, 1.0}});
  for (int l = 0; l < iterates; ++l) {
    std::map<int, double> stretched;
    for (const auto& [e, c] : p.terms()) stretched[e * (1 << l)] = c;
    product = product * LaurentPolynomial(std::move(stretched));
  }
  const int stride = 1 << iterates;
  std::vector<double> sums(stride, 0.0);
  for (const auto& [e, c] : product.terms())
    sums[((e % stride) + stride) % stride] += std::abs(c);
  double norm = 0.0;
  for (double s : sums) norm = std::max(norm, s);
  return norm;
}

LaurentPolynomial contractivity_symbol(const LaurentPolynomial& p, int order) {
  LaurentPolynomial q = p;
  for (int j = 0; j <= order; ++j) q = divide_by_smoothing_factor(q);
  return 0.5 * q;
}

int smoothness_via_contractivity(const LaurentPolynomial& p, int max_order,
                                 int max_iterates) {
  int best = -1;
  LaurentPolynomial q = p;
  for (int j = 0; j <= max_order; ++j) {
    try {
      q = divide_by_smoothing_factor(q);
    } catch (const NotDivisible&) {
      break;
    }
    const LaurentPolynomial difference_scheme = 0.5 * q;
    for (int iter = 1; iter <= max_iterates; ++iter) {
      if (iterated_scheme_norm(difference_scheme, iter) < 1.0) {
        best = j;
        break;
      }
    }
  }
  return best;
}

}  // namespace trigsub
