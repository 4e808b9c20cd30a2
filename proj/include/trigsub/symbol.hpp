#pragma once

#include <map>

#include "trigsub/errors.hpp"
#include "trigsub/mask.hpp"

namespace trigsub {

/// Real Laurent polynomial with finitely many nonzero coefficients.
/// Canonical form drops coefficients below kEpsilon in magnitude;
/// canonicalization is idempotent.
class LaurentPolynomial {
 public:
  static constexpr double kEpsilon = 1e-15;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::map<int, double> terms);

  double coefficient(int exponent) const;
  const std::map<int, double>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial shifted(int offset) const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(double s, const LaurentPolynomial& p);

 private:
  std::map<int, double> terms_;
};

/// The symbol of a mask: the response of one refinement step to delta data,
/// with exponent e carrying the weight the step puts on output index e.
/// Both parity classes of the exponents hold the full coefficient multiset,
/// so each phase sum equals the mask sum.
LaurentPolynomial symbol_of_mask(const Mask& mask);

/// p * (1+z)/2.
LaurentPolynomial multiply_by_smoothing_factor(const LaurentPolynomial& p);

/// q with p = ((1+z)/2) * q, by synthetic division from the lowest exponent.
/// Throws NotDivisible (with the residual magnitude) when the remainder
/// exceeds 1e-10.
LaurentPolynomial divide_by_smoothing_factor(const LaurentPolynomial& p);

/// max over the two exponent parities of the absolute coefficient sums.
double scheme_norm(const LaurentPolynomial& p);

/// Norm of the L-fold iterated scheme: the product p(z)p(z^2)...p(z^{2^{L-1}})
/// decomposed over 2^L residue classes.
double iterated_scheme_norm(const LaurentPolynomial& p, int iterates);

/// 2^order * p / (1+z)^{order+1}: the difference scheme whose contractivity
/// certifies C^order smoothness of the scheme with symbol p.
LaurentPolynomial contractivity_symbol(const LaurentPolynomial& p, int order);

/// Largest j <= max_order such that p is divisible by ((1+z)/2)^{j+1} and some
/// iterate (up to max_iterates) of the corresponding difference scheme has
/// norm < 1. Returns -1 when not even C^0 is certifiable this way.
int smoothness_via_contractivity(const LaurentPolynomial& p, int max_order,
                                 int max_iterates = 8);

}  // namespace trigsub
