#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "trigsub/errors.hpp"
#include "trigsub/trig_basis.hpp"

namespace trigsub {

enum class Normalization { raw, normalized };

/// Generator of the level-dependent mask sequence for an m-point binary
/// scheme with tension alpha in (0, pi/3).
struct SchemeFamily {
  int arity = 2;
  double tension = 0.0;
  Normalization policy = Normalization::raw;

  SchemeFamily(int m, double alpha, Normalization p = Normalization::raw);
};

/// One refinement level's coefficients a_0 .. a_{m-1}.
///
/// The two refinement rules of a binary step apply the coefficients to an
/// m-point stencil once in stored order and once reversed. Coefficients are
/// stored in the same order closed_form_mask() emits them; for m == 4 that
/// order runs against the stencil direction used by every other arity, so the
/// rule producing the parameter-earlier point is the reversed one there.
/// low_rule() / high_rule() resolve the orientation: low_rule() is always the
/// rule whose new point precedes high_rule()'s along the curve.
class Mask {
 public:
  Mask(Eigen::ArrayXd coefficients, int level, double tension, bool normalized);

  const Eigen::ArrayXd& coefficients() const { return coefficients_; }
  int arity() const { return static_cast<int>(coefficients_.size()); }
  int level() const { return level_; }
  double tension() const { return tension_; }
  bool normalized() const { return normalized_; }
  double sum() const { return coefficients_.sum(); }

  bool stored_rule_is_low() const { return stored_rule_is_low_; }
  Eigen::ArrayXd low_rule() const;
  Eigen::ArrayXd high_rule() const;

  /// How many points the stencil reaches behind the current one when the
  /// low rule's output is labeled with the current index.
  int stencil_back() const { return arity() == 2 ? 0 : arity() / 2; }

 private:
  Eigen::ArrayXd coefficients_;
  int level_ = 0;
  double tension_ = 0.0;
  bool normalized_ = false;
  bool stored_rule_is_low_ = true;
};

/// Level-k mask from the trigonometric basis sampled at quarter-offset knots.
/// Raw unless the family policy asks for unit coefficient sum.
Mask generate_mask(const SchemeFamily& family, int level);

/// Independent oracle: the explicit sine expressions for m in {2, 3, 4}.
Mask closed_form_mask(int m, int level, double alpha);

/// The k -> infinity limit, obtained by replacing every sine in the basis
/// recurrence with its argument; equals the polynomial B-spline mask sampled
/// at the same quarter-offset points.
Mask stationary_limit_mask(int m);

/// Coefficients divided by their sum.
Mask normalize(const Mask& mask);

namespace detail {

template <typename Scalar>
Scalar level_mesh(Scalar alpha, int level) {
  return std::ldexp(alpha, -level);
}

/// Quarter-offset sample abscissa for coefficient s of an m-point mask.
inline double mask_abscissa_factor(int m, int s) {
  return (m == 4 ? double(s) : double(m - 1 - s)) + 0.25;
}

template <typename Scalar>
Eigen::Array<Scalar, Eigen::Dynamic, 1> raw_mask_coefficients(int m, int level,
                                                              Scalar alpha) {
  const Scalar mesh = level_mesh(alpha, level);
  if (!mesh_valid(m, mesh))
    throw MeshTooLarge("(m-1)*alpha/2^level must stay below pi");
  Eigen::Array<Scalar, Eigen::Dynamic, 1> a(m);
  for (int s = 0; s < m; ++s) {
    const Scalar x = Scalar(mask_abscissa_factor(m, s)) * mesh;
    a[s] = basis_value(m, x, mesh);
  }
  return a;
}

/// The explicit per-arity sine expressions, written out verbatim.
template <typename Scalar>
Eigen::Array<Scalar, Eigen::Dynamic, 1> closed_form_coefficients(
    int m, int level, Scalar alpha) {
  using std::sin;
  const Scalar mesh = level_mesh(alpha, level);
  const Scalar q = mesh / Scalar(4);
  const auto s = [&](int c) { return sin(Scalar(c) * q); };
  Eigen::Array<Scalar, Eigen::Dynamic, 1> a(m);
  if (m == 2) {
    const Scalar den = sin(mesh);
    a << s(3) / den, s(1) / den;
  } else if (m == 3) {
    const Scalar den = sin(mesh) * sin(Scalar(2) * mesh);
    a << s(3) * s(3) / den, (s(3) * s(5) + s(1) * s(7)) / den,
        s(1) * s(1) / den;
  } else if (m == 4) {
    const Scalar den = sin(mesh) * sin(Scalar(2) * mesh) * sin(Scalar(3) * mesh);
    a << s(1) * s(1) * s(1) / den,
        (s(3) * s(5) * s(5) + s(1) * s(5) * s(7) + s(1) * s(1) * s(11)) / den,
        (s(3) * s(3) * s(9) + s(3) * s(5) * s(7) + s(1) * s(7) * s(7)) / den,
        s(3) * s(3) * s(3) / den;
  } else {
    throw Unsupported("closed forms are available for m in {2, 3, 4}");
  }
  return a;
}

/// Cardinal polynomial B-spline of order m on [0, m] (Cox-de Boor, unit knots).
double cardinal_bspline(int order, double t);

}  // namespace detail

}  // namespace trigsub
