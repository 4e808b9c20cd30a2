#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "trigsub/errors.hpp"

namespace trigsub {

/// Uniform knot grid t_i = i * mesh for i = 0 .. knot_count - 1.
struct TrigKnotGrid {
  double mesh = 0.0;
  int knot_count = 0;
};

/// Order of a trigonometric B-spline basis function (order r spans r knot
/// intervals).
struct BasisOrder {
  int r = 1;
};

namespace detail {

inline constexpr double kMeshGuard = 1e-12;

/// Evaluating an order-r basis divides by sin((r-1)*mesh); the mesh must keep
/// every such denominator strictly positive.
template <typename Scalar>
bool mesh_valid(int order, Scalar mesh) {
  return mesh > Scalar(0) &&
         Scalar(order - 1) * mesh <
             Scalar(std::numbers::pi) - Scalar(kMeshGuard);
}

template <typename Scalar>
void require_mesh(int order, Scalar mesh) {
  if (order < 1) throw InvalidMesh("basis order must be >= 1");
  if (!mesh_valid(order, mesh))
    throw InvalidMesh("mesh must be positive with (order-1)*mesh < pi");
}

/// Sine-weighted recurrence on uniform knots. Order r is supported on
/// [0, r*mesh), half-open on the right like the order-1 indicator.
template <typename Scalar>
Scalar basis_value(int order, Scalar x, Scalar mesh) {
  if (order == 1) return (x >= Scalar(0) && x < mesh) ? Scalar(1) : Scalar(0);
  if (x <= Scalar(0) || x >= Scalar(order) * mesh) return Scalar(0);
  using std::sin;
  return (sin(x) * basis_value(order - 1, x, mesh) +
          sin(Scalar(order) * mesh - x) * basis_value(order - 1, x - mesh, mesh)) /
         sin(Scalar(order - 1) * mesh);
}

}  // namespace detail

/// T_0^r(x) on the given grid. Zero outside [0, r*mesh), non-negative inside.
double eval_basis(BasisOrder order, double x, const TrigKnotGrid& grid);

/// T_j^r(x) = T_0^r(x - j*mesh).
double eval_shifted_basis(BasisOrder order, int shift, double x,
                          const TrigKnotGrid& grid);

/// Evaluate sum_j coeffs[j] * T_j^n(x) on the interval where the shifted basis
/// functions are linearly independent. The grid must carry
/// coeffs.size() + order.r knots.
double eval_trig_spline(Eigen::Ref<const Eigen::VectorXd> coeffs,
                        BasisOrder order, double x, const TrigKnotGrid& grid);

}  // namespace trigsub
