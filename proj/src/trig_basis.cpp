#include "trigsub/trig_basis.hpp"

namespace trigsub {

double eval_basis(BasisOrder order, double x, const TrigKnotGrid& grid) {
  detail::require_mesh(order.r, grid.mesh);
  return detail::basis_value(order.r, x, grid.mesh);
}

double eval_shifted_basis(BasisOrder order, int shift, double x,
                          const TrigKnotGrid& grid) {
  return eval_basis(order, x - double(shift) * grid.mesh, grid);
}

double eval_trig_spline(Eigen::Ref<const Eigen::VectorXd> coeffs,
                        BasisOrder order, double x, const TrigKnotGrid& grid) {
  detail::require_mesh(order.r, grid.mesh);
  const int n = order.r;
  const int count = static_cast<int>(coeffs.size());
  if (count < 1) throw InsufficientData("spline needs at least one coefficient");
  if (grid.knot_count != count + n)
    throw InvalidMesh("grid must carry coeffs.size() + order knots");
  const double h = grid.mesh;
  // Linear independence holds on [t_{n-1}, t_{m+1}] with m = count - 1.
  const double lo = double(n - 1) * h;
  const double hi = double(count) * h;
  if (x < lo || x > hi)
    throw OutOfDomain("x outside the spline's representation interval");
  double value = 0.0;
  for (int j = 0; j < count; ++j)
    value += coeffs[j] * detail::basis_value(n, x - double(j) * h, grid.mesh);
  return value;
}

}  // namespace trigsub
