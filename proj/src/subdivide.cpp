#include "trigsub/subdivide.hpp"

namespace trigsub {

ControlPolygon refine_once(const ControlPolygon& poly, const Mask& mask) {
  const int n = static_cast<int>(poly.points.rows());
  const int d = static_cast<int>(poly.points.cols());
  const int m = mask.arity();
  if (d < 1) throw TooFewPoints("polygon has no coordinates");
  if (n < m)
    throw TooFewPoints("polygon needs at least m points for an m-point scheme");

  const Eigen::VectorXd lo = mask.low_rule().matrix();
  const Eigen::VectorXd hi = mask.high_rule().matrix();

  ControlPolygon out;
  out.topology = poly.topology;
  out.level = poly.level + 1;

  if (poly.topology == Topology::closed) {
    out.points.setZero(2 * n, d);
    const int b = mask.stencil_back();
    for (int w = 0; w < n; ++w) {
      Eigen::RowVectorXd low_pt = Eigen::RowVectorXd::Zero(d);
      Eigen::RowVectorXd high_pt = Eigen::RowVectorXd::Zero(d);
      for (int s = 0; s < m; ++s) {
        const auto row = poly.points.row((w + s) % n);
        low_pt.noalias() += lo[s] * row;
        high_pt.noalias() += hi[s] * row;
      }
      out.points.row((2 * (w + b)) % (2 * n)) = low_pt;
      out.points.row((2 * (w + b) + 1) % (2 * n)) = high_pt;
    }
  } else {
    const int windows = n - m + 1;
    out.points.resize(2 * windows, d);
    for (int w = 0; w < windows; ++w) {
      const auto block = poly.points.middleRows(w, m);
      out.points.row(2 * w).noalias() = lo.transpose() * block;
      out.points.row(2 * w + 1).noalias() = hi.transpose() * block;
    }
  }
  return out;
}

ControlPolygon refine_to_level(const ControlPolygon& poly,
                               const SchemeFamily& family, int levels) {
  if (levels < 0) throw Error("levels must be non-negative");
  ControlPolygon current = poly;
  for (int step = 0; step < levels; ++step)
    current = refine_once(current, generate_mask(family, current.level));
  return current;
}

}  // namespace trigsub
