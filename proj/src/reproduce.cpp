#include "trigsub/reproduce.hpp"

#include <cmath>
#include <numbers>

#include "trigsub/subdivide.hpp"

namespace trigsub {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd refine_scalar_open(Eigen::VectorXd values,
                                   const SchemeFamily& raw_family, int levels) {
  ControlPolygon poly;
  poly.points = values;
  poly.topology = Topology::open;
  for (int k = 0; k < levels; ++k)
    poly = refine_once(poly, generate_mask(raw_family, k));
  return poly.points.col(0);
}

}  // namespace

CircleSample::CircleSample(int n_, double offset_, double rx, double ry)
    : n(n_), offset(offset_), radius_x(rx), radius_y(ry) {
  if (n < 3) throw TooFewPoints("conic sampling needs at least 3 points");
}

double CircleSample::spacing() const { return 2.0 * kPi / n; }

ControlPolygon sample_conic(const CircleSample& sample) {
  ControlPolygon poly;
  poly.topology = Topology::closed;
  poly.points.resize(sample.n, 2);
  const double step = sample.spacing();
  for (int i = 0; i < sample.n; ++i) {
    const double angle = (i + sample.offset) * step;
    poly.points(i, 0) = sample.radius_x * std::cos(angle);
    poly.points(i, 1) = sample.radius_y * std::sin(angle);
  }
  return poly;
}

double reproducing_tension(int arity, double data_spacing) {
  if (arity < 2) throw ArityMismatch("scheme arity must be at least 2");
  if (!(data_spacing > 0)) throw InvalidTension("data spacing must be positive");
  return data_spacing / double(arity - 1);
}

CircleReport verify_circle_reproduction(const CircleSample& sample,
                                        const SchemeFamily& family, int levels,
                                        double tol) {
  if (family.policy != Normalization::raw)
    throw Unsupported("circle regeneration operates on raw masks");
  if (sample.radius_x != 1.0 || sample.radius_y != 1.0)
    throw Unsupported("radius check applies to the unit circle");
  ControlPolygon poly = sample_conic(sample);
  for (int k = 0; k < levels; ++k)
    poly = refine_once(poly, generate_mask(family, k));
  CircleReport report;
  report.levels = levels;
  report.tol = tol;
  report.max_radius_deviation =
      (poly.points.rowwise().norm().array() - 1.0).abs().maxCoeff();
  report.pass = report.max_radius_deviation <= tol;
  return report;
}

TrigReport verify_trig_reproduction(const SchemeFamily& family,
                                    double data_frequency, int levels,
                                    double tol, bool sine_data) {
  if (levels < 1) throw Error("need at least one refinement level");
  const SchemeFamily raw(family.arity, family.tension, Normalization::raw);
  const int m = family.arity;
  // Enough samples that a useful window survives the per-level trimming.
  const int count = 2 * m + 2 + (48 >> std::min(levels, 5)) + 48;
  Eigen::VectorXd data(count);
  for (int i = 0; i < count; ++i)
    data[i] = sine_data ? std::sin((i - 0.5) * data_frequency)
                        : std::cos((i - 0.5) * data_frequency);
  const Eigen::VectorXd refined = refine_scalar_open(data, raw, levels);

  const double omega = std::ldexp(data_frequency, -levels);
  // Least-squares fit of A*cos(i w) - B*sin(i w); unit amplitude is enforced
  // in the reported residual.
  double cc = 0, ss = 0, cs = 0, rc = 0, rs = 0;
  for (int i = 0; i < static_cast<int>(refined.size()); ++i) {
    const double c = std::cos(i * omega), s = std::sin(i * omega);
    cc += c * c;
    ss += s * s;
    cs += c * s;
    rc += refined[i] * c;
    rs += refined[i] * s;
  }
  const double det = cc * ss - cs * cs;
  const double A = (rc * ss - (-rs) * (-cs)) / det;
  const double B = ((-rs) * cc - rc * (-cs)) / det;

  TrigReport report;
  report.tol = tol;
  report.fitted_phase = std::atan2(B, A) / omega;
  double residual = 0.0;
  for (int i = 0; i < static_cast<int>(refined.size()); ++i)
    residual = std::max(residual,
                        std::abs(refined[i] -
                                 std::cos((i + report.fitted_phase) * omega)));
  report.residual = residual;
  report.pass = residual <= tol;
  return report;
}

SymmetryReport basis_limit_symmetry(const SchemeFamily& family, int levels,
                                    double tol, int window) {
  const int m = family.arity;
  if (window < 0) window = 4 * m + 8;
  if (window < 2 * m)
    throw WindowTooSmall("delta window must cover the limit support");
  const SchemeFamily normalized(m, family.tension, Normalization::normalized);
  Eigen::VectorXd data = Eigen::VectorXd::Zero(2 * window + 1);
  data[window] = 1.0;
  const Eigen::VectorXd refined = refine_scalar_open(data, normalized, levels);
  const int count = static_cast<int>(refined.size());
  if (count < 2 || refined[0] != 0.0 || refined[count - 1] != 0.0)
    throw WindowTooSmall("refined support reached the trimmed boundary");

  SymmetryReport report;
  report.tol = tol;
  double total = refined.sum();
  double moment = 0.0;
  for (int i = 0; i < count; ++i) moment += i * refined[i];
  report.center = moment / total;
  for (int i = 0; i < count / 2 + 1; ++i)
    report.max_asymmetry = std::max(
        report.max_asymmetry, std::abs(refined[i] - refined[count - 1 - i]));
  report.pass = report.max_asymmetry <= tol;
  return report;
}

}  // namespace trigsub
