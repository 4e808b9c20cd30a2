#pragma once

#include "trigsub/mask.hpp"
#include "trigsub/subdivide.hpp"

namespace trigsub {

/// Equidistant samples of a circle or axis-aligned ellipse:
/// (radius_x * cos((i + offset) * spacing), radius_y * sin((i + offset) * spacing)),
/// i = 0..n-1, spacing = 2*pi/n.
struct CircleSample {
  int n = 3;
  double offset = -0.5;
  double radius_x = 1.0;
  double radius_y = 1.0;

  explicit CircleSample(int n_, double offset_ = -0.5, double rx = 1.0,
                        double ry = 1.0);
  double spacing() const;
};

ControlPolygon sample_conic(const CircleSample& sample);

/// Tension for which the m-point raw scheme regenerates trigonometric data of
/// angular spacing `data_spacing`: the rules evaluate the spline whose top
/// frequency is (m-1) times the mesh, so the mesh must be data_spacing/(m-1).
double reproducing_tension(int arity, double data_spacing);

struct CircleReport {
  double max_radius_deviation = 0.0;
  double tol = 0.0;
  int levels = 0;
  bool pass = false;
};

/// Refine the sampled unit circle `levels` times with the family's raw masks
/// and measure the largest deviation of any refined point from radius 1.
CircleReport verify_circle_reproduction(const CircleSample& sample,
                                        const SchemeFamily& family, int levels,
                                        double tol);

struct TrigReport {
  double fitted_phase = 0.0;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Refine samples cos((i - 1/2) * data_frequency) `levels` times, then solve
/// for the phase phi minimizing the misfit against cos((i + phi) * f) at the
/// refined frequency f = data_frequency / 2^levels. Reports phi and the
/// max-abs residual at unit amplitude. With sine_data the initial samples are
/// sines; the fitted phase absorbs the quarter-period shift.
TrigReport verify_trig_reproduction(const SchemeFamily& family,
                                    double data_frequency, int levels,
                                    double tol, bool sine_data = false);

struct SymmetryReport {
  double max_asymmetry = 0.0;
  double center = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Refine delta data with normalized masks and verify the result is symmetric
/// about its center of mass. `window` is the half-width of the initial index
/// window; -1 picks one wide enough for the limit support.
SymmetryReport basis_limit_symmetry(const SchemeFamily& family, int levels,
                                    double tol, int window = -1);

}  // namespace trigsub
