#pragma once

#include <Eigen/Dense>

#include "trigsub/mask.hpp"

namespace trigsub {

enum class Topology { open, closed };

/// Ordered point sequence in d >= 1 dimensions; rows are points.
struct ControlPolygon {
  Eigen::MatrixXd points;
  Topology topology = Topology::closed;
  int level = 0;
};

/// One binary refinement step. Closed polygons map n points to 2n via cyclic
/// indexing; open polygons keep only refined points whose full stencil lies
/// inside the index range, so they shrink by m - 1 windows per step.
ControlPolygon refine_once(const ControlPolygon& poly, const Mask& mask);

/// Apply refine_once `levels` times, regenerating the mask at each level
/// starting from poly.level.
ControlPolygon refine_to_level(const ControlPolygon& poly,
                               const SchemeFamily& family, int levels);

}  // namespace trigsub
