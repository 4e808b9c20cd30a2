#pragma once

#include <iosfwd>
#include <string>

#include "trigsub/analysis.hpp"
#include "trigsub/subdivide.hpp"

namespace trigsub::io {

/// Lossless round-trip formatting (17 significant digits).
std::string format_double(double v);

/// Accepts "pi/N" with positive integer N, or a decimal radian literal.
double parse_angle(const std::string& text);

ControlPolygon read_polygon_csv(std::istream& in);
void write_polygon_csv(std::ostream& out, const ControlPolygon& poly);

ControlPolygon read_polygon_json(std::istream& in);
void write_polygon_json(std::ostream& out, const ControlPolygon& poly);

/// Reads CSV rows `x,y[,z...]` or a JSON {topology, points} object, sniffed
/// from the content. `topology_hint` applies to CSV input.
ControlPolygon read_polygon_file(const std::string& path,
                                 Topology topology_hint = Topology::closed);

/// Control polygon dashed, refined polyline solid; viewBox from the joint
/// data bounds with a 5% margin.
void write_polygon_svg(std::ostream& out, const ControlPolygon& control,
                       const ControlPolygon& refined);

std::string analysis_report_json(const AnalysisReport& report);

}  // namespace trigsub::io
