#include "trigsub/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

namespace trigsub::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& text) {
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw ParseError("trailing characters in number: " + text);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a number: " + text);
  }
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::summable: return "summable";
    case Verdict::divergent: return "divergent";
    default: return "inconclusive";
  }
}

ordered_json summability_json(const SummabilityReport& s) {
  return ordered_json{{"smoothness", s.smoothness},
                      {"rho", s.rho},
                      {"rho_plus_j", s.rho_plus_j},
                      {"fit_residual", s.fit_residual},
                      {"partial_sum", s.partial_sum},
                      {"verdict", verdict_name(s.verdict)}};
}

}  // namespace

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

double parse_angle(const std::string& text) {
  const std::string t = trimmed(text);
  if (t.empty()) throw ParseError("empty angle");
  if (t.rfind("pi/", 0) == 0) {
    const std::string denom = t.substr(3);
    if (denom.empty() ||
        !std::all_of(denom.begin(), denom.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("expected pi/<positive integer>: " + text);
    const long n = std::stol(denom);
    if (n <= 0) throw ParseError("expected a positive denominator: " + text);
    return std::numbers::pi / double(n);
  }
  if (t == "pi") return std::numbers::pi;
  return parse_number(t);
}

ControlPolygon read_polygon_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const std::string content = trimmed(line);
    if (content.empty()) continue;
    std::vector<double> row;
    std::stringstream fields(content);
    std::string field;
    while (std::getline(fields, field, ','))
      row.push_back(parse_number(trimmed(field)));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("inconsistent column count in CSV input");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty polygon input");
  ControlPolygon poly;
  poly.points.resize(static_cast<int>(rows.size()),
                     static_cast<int>(rows.front().size()));
  for (int i = 0; i < poly.points.rows(); ++i)
    for (int j = 0; j < poly.points.cols(); ++j)
      poly.points(i, j) = rows[i][j];
  return poly;
}

void write_polygon_csv(std::ostream& out, const ControlPolygon& poly) {
  for (int i = 0; i < poly.points.rows(); ++i) {
    for (int j = 0; j < poly.points.cols(); ++j) {
      if (j) out << ',';
      out << format_double(poly.points(i, j));
    }
    out << '\n';
  }
}

ControlPolygon read_polygon_json(std::istream& in) {
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON polygon: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw ParseError("JSON polygon must be an object with a points array");
  const auto& pts = doc["points"];
  if (pts.empty()) throw ParseError("empty polygon input");
  ControlPolygon poly;
  if (doc.contains("topology")) {
    const std::string t = doc["topology"].get<std::string>();
    if (t == "open")
      poly.topology = Topology::open;
    else if (t == "closed")
      poly.topology = Topology::closed;
    else
      throw ParseError("topology must be open or closed");
  }
  if (doc.contains("level")) poly.level = doc["level"].get<int>();
  const auto cols = pts.front().size();
  if (cols < 1) throw ParseError("points need at least one coordinate");
  poly.points.resize(static_cast<int>(pts.size()), static_cast<int>(cols));
  for (int i = 0; i < poly.points.rows(); ++i) {
    if (!pts[i].is_array() || pts[i].size() != cols)
      throw ParseError("ragged point rows in JSON polygon");
    for (int j = 0; j < poly.points.cols(); ++j)
      poly.points(i, j) = pts[i][j].get<double>();
  }
  return poly;
}

void write_polygon_json(std::ostream& out, const ControlPolygon& poly) {
  ordered_json doc;
  doc["topology"] = poly.topology == Topology::closed ? "closed" : "open";
  doc["level"] = poly.level;
  auto points = ordered_json::array();
  for (int i = 0; i < poly.points.rows(); ++i) {
    auto row = ordered_json::array();
    for (int j = 0; j < poly.points.cols(); ++j) row.push_back(poly.points(i, j));
    points.push_back(std::move(row));
  }
  doc["points"] = std::move(points);
  out << doc.dump(2) << '\n';
}

ControlPolygon read_polygon_file(const std::string& path,
                                 Topology topology_hint) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = trimmed(buffer.str());
  if (content.empty()) throw ParseError("empty polygon input");
  std::stringstream stream(content);
  if (content.front() == '{') return read_polygon_json(stream);
  ControlPolygon poly = read_polygon_csv(stream);
  poly.topology = topology_hint;
  return poly;
}

void write_polygon_svg(std::ostream& out, const ControlPolygon& control,
                       const ControlPolygon& refined) {
  const auto planar = [](const ControlPolygon& poly) {
    const int n = static_cast<int>(poly.points.rows());
    Eigen::MatrixX2d xy(n, 2);
    if (poly.points.cols() >= 2) {
      xy.col(0) = poly.points.col(0);
      xy.col(1) = poly.points.col(1);
    } else {
      // Scalar data: plot value against index.
      xy.col(0) = Eigen::VectorXd::LinSpaced(n, 0.0, double(n - 1));
      xy.col(1) = poly.points.col(0);
    }
    return xy;
  };
  const Eigen::MatrixX2d c = planar(control);
  const Eigen::MatrixX2d r = planar(refined);

  double xmin = std::min(c.col(0).minCoeff(), r.col(0).minCoeff());
  double xmax = std::max(c.col(0).maxCoeff(), r.col(0).maxCoeff());
  double ymin = std::min(c.col(1).minCoeff(), r.col(1).minCoeff());
  double ymax = std::max(c.col(1).maxCoeff(), r.col(1).maxCoeff());
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double margin = 0.05 * span;
  xmin -= margin;
  xmax += margin;
  ymin -= margin;
  ymax += margin;

  // SVG y grows downward; mirror the data.
  const auto points_attr = [&](const Eigen::MatrixX2d& xy, bool close) {
    std::string attr;
    const int n = static_cast<int>(xy.rows());
    for (int i = 0; i <= (close ? n : n - 1); ++i) {
      const int idx = i % n;
      if (i) attr += ' ';
      attr += format_double(xy(idx, 0));
      attr += ',';
      attr += format_double((ymin + ymax) - xy(idx, 1));
    }
    return attr;
  };

  const double stroke = 0.004 * span;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << format_double(xmin) << ' ' << format_double(ymin) << ' '
      << format_double(xmax - xmin) << ' ' << format_double(ymax - ymin)
      << "\">\n";
  out << "  <polyline fill=\"none\" stroke=\"#777777\" stroke-width=\""
      << format_double(stroke) << "\" stroke-dasharray=\""
      << format_double(3 * stroke) << ' ' << format_double(2 * stroke)
      << "\" points=\"" << points_attr(c, control.topology == Topology::closed)
      << "\"/>\n";
  out << "  <polyline fill=\"none\" stroke=\"#000000\" stroke-width=\""
      << format_double(stroke) << "\" points=\""
      << points_attr(r, refined.topology == Topology::closed) << "\"/>\n";
  out << "</svg>\n";
}

std::string analysis_report_json(const AnalysisReport& report) {
  ordered_json doc;
  doc["m"] = report.arity;
  doc["alpha"] = report.tension;
  doc["max_level"] = report.max_level;
  doc["deviations"] = report.deviations;
  doc["decay"] = ordered_json{{"exponent", report.decay.exponent},
                              {"residual", report.decay.residual},
                              {"k_begin", report.decay.k_begin},
                              {"k_end", report.decay.k_end},
                              {"cubic_rate_consistent", report.cubic_rate_consistent}};
  if (report.arity == 4) {
    int passed = 0, violations = 0, skipped = 0;
    for (const auto& c : report.bounds) {
      if (c.skipped)
        ++skipped;
      else if (c.lower_ok && c.upper_ok)
        ++passed;
      else
        ++violations;
    }
    doc["bounds"] = ordered_json{{"checked", report.bounds.size()},
                                 {"passed", passed},
                                 {"violations", violations},
                                 {"skipped", skipped}};
  }
  auto contractivity = ordered_json::array();
  for (const auto& [e, v] : report.contractivity.terms())
    contractivity.push_back(ordered_json::array({e, v}));
  doc["stationary"] =
      ordered_json{{"certified_smoothness", report.certified_smoothness},
                   {"divided_scheme_certificate", report.divided_scheme_certificate},
                   {"contractivity_norm", report.contractivity_norm},
                   {"contractivity_symbol", std::move(contractivity)},
                   {"claimed_smoothness", report.claimed_smoothness}};
  doc["summability"] =
      ordered_json{{"claimed", summability_json(report.summability_claimed)},
                   {"certified", summability_json(report.summability_certified)},
                   {"max_transferable", report.max_transferable_smoothness}};
  return doc.dump(2) + "\n";
}

}  // namespace trigsub::io
