#include "trigsub/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "trigsub/analysis.hpp"
#include "trigsub/io.hpp"
#include "trigsub/reproduce.hpp"
#include "trigsub/subdivide.hpp"
#include "trigsub/symbol.hpp"

namespace trigsub::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void emit(const JobConfig& config, const std::string& text) {
  if (config.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output_path);
  if (!out) throw Error("cannot open output file: " + config.output_path);
  out << text;
}

int cmd_mask(const JobConfig& config) {
  const SchemeFamily family(config.m, config.alpha, Normalization::raw);
  ordered_json doc;
  doc["m"] = config.m;
  doc["alpha"] = config.alpha;
  auto levels = ordered_json::array();
  for (int k = 0; k <= config.levels; ++k) {
    const Mask raw = generate_mask(family, k);
    const Mask unit = normalize(raw);
    ordered_json entry;
    entry["k"] = k;
    entry["raw"] = std::vector<double>(
        raw.coefficients().data(), raw.coefficients().data() + raw.arity());
    entry["normalized"] = std::vector<double>(
        unit.coefficients().data(), unit.coefficients().data() + unit.arity());
    entry["sum"] = raw.sum();
    levels.push_back(std::move(entry));
  }
  doc["levels"] = std::move(levels);
  emit(config, doc.dump(2) + "\n");
  return 0;
}

int cmd_refine(const JobConfig& config) {
  const Topology hint =
      config.topology == "open" ? Topology::open : Topology::closed;
  const ControlPolygon input = io::read_polygon_file(config.input_path, hint);
  const SchemeFamily family(config.m, config.alpha, config.normalization);
  const ControlPolygon refined = refine_to_level(input, family, config.levels);

  std::ostringstream out;
  if (config.format == "csv")
    io::write_polygon_csv(out, refined);
  else if (config.format == "svg")
    io::write_polygon_svg(out, input, refined);
  else
    io::write_polygon_json(out, refined);
  emit(config, out.str());
  return 0;
}

int cmd_analyze(const JobConfig& config) {
  const SchemeFamily family(config.m, config.alpha, Normalization::normalized);
  const int K = config.levels > 0 ? config.levels : 12;
  const AnalysisReport report = full_report(family, K);
  emit(config, io::analysis_report_json(report));
  for (const auto& check : report.bounds)
    if (!check.skipped && !(check.lower_ok && check.upper_ok)) return 1;
  return 0;
}

int cmd_reproduce(const JobConfig& config) {
  const CircleSample sample(config.samples);
  const double tension = reproducing_tension(config.m, sample.spacing());
  const SchemeFamily family(config.m, tension, Normalization::raw);
  const int levels = config.levels > 0 ? config.levels : 3;

  const CircleReport circle =
      verify_circle_reproduction(sample, family, levels, config.tol);

  // Refinement commutes with linear maps; check against a scaled ellipse.
  const CircleSample ellipse_sample(config.samples, -0.5, 2.0, 1.0);
  ControlPolygon ellipse = sample_conic(ellipse_sample);
  ControlPolygon circle_poly = sample_conic(sample);
  for (int k = 0; k < levels; ++k) {
    const Mask mask = generate_mask(family, k);
    ellipse = refine_once(ellipse, mask);
    circle_poly = refine_once(circle_poly, mask);
  }
  Eigen::MatrixXd scaled = circle_poly.points;
  scaled.col(0) *= 2.0;
  const double commutation = (ellipse.points - scaled).cwiseAbs().maxCoeff();

  const TrigReport trig = verify_trig_reproduction(
      family, double(config.m - 1) * tension, levels, config.tol);
  const SymmetryReport symmetry = basis_limit_symmetry(family, 5, 1e-12);

  const bool pass =
      circle.pass && trig.pass && symmetry.pass && commutation <= 1e-12;
  ordered_json doc;
  doc["m"] = config.m;
  doc["n"] = config.samples;
  doc["alpha"] = tension;
  doc["levels"] = levels;
  doc["circle"] = ordered_json{{"max_radius_deviation", circle.max_radius_deviation},
                               {"tol", circle.tol},
                               {"pass", circle.pass}};
  doc["ellipse_commutation"] =
      ordered_json{{"max_deviation", commutation}, {"pass", commutation <= 1e-12}};
  doc["trig"] = ordered_json{{"fitted_phase", trig.fitted_phase},
                             {"residual", trig.residual},
                             {"pass", trig.pass}};
  doc["symmetry"] = ordered_json{{"max_asymmetry", symmetry.max_asymmetry},
                                 {"center", symmetry.center},
                                 {"pass", symmetry.pass}};
  doc["pass"] = pass;
  emit(config, doc.dump(2) + "\n");
  return pass ? 0 : 1;
}

int cmd_limits(const JobConfig& config) {
  const Mask limit = stationary_limit_mask(config.m);
  ordered_json doc;
  doc["m"] = config.m;
  doc["limit"] = std::vector<double>(
      limit.coefficients().data(), limit.coefficients().data() + limit.arity());
  emit(config, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int run_job(const JobConfig& config) {
  try {
    if (config.m < 2) {
      std::cerr << "error: --m must be at least 2\n";
      return 2;
    }
    if (config.levels < 0) {
      std::cerr << "error: --levels must be non-negative\n";
      return 2;
    }
    switch (config.command) {
      case Command::mask:
        return cmd_mask(config);
      case Command::refine:
        return cmd_refine(config);
      case Command::analyze:
        return cmd_analyze(config);
      case Command::reproduce:
        return cmd_reproduce(config);
      case Command::limits:
        return cmd_limits(config);
    }
    return 2;
  } catch (const InvalidTension& e) {
    std::cerr << "error: " << e.what()
              << " (valid tension range: (0, pi/3))\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace trigsub::cli
