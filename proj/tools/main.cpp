#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "trigsub/cli.hpp"
#include "trigsub/io.hpp"

namespace {

struct RawArgs {
  std::string alpha = "pi/6";
  std::string normalization = "normalized";
};

void add_common(CLI::App* cmd, trigsub::cli::JobConfig& config, RawArgs& raw) {
  cmd->add_option("--m", config.m, "scheme arity (points per stencil)");
  cmd->add_option("--alpha", raw.alpha,
                  "tension in radians; accepts pi/N literals");
  cmd->add_option("--levels", config.levels, "number of refinement levels");
  cmd->add_option("--output,-o", config.output_path,
                  "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-point non-stationary subdivision curves from trigonometric "
               "B-splines"};
  app.require_subcommand(1);

  trigsub::cli::JobConfig config;
  RawArgs raw;

  auto* mask = app.add_subcommand("mask", "emit raw and normalized masks for "
                                          "levels 0..levels as JSON");
  add_common(mask, config, raw);

  auto* refine = app.add_subcommand(
      "refine", "refine a control polygon read from CSV or JSON");
  add_common(refine, config, raw);
  refine->add_option("--input,-i", config.input_path, "polygon file")
      ->required();
  refine->add_option("--format,-f", config.format, "csv | json | svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  refine->add_option("--normalization", raw.normalization, "raw | normalized")
      ->check(CLI::IsMember({"raw", "normalized"}));
  refine->add_option("--topology", config.topology,
                     "open | closed (CSV input only; JSON carries its own)")
      ->check(CLI::IsMember({"open", "closed"}));

  auto* analyze = app.add_subcommand(
      "analyze", "deviation decay, coefficient brackets, smoothness "
                 "certificates, summability verdicts");
  add_common(analyze, config, raw);

  auto* reproduce = app.add_subcommand(
      "reproduce", "circle/ellipse regeneration, trigonometric data "
                   "reproduction, delta symmetry");
  reproduce->add_option("--m", config.m, "scheme arity");
  reproduce->add_option("--n", config.samples, "circle sample count");
  reproduce->add_option("--levels", config.levels, "refinement levels");
  reproduce->add_option("--tol", config.tol, "pass tolerance");
  reproduce->add_option("--output,-o", config.output_path, "output file");

  auto* limits = app.add_subcommand("limits",
                                    "stationary limit mask for the given m");
  limits->add_option("--m", config.m, "scheme arity");
  limits->add_option("--output,-o", config.output_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (mask->parsed()) config.command = trigsub::cli::Command::mask;
  if (refine->parsed()) config.command = trigsub::cli::Command::refine;
  if (analyze->parsed()) config.command = trigsub::cli::Command::analyze;
  if (reproduce->parsed()) config.command = trigsub::cli::Command::reproduce;
  if (limits->parsed()) config.command = trigsub::cli::Command::limits;

  if (mask->parsed() || refine->parsed() || analyze->parsed()) {
    try {
      config.alpha = trigsub::io::parse_angle(raw.alpha);
    } catch (const trigsub::ParseError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
  }
  config.normalization = raw.normalization == "raw"
                             ? trigsub::Normalization::raw
                             : trigsub::Normalization::normalized;

  return trigsub::cli::run_job(config);
}
