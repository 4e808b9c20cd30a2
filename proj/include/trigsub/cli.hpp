#pragma once

#include <string>

#include "trigsub/mask.hpp"

namespace trigsub::cli {

enum class Command { mask, refine, analyze, reproduce, limits };

struct JobConfig {
  Command command = Command::mask;
  int m = 2;
  double alpha = 0.0;  // radians
  int levels = 0;
  int samples = 12;    // reproduce: number of circle samples
  double tol = 1e-9;
  Normalization normalization = Normalization::normalized;
  std::string topology = "closed";
  std::string input_path;
  std::string output_path;  // empty: stdout
  std::string format = "json";  // csv | json | svg
};

/// Runs one job. Exit status 0 on success, 1 on numerical failure or a failed
/// check, 2 on invalid configuration or malformed input.
int run_job(const JobConfig& config);

}  // namespace trigsub::cli
