#pragma once

#include <vector>

#include "trigsub/mask.hpp"
#include "trigsub/symbol.hpp"

namespace trigsub {

enum class Verdict { summable, divergent, inconclusive };

/// Least-squares slope of log2(deviation) against the level index.
struct DecayFit {
  double exponent = 0.0;
  double residual = 0.0;  // max |log2 dev - fit| over the window
  int k_begin = 0;
  int k_end = 0;
};

struct BoundCheck {
  int level = 0;
  int index = 0;
  bool skipped = false;
  bool lower_ok = false;
  bool upper_ok = false;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct SummabilityReport {
  int smoothness = 0;
  double rho = 0.0;
  double rho_plus_j = 0.0;
  double fit_residual = 0.0;
  double partial_sum = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

struct AnalysisReport {
  int arity = 0;
  double tension = 0.0;
  int max_level = 0;
  std::vector<double> deviations;
  DecayFit decay;
  /// Whether the measured exponent is compatible with a 2^{-3k} decay.
  bool cubic_rate_consistent = false;
  std::vector<BoundCheck> bounds;  // filled for m == 4 only
  int certified_smoothness = -1;   // stationary limit symbol, uncapped
  int divided_scheme_certificate = -1;  // after one smoothing division
  double contractivity_norm = 0.0;
  LaurentPolynomial contractivity;
  int claimed_smoothness = 0;  // m - 1
  SummabilityReport summability_claimed;
  SummabilityReport summability_certified;
  int max_transferable_smoothness = -1;
};

/// Deviations ||S_{a^(k)} - S_a|| for k = 0..K, computed from the phase-wise
/// absolute differences between the normalized level-k symbol and the
/// stationary limit symbol.
std::vector<double> deviation_sequence(const SchemeFamily& family, int K);

/// Fit log2 deviations on levels [k_begin, k_end].
DecayFit fit_decay(const std::vector<double>& deviations, int k_begin,
                   int k_end);

/// Per-(level, index) bracket checks of the raw 4-point coefficients against
/// their limits: limit <= a_i^(k) <= limit / cos^3(6*alpha/2^k). Levels where
/// 6*alpha/2^k >= pi/2 are flagged skipped, not failed.
std::vector<BoundCheck> check_mask_bounds(const SchemeFamily& family, int K);

/// Verdict on sum_k 2^{jk} * dev_k from the fitted tail exponent rho:
/// summable iff rho + j < -1e-6 with fit residual < 0.1, divergent iff
/// rho + j > 1e-6, inconclusive otherwise.
SummabilityReport summability_verdict(const std::vector<double>& deviations,
                                      int smoothness_j);

/// Assemble deviations, decay fit, bound checks, stationary smoothness
/// certificates, and summability verdicts side by side. Deterministic.
AnalysisReport full_report(const SchemeFamily& family, int K);

}  // namespace trigsub
