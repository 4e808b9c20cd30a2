#include "trigsub/analysis.hpp"

#include <cmath>
#include <numbers>

namespace trigsub {

namespace {

constexpr double kVerdictMargin = 1e-6;
constexpr double kFitResidualLimit = 0.1;

LaurentPolynomial normalized_level_symbol(const SchemeFamily& family, int k) {
  return symbol_of_mask(normalize(generate_mask(
      SchemeFamily(family.arity, family.tension, Normalization::raw), k)));
}

}  // namespace

std::vector<double> deviation_sequence(const SchemeFamily& family, int K) {
  if (K < 1) throw InsufficientData("need K >= 1 levels");
  const LaurentPolynomial limit = symbol_of_mask(stationary_limit_mask(family.arity));
  std::vector<double> deviations;
  deviations.reserve(K + 1);
  for (int k = 0; k <= K; ++k)
    deviations.push_back(scheme_norm(normalized_level_symbol(family, k) - limit));
  return deviations;
}

DecayFit fit_decay(const std::vector<double>& deviations, int k_begin,
                   int k_end) {
  k_end = std::min(k_end, static_cast<int>(deviations.size()) - 1);
  if (k_begin < 0 || k_end - k_begin < 1)
    throw InsufficientData("decay fit needs at least two levels");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int k = k_begin; k <= k_end; ++k) {
    if (!(deviations[k] > 0)) continue;
    const double y = std::log2(deviations[k]);
    sx += k;
    sy += y;
    sxx += double(k) * k;
    sxy += double(k) * y;
    ++count;
  }
  if (count < 2) throw InsufficientData("decay fit needs two positive samples");
  const double denom = count * sxx - sx * sx;
  DecayFit fit;
  fit.exponent = (count * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.exponent * sx) / count;
  for (int k = k_begin; k <= k_end; ++k) {
    if (!(deviations[k] > 0)) continue;
    fit.residual = std::max(
        fit.residual,
        std::abs(std::log2(deviations[k]) - (fit.exponent * k + intercept)));
  }
  fit.k_begin = k_begin;
  fit.k_end = k_end;
  return fit;
}

std::vector<BoundCheck> check_mask_bounds(const SchemeFamily& family, int K) {
  if (family.arity != 4)
    throw Unsupported("coefficient brackets are specific to the 4-point scheme");
  const Eigen::ArrayXd limit = stationary_limit_mask(4).coefficients();
  const SchemeFamily raw(family.arity, family.tension, Normalization::raw);
  std::vector<BoundCheck> checks;
  checks.reserve(4 * (K + 1));
  for (int k = 0; k <= K; ++k) {
    const double angle = std::ldexp(6.0 * family.tension, -k);
    if (angle >= std::numbers::pi / 2) {
      for (int i = 0; i < 4; ++i) {
        BoundCheck c;
        c.level = k;
        c.index = i;
        c.skipped = true;
        checks.push_back(c);
      }
      continue;
    }
    const Eigen::ArrayXd a = generate_mask(raw, k).coefficients();
    const double widen = 1.0 / std::pow(std::cos(angle), 3);
    for (int i = 0; i < 4; ++i) {
      BoundCheck c;
      c.level = k;
      c.index = i;
      c.value = a[i];
      c.lower = limit[i];
      c.upper = limit[i] * widen;
      c.lower_ok = c.lower <= c.value;
      c.upper_ok = c.value <= c.upper;
      checks.push_back(c);
    }
  }
  return checks;
}

SummabilityReport summability_verdict(const std::vector<double>& deviations,
                                      int smoothness_j) {
  if (deviations.size() < 5)
    throw InsufficientData("summability verdict needs at least 5 samples");
  const int K = static_cast<int>(deviations.size()) - 1;
  const DecayFit fit = fit_decay(deviations, 3, K);

  SummabilityReport report;
  report.smoothness = smoothness_j;
  report.rho = fit.exponent;
  report.rho_plus_j = fit.exponent + smoothness_j;
  report.fit_residual = fit.residual;
  for (int k = 0; k <= K; ++k)
    report.partial_sum += std::ldexp(deviations[k], smoothness_j * k);
  if (report.rho_plus_j < -kVerdictMargin &&
      fit.residual < kFitResidualLimit)
    report.verdict = Verdict::summable;
  else if (report.rho_plus_j > kVerdictMargin)
    report.verdict = Verdict::divergent;
  else
    report.verdict = Verdict::inconclusive;
  return report;
}

AnalysisReport full_report(const SchemeFamily& family, int K) {
  if (K < 4) throw InsufficientData("report needs K >= 4 levels");
  AnalysisReport report;
  report.arity = family.arity;
  report.tension = family.tension;
  report.max_level = K;
  report.deviations = deviation_sequence(family, K);
  report.decay = fit_decay(report.deviations, 3, K);
  report.cubic_rate_consistent = std::abs(report.decay.exponent + 3.0) <= 0.1;
  if (family.arity == 4) report.bounds = check_mask_bounds(family, K);

  const LaurentPolynomial limit_symbol =
      symbol_of_mask(stationary_limit_mask(family.arity));
  report.certified_smoothness = smoothness_via_contractivity(limit_symbol, 8);
  try {
    report.divided_scheme_certificate =
        smoothness_via_contractivity(divide_by_smoothing_factor(limit_symbol), 8);
  } catch (const NotDivisible&) {
    report.divided_scheme_certificate = -1;
  }
  if (report.certified_smoothness >= 0) {
    report.contractivity =
        contractivity_symbol(limit_symbol, report.certified_smoothness);
    report.contractivity_norm = scheme_norm(report.contractivity);
  }

  report.claimed_smoothness = family.arity - 1;
  report.summability_claimed =
      summability_verdict(report.deviations, report.claimed_smoothness);
  report.summability_certified = summability_verdict(
      report.deviations, std::max(report.certified_smoothness, 0));
  report.max_transferable_smoothness = -1;
  for (int j = std::max(report.certified_smoothness, 0); j >= 0; --j) {
    if (summability_verdict(report.deviations, j).verdict ==
        Verdict::summable) {
      report.max_transferable_smoothness = j;
      break;
    }
  }
  return report;
}

}  // namespace trigsub
