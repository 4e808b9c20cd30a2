#include "trigsub/mask.hpp"

namespace trigsub {

namespace {

constexpr double kTensionGuard = 1e-12;
constexpr double kMaxTension = std::numbers::pi / 3.0;

void require_tension(double alpha) {
  if (!(alpha > kTensionGuard && alpha < kMaxTension - kTensionGuard))
    throw InvalidTension("tension must lie in the open interval (0, pi/3)");
}

void require_arity(int m) {
  if (m < 2) throw ArityMismatch("scheme arity must be at least 2");
}

}  // namespace

SchemeFamily::SchemeFamily(int m, double alpha, Normalization p)
    : arity(m), tension(alpha), policy(p) {
  require_arity(m);
  require_tension(alpha);
}

Mask::Mask(Eigen::ArrayXd coefficients, int level, double tension,
           bool normalized)
    : coefficients_(std::move(coefficients)),
      level_(level),
      tension_(tension),
      normalized_(normalized) {
  const int m = arity();
  require_arity(m);
  // The rule whose weight centroid sits in the front half of the stencil
  // produces the parameter-earlier point.
  double first_moment = 0.0;
  for (int s = 0; s < m; ++s) first_moment += double(s) * coefficients_[s];
  stored_rule_is_low_ = 2.0 * first_moment <= double(m - 1) * sum();
}

Eigen::ArrayXd Mask::low_rule() const {
  return stored_rule_is_low_ ? coefficients_
                             : coefficients_.reverse().eval();
}

Eigen::ArrayXd Mask::high_rule() const {
  return stored_rule_is_low_ ? coefficients_.reverse().eval()
                             : coefficients_;
}

Mask generate_mask(const SchemeFamily& family, int level) {
  if (level < 0) throw Error("level must be non-negative");
  Eigen::ArrayXd a =
      detail::raw_mask_coefficients<double>(family.arity, level, family.tension);
  Mask mask(std::move(a), level, family.tension, false);
  if (family.policy == Normalization::normalized) return normalize(mask);
  return mask;
}

Mask closed_form_mask(int m, int level, double alpha) {
  if (m < 2 || m > 4)
    throw Unsupported("closed forms are available for m in {2, 3, 4}");
  require_tension(alpha);
  if (level < 0) throw Error("level must be non-negative");
  const double mesh = detail::level_mesh(alpha, level);
  if (!detail::mesh_valid(m, mesh))
    throw MeshTooLarge("(m-1)*alpha/2^level must stay below pi");
  return Mask(detail::closed_form_coefficients<double>(m, level, alpha), level,
              alpha, false);
}

Mask stationary_limit_mask(int m) {
  require_arity(m);
  Eigen::ArrayXd a(m);
  for (int s = 0; s < m; ++s)
    a[s] = detail::cardinal_bspline(m, detail::mask_abscissa_factor(m, s));
  return Mask(std::move(a), 0, 0.0, false);
}

Mask normalize(const Mask& mask) {
  const double total = mask.sum();
  if (!(total > 1e-300))
    throw DegenerateMask("coefficient sum too small to normalize");
  return Mask(mask.coefficients() / total, mask.level(), mask.tension(), true);
}

namespace detail {

double cardinal_bspline(int order, double t) {
  if (order == 1) return (t >= 0.0 && t < 1.0) ? 1.0 : 0.0;
  if (t <= 0.0 || t >= double(order)) return 0.0;
  return (t * cardinal_bspline(order - 1, t) +
          (double(order) - t) * cardinal_bspline(order - 1, t - 1.0)) /
         double(order - 1);
}

}  // namespace detail

}  // namespace trigsub
