#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "trigsub/trig_basis.hpp"

using namespace trigsub;

namespace {

constexpr double kPi = std::numbers::pi;

TrigKnotGrid grid_for(double mesh, int knots = 32) {
  return TrigKnotGrid{mesh, knots};
}

// Piecewise expansions of the recurrence for small orders, written out by
// hand; independent of the recursive evaluator.
double order2_closed(double x, double h) {
  const double d = std::sin(h);
  if (x >= 0 && x < h) return std::sin(x) / d;
  if (x >= h && x < 2 * h) return std::sin(2 * h - x) / d;
  return 0.0;
}

double order3_closed(double x, double h) {
  const double d = std::sin(h) * std::sin(2 * h);
  if (x >= 0 && x < h) return std::sin(x) * std::sin(x) / d;
  if (x >= h && x < 2 * h)
    return (std::sin(x) * std::sin(2 * h - x) +
            std::sin(3 * h - x) * std::sin(x - h)) /
           d;
  if (x >= 2 * h && x < 3 * h)
    return std::sin(3 * h - x) * std::sin(3 * h - x) / d;
  return 0.0;
}

double order4_closed(double x, double h) {
  const double d = std::sin(h) * std::sin(2 * h) * std::sin(3 * h);
  const auto s = [](double v) { return std::sin(v); };
  if (x >= 0 && x < h) return s(x) * s(x) * s(x) / d;
  if (x >= h && x < 2 * h)
    return (s(x) * (s(x) * s(2 * h - x) + s(3 * h - x) * s(x - h)) +
            s(4 * h - x) * s(x - h) * s(x - h)) /
           d;
  if (x >= 2 * h && x < 3 * h)
    return (s(x) * s(3 * h - x) * s(3 * h - x) +
            s(4 * h - x) * (s(x - h) * s(3 * h - x) +
                            s(4 * h - x) * s(x - 2 * h))) /
           d;
  if (x >= 3 * h && x < 4 * h)
    return s(4 * h - x) * s(4 * h - x) * s(4 * h - x) / d;
  return 0.0;
}

}  // namespace

TEST_CASE("order-1 base case is the half-open indicator") {
  const auto grid = grid_for(1.0);
  CHECK(eval_basis({1}, 0.3, grid) == 1.0);
  CHECK(eval_basis({1}, 0.0, grid) == 1.0);
  CHECK(eval_basis({1}, 1.0, grid) == 0.0);
  CHECK(eval_basis({1}, -0.2, grid) == 0.0);
}

TEST_CASE("order-2 value pinned against the expanded recurrence") {
  const double h = kPi / 6;
  const double v = eval_basis({2}, 1.25 * h, grid_for(h));
  CHECK(std::abs(v - std::sin(0.75 * h) / std::sin(h)) < 1e-15);
  CHECK(std::abs(v - 0.7653668647301796) < 1e-12);
}

TEST_CASE("recursive evaluation matches hand-expanded closed forms") {
  for (double h : {kPi / 6, kPi / 8, 0.3, 0.55}) {
    const auto grid = grid_for(h);
    for (int i = 0; i <= 400; ++i) {
      const double x = -0.5 * h + i * (5.0 * h / 400);
      CHECK(std::abs(eval_basis({2}, x, grid) - order2_closed(x, h)) < 1e-13);
      CHECK(std::abs(eval_basis({3}, x, grid) - order3_closed(x, h)) < 1e-13);
      if (3 * h < kPi)
        CHECK(std::abs(eval_basis({4}, x, grid) - order4_closed(x, h)) < 1e-13);
    }
  }
}

TEST_CASE("local support and non-negativity") {
  std::mt19937 rng(7);
  for (int r = 1; r <= 8; ++r) {
    std::uniform_real_distribution<double> mesh_dist(0.01, kPi / r * 0.98);
    for (int trial = 0; trial < 8; ++trial) {
      const double h = mesh_dist(rng);
      const auto grid = grid_for(h);
      for (int i = 0; i <= 200; ++i) {
        const double x = -h + i * ((r + 2) * h / 200);
        const double v = eval_basis({r}, x, grid);
        if (x < 0 || x >= r * h)
          CHECK(v == 0.0);
        else
          CHECK(v >= 0.0);
      }
    }
  }
}

TEST_CASE("shifted basis is the same floating-point path") {
  const double h = kPi / 6;
  const auto grid = grid_for(h);
  CHECK(eval_shifted_basis({1}, 2, 2.5 * h, grid) == 1.0);
  for (int r : {1, 2, 3, 4})
    for (int j : {-2, 0, 1, 3})
      for (double x : {0.1, 0.9, 1.7, 2.3}) {
        CHECK(eval_shifted_basis({r}, j, x, grid) ==
              eval_basis({r}, x - j * h, grid));
      }
  const double v = eval_shifted_basis({2}, 1, 2.25 * h, grid);
  CHECK(std::abs(v - 0.7653668647301796) < 1e-12);
}

TEST_CASE("mesh validity errors") {
  CHECK_THROWS_AS(eval_basis({2}, 0.1, grid_for(0.0)), InvalidMesh);
  CHECK_THROWS_AS(eval_basis({2}, 0.1, grid_for(-1.0)), InvalidMesh);
  CHECK_THROWS_AS(eval_basis({4}, 0.1, grid_for(kPi / 3 + 0.1)), InvalidMesh);
  CHECK_THROWS_AS(eval_basis({2}, 0.1, grid_for(kPi)), InvalidMesh);
  CHECK_NOTHROW(eval_basis({1}, 0.1, grid_for(2.0)));
}

TEST_CASE("trig spline evaluation") {
  const double h = kPi / 7;
  const int n = 2;
  const int count = 6;  // coefficients p_0..p_5
  const TrigKnotGrid grid{h, count + n};

  SUBCASE("zero spline") {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(count);
    for (double x = (n - 1) * h; x <= count * h; x += h / 7)
      CHECK(eval_trig_spline(c, {n}, x, grid) == 0.0);
  }

  SUBCASE("single coefficient selects one basis function") {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(count);
    c[0] = 1.0;
    for (double x = (n - 1) * h; x < 2 * h; x += h / 9)
      CHECK(eval_trig_spline(c, {n}, x, grid) ==
            doctest::Approx(eval_shifted_basis({n}, 0, x, grid)).epsilon(1e-15));
  }

  SUBCASE("unit coefficients against the per-interval closed form") {
    Eigen::VectorXd c = Eigen::VectorXd::Ones(count);
    // On [t_i, t_{i+1}) only T_{i-1} and T_i contribute; their sum expands to
    // [sin(t_{i+1} - x) + sin(x - t_i)] / sin h.
    for (double x = (n - 1) * h; x < count * h; x += h / 13) {
      const int i = static_cast<int>(x / h);
      const double expected =
          (std::sin((i + 1) * h - x) + std::sin(x - i * h)) / std::sin(h);
      CHECK(std::abs(eval_trig_spline(c, {n}, x, grid) - expected) < 1e-13);
    }
  }

  SUBCASE("domain errors") {
    Eigen::VectorXd c = Eigen::VectorXd::Ones(count);
    CHECK_THROWS_AS(eval_trig_spline(c, {n}, (n - 1) * h - 0.01, grid),
                    OutOfDomain);
    CHECK_THROWS_AS(eval_trig_spline(c, {n}, count * h + 0.01, grid),
                    OutOfDomain);
    CHECK_THROWS_AS(
        eval_trig_spline(c, {n}, h, TrigKnotGrid{h, count + n + 3}),
        InvalidMesh);
  }
}

TEST_CASE("recursion agrees across scalar types") {
  const double h = kPi / 6;
  for (double x : {0.2, 0.7, 1.3, 1.9}) {
    const double d = detail::basis_value<double>(4, x, h);
    const long double l =
        detail::basis_value<long double>(4, (long double)x, (long double)h);
    CHECK(std::abs(d - double(l)) < 1e-14);
  }
}
