#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "trigsub/subdivide.hpp"

using namespace trigsub;

namespace {

constexpr double kPi = std::numbers::pi;

ControlPolygon closed_polygon(std::initializer_list<std::pair<double, double>> pts) {
  ControlPolygon poly;
  poly.points.resize(static_cast<int>(pts.size()), 2);
  int i = 0;
  for (const auto& [x, y] : pts) {
    poly.points(i, 0) = x;
    poly.points(i, 1) = y;
    ++i;
  }
  return poly;
}

ControlPolygon unit_square() {
  return closed_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

Mask chaikin() { return stationary_limit_mask(2); }

double max_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("corner cutting of the unit square") {
  const ControlPolygon out = refine_once(unit_square(), chaikin());
  REQUIRE(out.points.rows() == 8);
  CHECK(out.level == 1);
  const double expected[8][2] = {{0.25, 0},   {0.75, 0},   {1, 0.25},
                                 {1, 0.75},   {0.75, 1},   {0.25, 1},
                                 {0, 0.75},   {0, 0.25}};
  for (int i = 0; i < 8; ++i) {
    CHECK(out.points(i, 0) == doctest::Approx(expected[i][0]).epsilon(1e-15));
    CHECK(out.points(i, 1) == doctest::Approx(expected[i][1]).epsilon(1e-15));
  }
}

TEST_CASE("a constant polygon is reproduced by unit-sum masks") {
  for (int m : {2, 3, 4, 5}) {
    ControlPolygon poly;
    poly.points = Eigen::MatrixXd::Constant(m + 3, 3, 1.75);
    const Mask mask =
        generate_mask(SchemeFamily(m, kPi / 7, Normalization::normalized), 0);
    const ControlPolygon out = refine_once(poly, mask);
    CHECK((out.points.array() - 1.75).abs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("stencil orientation per arity") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-2, 2);
  ControlPolygon poly;
  const int n = 9;
  poly.points.resize(n, 2);
  for (int i = 0; i < n; ++i) {
    poly.points(i, 0) = dist(rng);
    poly.points(i, 1) = dist(rng);
  }
  const auto at = [&](int i) {
    return poly.points.row(((i % n) + n) % n);
  };

  SUBCASE("two-point rule") {
    const Eigen::ArrayXd a = stationary_limit_mask(2).coefficients();
    const ControlPolygon out = refine_once(poly, stationary_limit_mask(2));
    for (int i = 0; i < n; ++i) {
      const Eigen::RowVector2d even = a[0] * at(i) + a[1] * at(i + 1);
      const Eigen::RowVector2d odd = a[1] * at(i) + a[0] * at(i + 1);
      CHECK(max_distance(out.points.row(2 * i), even) < 1e-14);
      CHECK(max_distance(out.points.row(2 * i + 1), odd) < 1e-14);
    }
  }
  SUBCASE("three-point rule") {
    const Eigen::ArrayXd a = stationary_limit_mask(3).coefficients();
    const ControlPolygon out = refine_once(poly, stationary_limit_mask(3));
    for (int i = 0; i < n; ++i) {
      const Eigen::RowVector2d even =
          a[0] * at(i - 1) + a[1] * at(i) + a[2] * at(i + 1);
      const Eigen::RowVector2d odd =
          a[2] * at(i - 1) + a[1] * at(i) + a[0] * at(i + 1);
      CHECK(max_distance(out.points.row(2 * i), even) < 1e-14);
      CHECK(max_distance(out.points.row(2 * i + 1), odd) < 1e-14);
    }
  }
  SUBCASE("four-point rule uses the mirrored stencil") {
    const Eigen::ArrayXd a = stationary_limit_mask(4).coefficients();
    const ControlPolygon out = refine_once(poly, stationary_limit_mask(4));
    for (int i = 0; i < n; ++i) {
      const Eigen::RowVector2d even = a[0] * at(i + 1) + a[1] * at(i) +
                                      a[2] * at(i - 1) + a[3] * at(i - 2);
      const Eigen::RowVector2d odd = a[3] * at(i + 1) + a[2] * at(i) +
                                     a[1] * at(i - 1) + a[0] * at(i - 2);
      CHECK(max_distance(out.points.row(2 * i), even) < 1e-14);
      CHECK(max_distance(out.points.row(2 * i + 1), odd) < 1e-14);
    }
  }
}

TEST_CASE("raw two-point refinement keeps circle samples on the circle") {
  const int n = 12;
  const double alpha = 2 * kPi / n;
  ControlPolygon poly;
  poly.points.resize(n, 2);
  for (int i = 0; i < n; ++i) {
    poly.points(i, 0) = std::cos((i - 0.5) * alpha);
    poly.points(i, 1) = std::sin((i - 0.5) * alpha);
  }
  const ControlPolygon out =
      refine_once(poly, generate_mask(SchemeFamily(2, alpha), 0));
  CHECK((out.points.rowwise().norm().array() - 1.0).abs().maxCoeff() < 1e-12);
}

TEST_CASE("refine_to_level") {
  SUBCASE("zero levels is the identity") {
    const ControlPolygon out =
        refine_to_level(unit_square(), SchemeFamily(2, kPi / 6), 0);
    CHECK(max_distance(out.points, unit_square().points) == 0.0);
    CHECK(out.level == 0);
  }
  SUBCASE("closed point count doubles per level") {
    const ControlPolygon out =
        refine_to_level(unit_square(), SchemeFamily(3, kPi / 8), 3);
    CHECK(out.points.rows() == 32);
    CHECK(out.level == 3);
  }
  SUBCASE("tiny tension tracks stationary corner cutting") {
    ControlPolygon ours = unit_square();
    ours = refine_to_level(
        ours, SchemeFamily(2, kPi / 180, Normalization::normalized), 3);
    ControlPolygon reference = unit_square();
    for (int k = 0; k < 3; ++k) reference = refine_once(reference, chaikin());
    CHECK(max_distance(ours.points, reference.points) < 1e-4);
  }
  SUBCASE("splitting the level count does not change the result") {
    const SchemeFamily family(3, kPi / 6, Normalization::normalized);
    const ControlPolygon whole = refine_to_level(unit_square(), family, 4);
    const ControlPolygon split =
        refine_to_level(refine_to_level(unit_square(), family, 1), family, 3);
    CHECK(max_distance(whole.points, split.points) < 1e-15);
  }
}

TEST_CASE("open polygons keep only fully supported points") {
  ControlPolygon path;
  path.topology = Topology::open;
  path.points.resize(5, 2);
  for (int i = 0; i < 5; ++i) {
    path.points(i, 0) = i;
    path.points(i, 1) = i * i;
  }
  SUBCASE("window counts") {
    CHECK(refine_once(path, stationary_limit_mask(2)).points.rows() == 8);
    CHECK(refine_once(path, stationary_limit_mask(4)).points.rows() == 4);
  }
  SUBCASE("values are the stencil combinations") {
    const Eigen::ArrayXd a = stationary_limit_mask(2).coefficients();
    const ControlPolygon out = refine_once(path, stationary_limit_mask(2));
    for (int w = 0; w < 4; ++w) {
      const Eigen::RowVector2d low =
          a[0] * path.points.row(w) + a[1] * path.points.row(w + 1);
      CHECK(max_distance(out.points.row(2 * w), low) < 1e-15);
    }
  }
}

TEST_CASE("errors") {
  ControlPolygon two = closed_polygon({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(refine_once(two, stationary_limit_mask(3)), TooFewPoints);
  ControlPolygon empty;
  CHECK_THROWS_AS(refine_once(empty, stationary_limit_mask(2)), TooFewPoints);
  CHECK_THROWS_AS(refine_to_level(two, SchemeFamily(2, kPi / 6), -1), Error);
  CHECK_THROWS_AS(Mask(Eigen::ArrayXd::Ones(1), 0, kPi / 6, false),
                  ArityMismatch);
}

TEST_CASE("affine invariance of normalized refinement") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dist(-3, 3);
  for (int m : {2, 3, 4})
    for (int d : {2, 3, 5}) {
      const Mask mask =
          generate_mask(SchemeFamily(m, kPi / 8, Normalization::normalized), 0);
      ControlPolygon poly;
      poly.points.resize(m + 5, d);
      for (int i = 0; i < poly.points.rows(); ++i)
        for (int j = 0; j < d; ++j) poly.points(i, j) = dist(rng);
      Eigen::MatrixXd map(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) map(i, j) = dist(rng);
      Eigen::RowVectorXd shift(d);
      for (int j = 0; j < d; ++j) shift[j] = dist(rng);

      ControlPolygon transformed = poly;
      transformed.points = (poly.points * map.transpose()).rowwise() + shift;
      const ControlPolygon refined_then_mapped = refine_once(poly, mask);
      const Eigen::MatrixXd expected =
          (refined_then_mapped.points * map.transpose()).rowwise() + shift;
      const ControlPolygon mapped_then_refined = refine_once(transformed, mask);
      CHECK(max_distance(mapped_then_refined.points, expected) < 1e-12);
    }
}

TEST_CASE("reversal commutes with refinement up to rotation") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(-2, 2);
  for (int m : {2, 3, 4}) {
    const Mask mask =
        generate_mask(SchemeFamily(m, kPi / 7, Normalization::normalized), 0);
    const int n = 7;
    ControlPolygon poly;
    poly.points.resize(n, 2);
    for (int i = 0; i < n; ++i) {
      poly.points(i, 0) = dist(rng);
      poly.points(i, 1) = dist(rng);
    }
    ControlPolygon reversed = poly;
    reversed.points = poly.points.colwise().reverse().eval();

    const Eigen::MatrixXd a = refine_once(reversed, mask).points;
    const Eigen::MatrixXd b =
        refine_once(poly, mask).points.colwise().reverse().eval();
    double best = 1e300;
    for (int rot = 0; rot < a.rows(); ++rot) {
      double worst = 0.0;
      for (int i = 0; i < a.rows(); ++i)
        worst = std::max(worst,
                         (a.row(i) - b.row((i + rot) % b.rows())).cwiseAbs().maxCoeff());
      best = std::min(best, worst);
    }
    CHECK(best < 1e-13);
  }
}
