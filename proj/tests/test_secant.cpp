#include <cmath>
#include <vector>

#include <doctest.h>

#include "dirset/errors.hpp"
#include "dirset/generators.hpp"
#include "dirset/geometry.hpp"
#include "dirset/rng.hpp"
#include "dirset/secant.hpp"

using namespace dirset;

TEST_CASE("secant_slopes basic sets") {
  const SlopeSet one = secant_slopes(std::vector<double>{0, 1}, std::vector<double>{0, 1});
  REQUIRE(one.slopes.size() == 1);
  CHECK(one.slopes[0] == 1.0);

  const SlopeSet tent = secant_slopes(std::vector<double>{0, 1, 2}, std::vector<double>{0, 1, 0});
  REQUIRE(tent.slopes.size() == 3);
  CHECK(tent.slopes[0] == -1.0);
  CHECK(tent.slopes[1] == 0.0);
  CHECK(tent.slopes[2] == 1.0);

  std::vector<double> xs(20), ys(20);
  for (int i = 0; i < 20; ++i) xs[i] = ys[i] = 0.37 * i + 0.01;
  const SlopeSet ident = secant_slopes(xs, ys);
  CHECK(ident.slopes.size() == 190);
  for (const double s : ident.slopes) CHECK(s == 1.0);
}

TEST_CASE("secant_slopes validation") {
  CHECK_THROWS_AS(secant_slopes(std::vector<double>{0, 1}, std::vector<double>{0, 1, 2}),
                  LengthMismatch);
  CHECK_THROWS_AS(secant_slopes(std::vector<double>{1, 0}, std::vector<double>{0, 1}),
                  UnsortedDomain);
  CHECK_THROWS_AS(secant_slopes(std::vector<double>{0, 0, 1}, std::vector<double>{0, 1, 2}),
                  UnsortedDomain);
  CHECK_THROWS_AS(secant_slopes(std::vector<double>{0}, std::vector<double>{0}), TooFewPoints);
}

TEST_CASE("slope_fill_test on the three-slope set") {
  const SlopeSet s = secant_slopes(std::vector<double>{0, 1, 2}, std::vector<double>{0, 1, 0});

  const SlopeFillResult filled = slope_fill_test(s, 1.0, 0.5);
  CHECK(filled.filled);

  const SlopeFillResult gap = slope_fill_test(s, 1.0, 0.4);
  CHECK(!gap.filled);
  CHECK(std::abs(std::abs(gap.witness) - 0.5) <= 1e-15);
  CHECK(gap.largest_gap == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("slope_fill_test with a single slope") {
  SlopeSet s;
  s.slopes = {0.0};
  s.n_samples = 2;
  CHECK(slope_fill_test(s, 1.0, 1.0).filled);
  CHECK(!slope_fill_test(s, 1.0, 0.99).filled);
}

TEST_CASE("min_fill_eps exact and against a dense scan") {
  SlopeSet s;
  s.slopes = {-1.0, 0.0, 1.0};
  s.n_samples = 3;
  CHECK(min_fill_eps(s, 1.0) == 0.5);
  CHECK(min_fill_eps(s, 2.0) == 1.0);  // endpoint -2 is 1 away from -1

  SplitMix64 rng(88);
  for (int t = 0; t < 20; ++t) {
    SlopeSet r;
    const std::size_t m = 1 + rng.next_below(12);
    for (std::size_t i = 0; i < m; ++i) r.slopes.push_back(4.0 * rng.next_double() - 2.0);
    std::sort(r.slopes.begin(), r.slopes.end());
    r.n_samples = m;
    const double exact = min_fill_eps(r, 1.5);
    double dense = 0.0;
    for (int k = 0; k <= 30000; ++k) {
      const double x = -1.5 + 3.0 * k / 30000.0;
      double best = 1e300;
      for (const double sl : r.slopes) best = std::min(best, std::abs(x - sl));
      dense = std::max(dense, best);
    }
    CHECK(exact >= dense - 1e-12);
    CHECK(exact <= dense + 1e-4);
    CHECK(slope_fill_test(r, 1.5, exact).filled);
    CHECK(!slope_fill_test(r, 1.5, exact * (1.0 - 1e-9) - 1e-300).filled);
  }
}

TEST_CASE("slope_connected_hull") {
  SlopeSet single;
  single.slopes = {1.0};
  single.n_samples = 2;
  const SlopeHull h1 = slope_connected_hull(single);
  CHECK(h1.lo == 1.0);
  CHECK(h1.hi == 1.0);
  CHECK(h1.largest_internal_gap == 0.0);

  SlopeSet three;
  three.slopes = {-1.0, 0.0, 1.0};
  three.n_samples = 3;
  const SlopeHull h3 = slope_connected_hull(three);
  CHECK(h3.lo == -1.0);
  CHECK(h3.hi == 1.0);
  CHECK(h3.largest_internal_gap == 1.0);
}

TEST_CASE("weierstrass depth-8 hull fixture") {
  // Frozen from an independent numpy run of the same truncated series.
  const std::vector<RefinementRow> rows =
      refinement_study({"weierstrass", {{"a", 0.5}, {"b", 3.0}}}, std::vector<int>{8});
  CHECK(rows[0].max_abs_slope == doctest::Approx(50.50914983933927).epsilon(1e-6));

  const PointCloud cloud = generate({"weierstrass", {{"a", 0.5}, {"b", 3.0}, {"depth", 8}}, 0});
  std::vector<double> xs(cloud.size()), ys(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    xs[i] = cloud.point(i)[0];
    ys[i] = cloud.point(i)[1];
  }
  const SlopeHull hull = slope_connected_hull(secant_slopes(xs, ys));
  CHECK(hull.lo == doctest::Approx(-50.50914983933927).epsilon(1e-6));
  CHECK(hull.hi == doctest::Approx(31.857703439849928).epsilon(1e-6));
  CHECK(hull.largest_internal_gap == doctest::Approx(5.580254079519676).epsilon(1e-6));
}

TEST_CASE("chart consistency between slopes and pair directions") {
  const PointCloud cloud = generate({"weierstrass", {{"a", 0.5}, {"b", 3.0}, {"depth", 5}}, 0});
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t j = i + 1; j < cloud.size(); ++j) {
      const double slope = (cloud.point(j)[1] - cloud.point(i)[1]) /
                           (cloud.point(j)[0] - cloud.point(i)[0]);
      double chart = std::atan(slope);
      if (chart < 0.0) chart += kPi;
      const double angle = rp1_angle(projective_canonical(pair_direction(cloud.point(i), cloud.point(j))));
      CHECK(rp1_distance(chart, angle) <= 1e-9);
    }
  }
}

TEST_CASE("the vertical class is never achieved by graph samples") {
  const ProjectiveDirection vertical = rp1_direction(kPi / 2);
  for (const char* kind : {"weierstrass", "absolute_value"}) {
    GeneratorSpec spec;
    spec.kind = kind;
    if (spec.kind == "weierstrass") spec.params = {{"a", 0.5}, {"b", 3.0}, {"depth", 6}};
    else spec.params = {{"n", 65}};
    const PointCloud cloud = generate(spec);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      for (std::size_t j = i + 1; j < cloud.size(); ++j) {
        const double dx = cloud.point(j)[0] - cloud.point(i)[0];
        CHECK(dx > 0.0);  // strictly increasing domain: never vertical
        const auto dir = projective_canonical(pair_direction(cloud.point(i), cloud.point(j)));
        CHECK(dir.rep[0] > 0.0);
        CHECK(projective_distance(dir, vertical) > 0.0);
      }
    }
  }
}

TEST_CASE("refinement study of the identity and the tent") {
  const std::vector<int> depths = {1, 2, 3, 4, 5, 6};
  const auto line = refinement_study({"line", {{"slope", 1.0}}}, depths);
  for (const auto& row : line) {
    CHECK(row.max_abs_slope == 1.0);  // exact on every dyadic grid
    CHECK(row.n == (std::size_t{1} << row.depth) + 1);
  }

  const auto vee = refinement_study({"absolute_value", {}}, depths);
  for (const auto& row : vee) CHECK(row.max_abs_slope == 1.0);
}

TEST_CASE("weierstrass refinement is monotone across nested depths") {
  const std::vector<int> depths = {4, 5, 6, 7, 8};
  const auto rows = refinement_study({"weierstrass", {{"a", 0.5}, {"b", 3.0}}}, depths);
  REQUIRE(rows.size() == depths.size());
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(rows[i + 1].n > rows[i].n);
    CHECK(rows[i + 1].max_abs_slope >= rows[i].max_abs_slope);  // nested pair sets
    CHECK(rows[i + 1].fill_eps <= rows[i].fill_eps);
  }
}

TEST_CASE("refinement study validation") {
  CHECK_THROWS_AS(refinement_study({"no_such_function", {}}, std::vector<int>{4}),
                  UnknownGenerator);
  CHECK_THROWS_AS(refinement_study({"line", {}}, std::vector<int>{}), EmptyInput);
  CHECK_THROWS_AS(refinement_study({"line", {}}, std::vector<int>{20}), BadSpec);
  CHECK_THROWS_AS(refinement_study({"weierstrass", {{"a", 1.5}, {"b", 3.0}}}, std::vector<int>{4}),
                  BadSpec);
}
