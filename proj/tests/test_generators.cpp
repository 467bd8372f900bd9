#include <cmath>
#include <vector>

#include <doctest.h>

#include "dirset/errors.hpp"
#include "dirset/generators.hpp"
#include "dirset/geometry.hpp"
#include "dirset/scalar_functions.hpp"

using namespace dirset;

TEST_CASE("generators are reproducible byte for byte") {
  const std::vector<GeneratorSpec> specs = {
      {"lipschitz_random", {{"C", 2.0}, {"n", 50}}, 7},
      {"weierstrass", {{"a", 0.5}, {"b", 3.0}, {"depth", 6}}, 0},
      {"absolute_value", {{"n", 33}}, 0},
      {"line", {{"n", 12}}, 3},
      {"circle", {{"n", 16}}, 0},
      {"collinear_plus_point", {{"k", 9}}, 5},
      {"random_ball", {{"n", 40}, {"dim", 3}}, 11},
      {"cantor_graph", {{"depth", 7}}, 0},
      {"plane_slice", {{"grid", 6}, {"w1", 0.5}, {"w2", 0.5}}, 0},
  };
  for (const auto& spec : specs) {
    const PointCloud a = generate(spec);
    const PointCloud b = generate(spec);
    CHECK(a.data() == b.data());
    CHECK(a.dim() == b.dim());
  }
}

TEST_CASE("different seeds give different clouds") {
  const PointCloud a = generate({"random_ball", {{"n", 20}, {"dim", 2}}, 1});
  const PointCloud b = generate({"random_ball", {{"n", 20}, {"dim", 2}}, 2});
  CHECK(a.data() != b.data());
}

TEST_CASE("parameter validation carries field names") {
  CHECK_THROWS_AS(generate({"nonsense", {}, 0}), UnknownGenerator);
  CHECK_THROWS_AS(generate({"circle", {}, 0}), BadSpec);
  CHECK_THROWS_AS(generate({"circle", {{"n", 2.5}}, 0}), BadSpec);
  CHECK_THROWS_AS(generate({"lipschitz_random", {{"C", -1.0}, {"n", 10}}, 0}), BadSpec);
  CHECK_THROWS_AS(generate({"weierstrass", {{"a", 1.2}, {"b", 3.0}, {"depth", 4}}, 0}), BadSpec);
  CHECK_THROWS_AS(generate({"weierstrass", {{"a", 0.5}, {"b", 4.0}, {"depth", 4}}, 0}), BadSpec);
  CHECK_THROWS_AS(generate({"weierstrass", {{"a", 0.2}, {"b", 3.0}, {"depth", 4}}, 0}), BadSpec);

  try {
    generate({"weierstrass", {{"a", 0.5}, {"b", 4.0}, {"depth", 4}}, 0});
  } catch (const BadSpec& e) {
    CHECK(std::string(e.what()).find("'b'") != std::string::npos);
  }
}

TEST_CASE("circle fixture geometry") {
  const PointCloud cloud = generate({"circle", {{"n", 8}}, 0});
  REQUIRE(cloud.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const double r = std::hypot(cloud.point(i)[0], cloud.point(i)[1]);
    CHECK(r == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("lipschitz_random increments respect the bound exactly") {
  for (const double c : {0.5, 1.0, 2.0, 5.0}) {
    const PointCloud cloud = generate({"lipschitz_random", {{"C", c}, {"n", 100}}, 7});
    REQUIRE(cloud.size() == 100);
    // Exhaustive pairwise check; the dyadic increment lattice makes the
    // telescoped bound exact, not approximate.
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      for (std::size_t j = i + 1; j < cloud.size(); ++j) {
        const double dx = cloud.point(j)[0] - cloud.point(i)[0];
        const double dy = std::abs(cloud.point(j)[1] - cloud.point(i)[1]);
        CHECK(dy <= c * dx);
      }
    }
  }
}

TEST_CASE("weierstrass cloud samples the truncated series") {
  const PointCloud cloud = generate({"weierstrass", {{"a", 0.5}, {"b", 3.0}, {"depth", 5}}, 0});
  REQUIRE(cloud.size() == 33);
  const ScalarFunctionSpec f{"weierstrass", {{"a", 0.5}, {"b", 3.0}}};
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK(cloud.point(i)[1] == eval_scalar_function(f, cloud.point(i)[0]));
  }
  CHECK(weierstrass_truncation(0.5) == 41);
}

TEST_CASE("cantor staircase samples are monotone in [0,1]") {
  const PointCloud cloud = generate({"cantor_graph", {{"depth", 8}}, 0});
  double prev = -1.0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const double y = cloud.point(i)[1];
    CHECK(y >= prev);
    CHECK(y >= 0.0);
    CHECK(y <= 1.0);
    prev = y;
  }
  CHECK(cloud.point(0)[1] == 0.0);
  CHECK(cloud.point(cloud.size() - 1)[1] == 1.0);
}

TEST_CASE("random_ball stays in the ball") {
  for (const std::size_t d : {2u, 3u, 5u}) {
    const PointCloud cloud =
        generate({"random_ball", {{"n", 200}, {"dim", static_cast<double>(d)}}, 13});
    REQUIRE(cloud.size() == 200);
    REQUIRE(cloud.dim() == d);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      double r2 = 0.0;
      for (std::size_t c = 0; c < d; ++c) r2 += cloud.point(i)[c] * cloud.point(i)[c];
      CHECK(r2 <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("plane_slice is the stated graph") {
  const PointCloud cloud = generate({"plane_slice", {{"grid", 5}, {"w1", 0.5}, {"w2", 0.5}}, 0});
  REQUIRE(cloud.size() == 25);
  REQUIRE(cloud.dim() == 3);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK(cloud.point(i)[2] ==
          doctest::Approx(0.5 * cloud.point(i)[0] + 0.5 * cloud.point(i)[1]).epsilon(1e-15));
  }
}
