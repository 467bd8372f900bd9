#include <cmath>
#include <vector>

#include <doctest.h>

#include "dirset/direction_set.hpp"
#include "dirset/errors.hpp"
#include "dirset/generators.hpp"
#include "dirset/geometry.hpp"
#include "dirset/trichotomy.hpp"
#include "test_support.hpp"

using namespace dirset;

namespace {

Rotation plane_rotation(double theta) {
  return Rotation(2, {std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta)});
}

ProjectiveDirection vertical2d() { return rp1_direction(kPi / 2); }

}  // namespace

TEST_CASE("vee graph classifies as a Lipschitz graph") {
  const PointCloud cloud = generate({"absolute_value", {{"n", 201}}, 0});
  const Classification c = classify(cloud, kPi / 8, kPi / 256);

  CHECK(c.verdict == Verdict::class_i);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->lipschitz_constant == 1.0);  // brute-force secant max is exactly 1
  CHECK(c.witness->bound == doctest::Approx(std::tan(3 * kPi / 8)).epsilon(1e-12));
  CHECK(c.cap.radius == doctest::Approx(kPi / 4).epsilon(1e-9));
  CHECK(rp1_angle(c.cap.center) == doctest::Approx(kPi / 2).epsilon(1e-9));

  // Theorem-consistency at the reported radius, not just the threshold.
  CHECK(c.witness->lipschitz_constant <= std::tan(kPi / 2 - c.cap.radius) + 1e-6);
  CHECK(c.witness->lipschitz_constant <= c.witness->bound + 1e-6);

  // The witness reconstructs the rotated cloud exactly: base and value are
  // the rotated coordinates, split.
  const PointCloud rotated = apply_rotation(c.witness->rotation, cloud);
  for (std::size_t i = 0; i < rotated.size(); ++i) {
    CHECK(c.witness->base[i] == rotated.point(i)[0]);
    CHECK(c.witness->values[i] == rotated.point(i)[1]);
  }
}

TEST_CASE("dense circle classifies as all directions") {
  const PointCloud cloud = generate({"circle", {{"n", 64}}, 0});
  const Classification c = classify(cloud, kPi / 16, kPi / 32);
  CHECK(c.verdict == Verdict::class_iii);
  REQUIRE(c.cover.has_value());
  CHECK(c.cover->covered);
  CHECK(!c.witness.has_value());
}

TEST_CASE("weierstrass fixtures at the default thresholds") {
  // Depth 8: the vertical gap (radius ~0.0256) sits between eps_cover and
  // eps_hole, the operational middle regime.
  const PointCloud d8 = generate({"weierstrass", {{"a", 0.5}, {"b", 3.0}, {"depth", 8}}, 0});
  const Classification c8 = classify(d8, kPi / 8, kPi / 256);
  CHECK(c8.verdict == Verdict::class_ii);
  REQUIRE(c8.refinement.has_value());
  CHECK(c8.refinement->cap_radius == doctest::Approx(0.025588).epsilon(1e-3));
  CHECK(c8.refinement->coverage > 0.9);
  CHECK(c8.refinement->coverage < 1.0);

  // Depth 12: refinement has squeezed the vertical gap (radius ~0.00796)
  // below eps_cover = pi/256, so the recorded verdict is class_iii.
  const PointCloud d12 = generate({"weierstrass", {{"a", 0.5}, {"b", 3.0}, {"depth", 12}}, 0});
  const Classification c12 = classify(d12, kPi / 8, kPi / 256);
  CHECK(c12.verdict == Verdict::class_iii);
  CHECK(c12.cap.radius == doctest::Approx(0.0079567).epsilon(1e-3));
}

TEST_CASE("exactly one verdict with matching evidence") {
  const std::vector<GeneratorSpec> specs = {
      {"absolute_value", {{"n", 101}}, 0},
      {"circle", {{"n", 64}}, 0},
      {"weierstrass", {{"a", 0.5}, {"b", 3.0}, {"depth", 8}}, 0},
      {"lipschitz_random", {{"C", 1.0}, {"n", 80}}, 3},
      {"random_ball", {{"n", 40}, {"dim", 2}}, 5},
  };
  for (const auto& spec : specs) {
    const Classification c = classify(generate(spec));
    switch (c.verdict) {
      case Verdict::class_i:
        CHECK(c.witness.has_value());
        CHECK(c.cap.radius >= c.eps_hole);
        CHECK(!c.refinement.has_value());
        break;
      case Verdict::class_ii:
        CHECK(c.refinement.has_value());
        CHECK(!c.witness.has_value());
        REQUIRE(c.cover.has_value());
        CHECK(!c.cover->covered);
        break;
      case Verdict::class_iii:
        REQUIRE(c.cover.has_value());
        CHECK(c.cover->covered);
        CHECK(!c.witness.has_value());
        CHECK(c.cap.radius < c.eps_hole);
        break;
    }
  }
}

TEST_CASE("classify validates its resolutions") {
  const PointCloud cloud = generate({"circle", {{"n", 8}}, 0});
  CHECK_THROWS_AS(classify(cloud, kPi / 256, kPi / 8), BadTolerance);
  CHECK_THROWS_AS(classify(PointCloud::from_points({{0, 0}})), TooFewPoints);
}

TEST_CASE("vertical_line_test verdicts") {
  const PointCloud vertical_pair = PointCloud::from_points({{0, 0}, {0, 1}});
  const auto bad = vertical_line_test(vertical_pair, vertical2d());
  CHECK(!bad.graph);
  CHECK(bad.witness_i == 0);
  CHECK(bad.witness_j == 1);

  const PointCloud slanted = PointCloud::from_points({{0, 0}, {1, 5}});
  CHECK(vertical_line_test(slanted, vertical2d()).graph);

  // Any class already in D(E) fails the test.
  const PointCloud circle = generate({"circle", {{"n", 12}}, 0});
  const DirectionSet ds = unoriented_directions(circle);
  for (const auto& p : ds.projective) {
    CHECK(!vertical_line_test(circle, p).graph);
  }
}

TEST_CASE("extract_graph of a flat segment") {
  std::vector<std::vector<double>> pts;
  for (int k = 0; k <= 10; ++k) pts.push_back({k / 10.0, 0.0});
  const PointCloud cloud = PointCloud::from_rows(2, pts);
  const GraphWitness w = extract_graph(cloud, vertical2d());
  CHECK(w.lipschitz_constant == 0.0);
  for (const double v : w.values) CHECK(std::abs(v) <= 1e-15);
}

TEST_CASE("extract_graph is rotation equivariant on the vee") {
  const PointCloud cloud = generate({"absolute_value", {{"n", 101}}, 0});
  const Rotation r = plane_rotation(kPi / 6);
  const PointCloud rotated = apply_rotation(r, cloud);

  UnitDirection pole_up;
  pole_up.coords = r.apply(std::vector<double>{0.0, 1.0});
  const GraphWitness w = extract_graph(rotated, projective_canonical(pole_up));
  CHECK(w.lipschitz_constant == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("extract_graph of a plane slice in R^3") {
  const PointCloud cloud = generate({"plane_slice", {{"grid", 8}, {"w1", 0.5}, {"w2", 0.5}}, 0});
  std::vector<double> e3 = {0.0, 0.0, 1.0};
  const GraphWitness w = extract_graph(cloud, projective_canonical(make_unit(e3)));
  CHECK(w.lipschitz_constant == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
  CHECK(w.base_dim == 2);

  // Restriction to collinear base subsets never exceeds the global constant.
  const std::size_t grid = 8;
  for (std::size_t row = 0; row < grid; ++row) {
    std::vector<double> base;
    std::vector<double> values;
    for (std::size_t col = 0; col < grid; ++col) {
      const std::size_t idx = row * grid + col;
      base.insert(base.end(), {w.base[idx * 2], w.base[idx * 2 + 1]});
      values.push_back(w.values[idx]);
    }
    CHECK(lipschitz_constant(base, 2, values) <= w.lipschitz_constant + 1e-12);
  }
}

TEST_CASE("extract_graph refuses non-graphs with a witness") {
  const PointCloud cloud = PointCloud::from_points({{0, 0}, {0, 1}, {1, 0}});
  try {
    extract_graph(cloud, vertical2d());
    FAIL("expected NotAGraph");
  } catch (const NotAGraph& e) {
    CHECK(e.witness_i == 0);
    CHECK(e.witness_j == 1);
  }
}

TEST_CASE("lipschitz_constant on small fixtures") {
  CHECK(lipschitz_constant(std::vector<double>{0, 1}, 1, std::vector<double>{0, 3}) == 3.0);
  CHECK(lipschitz_constant(std::vector<double>{0, 0.5, 1}, 1, std::vector<double>{0, 0.25, 1}) ==
        1.5);
  CHECK(lipschitz_constant(std::vector<double>{0, 1, 2}, 1, std::vector<double>{4, 4, 4}) == 0.0);
  CHECK_THROWS_AS(
      lipschitz_constant(std::vector<double>{0, 5e-13}, 1, std::vector<double>{0, 1}),
      CoincidentBasePoints);
  CHECK_THROWS_AS(lipschitz_constant(std::vector<double>{0, 1}, 1, std::vector<double>{0}),
                  LengthMismatch);
}

TEST_CASE("lipschitz clouds satisfy both trichotomy directions") {
  for (const double c : {0.5, 1.0, 2.0}) {
    const PointCloud cloud = generate({"lipschitz_random", {{"C", c}, {"n", 60}}, 17});
    const Classification cls = classify(cloud);
    CHECK(cls.verdict == Verdict::class_i);
    REQUIRE(cls.witness.has_value());
    CHECK(cls.witness->lipschitz_constant <= c);
    // Converse: a C-Lipschitz graph misses an open cap about the vertical.
    CHECK(cls.cap.radius >= kPi / 2 - std::atan(c) - 1e-6);
  }
}

TEST_CASE("classification verdict is rotation equivariant") {
  int checked = 0;
  for (int t = 0; t < 25; ++t) {
    GeneratorSpec spec;
    if (t % 3 == 0) spec = {"lipschitz_random", {{"C", 1.5}, {"n", 40}}, 100ull + t};
    else if (t % 3 == 1) spec = {"circle", {{"n", 48}}, 0};
    else spec = {"random_ball", {{"n", 30}, {"dim", 2}}, 200ull + t};
    const PointCloud cloud = generate(spec);

    SplitMix64 rng(300 + t);
    const Rotation r = plane_rotation(2.0 * kPi * rng.next_double());
    const Classification a = classify(cloud);
    const Classification b = classify(apply_rotation(r, cloud));
    CHECK(a.verdict == b.verdict);
    ++checked;
  }
  CHECK(checked == 25);
}
