#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dirset/geometry.hpp"
#include "dirset/point_cloud.hpp"

namespace dirset {

// Directions determined by a finite cloud. `projective` is the deduplicated
// class list, sorted lexicographically by canonical representative, with no
// two entries within dedup_tol of each other. `oriented` is filled only on
// request and then contains both orientations of every examined pair.
struct DirectionSet {
  std::size_t dim = 0;
  std::size_t n_points = 0;
  std::uint64_t pairs_examined = 0;
  std::uint64_t skipped_coincident = 0;
  double dedup_tol = kDefaultDedupTol;
  bool oriented_included = false;
  std::vector<UnitDirection> oriented;
  std::vector<ProjectiveDirection> projective;
};

// Both orientations of the directions of distinct point pairs.
//
// Without a budget all n(n-1)/2 unordered pairs are enumerated; a budget
// smaller than that selects `pair_budget` pairs by seeded uniform sampling
// without replacement. Pairs closer than kCoincidentTol are skipped. Output
// order is deterministic: pairs ascend in (i, j) order and each contributes
// its +direction immediately followed by the -direction.
std::vector<UnitDirection> oriented_directions(const PointCloud& cloud,
                                               std::optional<std::uint64_t> pair_budget = {},
                                               std::uint64_t seed = 0, int threads = 0);

// Projective classes of the pair directions, tolerance-merged.
//
// Merging is order-independent: classes are sorted first (by RP^1 angle when
// d = 2, lexicographically by canonical representative otherwise) and then
// merged by a single greedy sweep; each cluster keeps its first member as
// representative. A chain of classes spaced just under `tol` apart may split
// differently than an optimal clustering would; tol sits far below any data
// scale of interest, so this is accepted.
DirectionSet unoriented_directions(const PointCloud& cloud, double tol = kDefaultDedupTol,
                                   std::optional<std::uint64_t> pair_budget = {},
                                   std::uint64_t seed = 0, bool keep_oriented = false,
                                   int threads = 0);

struct CollinearityVerdict {
  bool collinear = false;
  // Set when collinear and at least one non-coincident pair exists.
  std::optional<ProjectiveDirection> line_direction;
  std::vector<double> line_point;
  // Set when not collinear: indices of three points spanning more than tol.
  std::array<std::size_t, 3> witness{0, 0, 0};
};

// A cloud is collinear at tolerance `tol` when all non-coincident pair
// directions lie within tol of a single projective class. A cloud whose
// points are all pairwise coincident is reported collinear with no
// direction (degenerate case).
CollinearityVerdict collinearity_test(const PointCloud& cloud, double tol = kDefaultDedupTol);

// |unoriented_directions(cloud, tol).projective|
std::size_t count_distinct_directions(const PointCloud& cloud, double tol = kDefaultDedupTol);

}  // namespace dirset
