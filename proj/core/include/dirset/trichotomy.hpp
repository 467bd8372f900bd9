#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dirset/cap_analysis.hpp"
#include "dirset/direction_set.hpp"
#include "dirset/geometry.hpp"
#include "dirset/point_cloud.hpp"

namespace dirset {

inline constexpr double kDefaultEpsHole = kPi / 16.0;
inline constexpr double kDefaultEpsCover = kPi / 256.0;

// Certificate that a cloud is, after the stored rotation, the graph of a
// function over its first d-1 coordinates. `base` holds the rotated points'
// leading coordinates row-major, `values` the last coordinate;
// lipschitz_constant is the exact maximum secant slope over all pairs.
// `bound` is tan(pi/2 - eps_hole) when produced by classify, 0 otherwise.
struct GraphWitness {
  Rotation rotation;
  std::size_t base_dim = 1;
  std::vector<double> base;
  std::vector<double> values;
  double lipschitz_constant = 0.0;
  double bound = 0.0;
};

enum class Verdict { class_i, class_ii, class_iii };

std::string to_string(Verdict v);

// Middle-regime evidence: the cap was too small for class i and the cover
// test still failed, so only deeper sampling can move the verdict.
struct RefinementNote {
  double cap_radius = 0.0;
  double coverage = 0.0;
  std::string note;
};

// Classification of a cloud at resolution (eps_hole, eps_cover):
//   class_i    a direction-free cap of radius >= eps_hole exists; the cloud
//              is a graph over the cap center and `witness` certifies the
//              Lipschitz constant
//   class_iii  the computed directions eps_cover-cover RP^{d-1}
//   class_ii   neither; `refinement` reports how far from both gates
// Exactly one verdict is produced; `cap` is always the computed cap report.
struct Classification {
  Verdict verdict = Verdict::class_ii;
  std::size_t dim = 0;
  std::size_t n_points = 0;
  double eps_hole = kDefaultEpsHole;
  double eps_cover = kDefaultEpsCover;
  double tol = kDefaultDedupTol;
  CapReport cap;
  std::optional<GraphWitness> witness;
  std::optional<CoverageCertificate> cover;
  std::optional<RefinementNote> refinement;
};

// eps_cover must not exceed eps_hole; the cloud needs >= 2 points. Direction
// enumeration is always exhaustive here (no pair sampling).
Classification classify(const PointCloud& cloud, double eps_hole = kDefaultEpsHole,
                        double eps_cover = kDefaultEpsCover, double tol = kDefaultDedupTol,
                        int threads = 0);

struct VerticalLineVerdict {
  bool graph = true;
  std::size_t witness_i = 0;  // pair within tol of `dir` when !graph
  std::size_t witness_j = 0;
};

// Does any pair direction fall within tol of `dir`? Coincident pairs have
// no direction and cannot witness failure.
VerticalLineVerdict vertical_line_test(const PointCloud& cloud, const ProjectiveDirection& dir,
                                       double tol = kDefaultDedupTol);

// Rotate `pole` to the last axis, split coordinates into base and value, and
// certify the maximum secant slope (exhaustive over all pairs; sampling is
// never allowed here). Throws NotAGraph with the witness pair when some pair
// direction lies within tol of the pole.
GraphWitness extract_graph(const PointCloud& cloud, const ProjectiveDirection& pole,
                           double tol = kDefaultDedupTol, int threads = 0);

// Exact max secant slope of samples (base point, value); base points are
// row-major with stride base_dim. Throws CoincidentBasePoints when two base
// points are closer than kCoincidentTol.
double lipschitz_constant(std::span<const double> base, std::size_t base_dim,
                          std::span<const double> values, int threads = 0);

}  // namespace dirset
