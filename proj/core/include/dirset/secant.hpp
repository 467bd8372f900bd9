#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dirset/scalar_functions.hpp"

namespace dirset {

// All pairwise secant slopes of scalar samples, sorted ascending. In the
// slope chart of RP^1 these are exactly the directions the graph determines,
// with the vertical class unreachable while the domain stays strictly
// increasing.
struct SlopeSet {
  std::vector<double> slopes;  // sorted, n*(n-1)/2 entries
  std::size_t n_samples = 0;
  double domain_lo = 0.0;
  double domain_hi = 0.0;
};

// xs must be strictly increasing (UnsortedDomain otherwise) and match ys in
// length (LengthMismatch); at least two samples (TooFewPoints).
SlopeSet secant_slopes(std::span<const double> xs, std::span<const double> ys, int threads = 0);

struct SlopeFillResult {
  bool filled = false;
  // Midpoint of the largest uncovered gap when not filled.
  double witness = 0.0;
  double largest_gap = 0.0;
};

// Is every point of [-M, M] within eps of some slope? Exact sorted sweep
// over the coverage intervals, no sampling of the target interval.
SlopeFillResult slope_fill_test(const SlopeSet& s, double M, double eps);

// Smallest eps at which [-M, M] is filled: the covering radius of the slope
// set over the interval, computed exactly from the sorted sweep.
double min_fill_eps(const SlopeSet& s, double M);

struct SlopeHull {
  double lo = 0.0;
  double hi = 0.0;
  // Largest gap between consecutive slopes: the finite-sample defect of the
  // connectedness the limiting slope set of a continuous function has. It
  // must shrink under refinement.
  double largest_internal_gap = 0.0;
};

SlopeHull slope_connected_hull(const SlopeSet& s);

struct RefinementRow {
  int depth = 0;
  std::size_t n = 0;
  double max_abs_slope = 0.0;
  double fill_eps = 0.0;
  double fill_bound_m = 0.0;  // the fixed M the fill column refers to
};

// Sample `fgen` on nested dyadic grids (2^depth + 1 points of its fixed
// domain) and report max |slope| and the minimal fill eps for [-M, M] per
// depth. Nested grids reuse the exact same sample points, so both columns
// are exactly monotone across depths.
std::vector<RefinementRow> refinement_study(const ScalarFunctionSpec& fgen,
                                            std::span<const int> depths, double M = 10.0,
                                            int threads = 0);

}  // namespace dirset
