#include "dirset/secant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dirset/detail/pairs.hpp"
#include "dirset/errors.hpp"
#include "dirset/parallel.hpp"

namespace dirset {

SlopeSet secant_slopes(std::span<const double> xs, std::span<const double> ys, int threads) {
  if (xs.size() != ys.size()) throw LengthMismatch("secant_slopes: xs and ys differ in length");
  if (xs.size() < 2) throw TooFewPoints("secant_slopes: need at least 2 samples");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) {
      throw UnsortedDomain("secant_slopes: xs must be strictly increasing (violated at index " +
                           std::to_string(i + 1) + ")");
    }
  }

  const std::uint64_t n = xs.size();
  const std::uint64_t m = detail::pair_count(n);
  SlopeSet out;
  out.n_samples = n;
  out.domain_lo = xs.front();
  out.domain_hi = xs.back();
  out.slopes.resize(m);

  // Blocks write disjoint ranges of the preallocated slope array, so the
  // fill is thread-count independent; the sort afterwards is sequential.
  block_reduce<int>(
      m, 0,
      [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t t = lo; t < hi; ++t) {
          const auto [i, j] = detail::pair_unrank(t, n);
          out.slopes[t] = (ys[j] - ys[i]) / (xs[j] - xs[i]);
        }
        return 0;
      },
      [](int a, int) { return a; }, threads);

  std::sort(out.slopes.begin(), out.slopes.end());
  return out;
}

namespace {

// Open uncovered intervals of [-M, M] relative to the union of closed
// intervals [s - eps, s + eps]; calls sink(a, b) for each.
template <class Sink>
void sweep_uncovered(const SlopeSet& s, double M, double eps, Sink sink) {
  double cur = -M;  // everything below cur is settled
  for (const double slope : s.slopes) {
    const double lo = slope - eps;
    const double hi = slope + eps;
    if (lo > cur) {
      const double b = std::min(lo, M);
      if (b > cur) sink(cur, b);
      if (lo >= M) {
        cur = M;
        break;
      }
    }
    cur = std::max(cur, hi);
    if (cur >= M) break;
  }
  if (cur < M) sink(cur, M);
}

}  // namespace

SlopeFillResult slope_fill_test(const SlopeSet& s, double M, double eps) {
  if (!(M > 0.0)) throw BadTolerance("slope_fill_test: M must be > 0");
  if (!(eps > 0.0)) throw BadTolerance("slope_fill_test: eps must be > 0");
  SlopeFillResult res;
  res.filled = true;
  sweep_uncovered(s, M, eps, [&](double a, double b) {
    res.filled = false;
    if (b - a > res.largest_gap) {
      res.largest_gap = b - a;
      res.witness = (a + b) / 2.0;
    }
  });
  return res;
}

double min_fill_eps(const SlopeSet& s, double M) {
  if (!(M > 0.0)) throw BadTolerance("min_fill_eps: M must be > 0");
  if (s.slopes.empty()) throw EmptyInput("min_fill_eps: empty slope set");
  const auto& v = s.slopes;

  auto dist_to_nearest = [&](double x) {
    const auto it = std::lower_bound(v.begin(), v.end(), x);
    double best = std::numeric_limits<double>::infinity();
    if (it != v.end()) best = std::min(best, *it - x);
    if (it != v.begin()) best = std::min(best, x - *(it - 1));
    return best;
  };

  double r = std::max(dist_to_nearest(-M), dist_to_nearest(M));
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double lo = v[i], hi = v[i + 1];
    if (hi < -M || lo > M) continue;
    const double mid = std::clamp((lo + hi) / 2.0, -M, M);
    r = std::max(r, std::min(mid - lo, hi - mid));
  }
  return r;
}

SlopeHull slope_connected_hull(const SlopeSet& s) {
  if (s.slopes.empty()) throw EmptyInput("slope_connected_hull: empty slope set");
  SlopeHull hull;
  hull.lo = s.slopes.front();
  hull.hi = s.slopes.back();
  for (std::size_t i = 0; i + 1 < s.slopes.size(); ++i) {
    hull.largest_internal_gap = std::max(hull.largest_internal_gap, s.slopes[i + 1] - s.slopes[i]);
  }
  return hull;
}

std::vector<RefinementRow> refinement_study(const ScalarFunctionSpec& fgen,
                                            std::span<const int> depths, double M, int threads) {
  validate_scalar_function(fgen);
  if (!(M > 0.0)) throw BadTolerance("refinement_study: M must be > 0");
  if (depths.empty()) throw EmptyInput("refinement_study: no depths given");
  const auto [lo, hi] = scalar_function_domain(fgen);

  std::vector<RefinementRow> rows;
  rows.reserve(depths.size());
  for (const int depth : depths) {
    if (depth < 1 || depth > 13) {
      throw BadSpec("refinement_study: depth must lie in [1, 13] (pair count grows as 4^depth)");
    }
    const std::size_t n = (std::size_t{1} << depth) + 1;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Dyadic grids: exact sample coordinates, so deeper grids reuse
      // shallower sample points bit for bit and the columns below are
      // monotone across depths by construction.
      const double t = std::ldexp(static_cast<double>(i), -depth);
      xs[i] = lo + (hi - lo) * t;
      ys[i] = eval_scalar_function(fgen, xs[i]);
    }
    const SlopeSet slopes = secant_slopes(xs, ys, threads);

    RefinementRow row;
    row.depth = depth;
    row.n = n;
    row.max_abs_slope = std::max(std::abs(slopes.slopes.front()), std::abs(slopes.slopes.back()));
    row.fill_eps = min_fill_eps(slopes, M);
    row.fill_bound_m = M;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dirset
