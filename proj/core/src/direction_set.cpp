#include "dirset/direction_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "dirset/detail/pairs.hpp"
#include "dirset/errors.hpp"
#include "dirset/parallel.hpp"
#include "dirset/rng.hpp"

namespace dirset {

namespace {

using detail::pair_count;
using detail::pair_unrank;

// Seeded uniform sampling of k pair indices out of m, without replacement,
// by Knuth's selection-sampling sweep; the output is sorted by construction.
std::vector<std::uint64_t> sample_pair_indices(std::uint64_t m, std::uint64_t k,
                                               std::uint64_t seed) {
  std::vector<std::uint64_t> out;
  out.reserve(k);
  SplitMix64 rng(seed);
  std::uint64_t need = k;
  for (std::uint64_t idx = 0; idx < m && need > 0; ++idx) {
    const std::uint64_t remaining = m - idx;
    if (rng.next_u64() % remaining < need) {
      out.push_back(idx);
      --need;
    }
  }
  return out;
}

struct PairScan {
  std::vector<UnitDirection> dirs;  // one entry per non-coincident pair, (i -> j)
  std::uint64_t examined = 0;
  std::uint64_t skipped = 0;
};

// Enumerate the directions of the selected pairs. Blocks are combined in
// index order, so the result is identical for every thread count.
PairScan scan_pairs(const PointCloud& cloud, const std::vector<std::uint64_t>* selected,
                    std::uint64_t total_pairs, int threads) {
  const std::uint64_t n_items = selected ? selected->size() : total_pairs;
  const std::uint64_t n = cloud.size();

  auto map_block = [&](std::uint64_t lo, std::uint64_t hi) {
    PairScan local;
    local.dirs.reserve(hi - lo);
    for (std::uint64_t t = lo; t < hi; ++t) {
      const std::uint64_t pidx = selected ? (*selected)[t] : t;
      const auto [i, j] = pair_unrank(pidx, n);
      ++local.examined;
      std::span<const double> a = cloud.point(i);
      std::span<const double> b = cloud.point(j);
      double s = 0.0;
      for (std::size_t c = 0; c < a.size(); ++c) {
        const double d = b[c] - a[c];
        s += d * d;
      }
      if (!(std::sqrt(s) > kCoincidentTol)) {
        ++local.skipped;
        continue;
      }
      local.dirs.push_back(pair_direction(a, b));
    }
    return local;
  };
  auto combine = [](PairScan acc, PairScan next) {
    acc.examined += next.examined;
    acc.skipped += next.skipped;
    acc.dirs.insert(acc.dirs.end(), std::make_move_iterator(next.dirs.begin()),
                    std::make_move_iterator(next.dirs.end()));
    return acc;
  };
  return block_reduce<PairScan>(n_items, PairScan{}, map_block, combine, threads);
}

PairScan enumerate_directions(const PointCloud& cloud, std::optional<std::uint64_t> pair_budget,
                              std::uint64_t seed, int threads) {
  if (cloud.size() < 2) throw TooFewPoints("direction enumeration needs at least 2 points");
  const std::uint64_t m = pair_count(cloud.size());
  // The budget is quoted in pairs; anything at or above the number of
  // available unordered pairs (and in particular the n(n-1) oriented count)
  // means exhaustive enumeration. The library never subsamples on its own.
  if (pair_budget && *pair_budget < m) {
    const std::vector<std::uint64_t> sel = sample_pair_indices(m, *pair_budget, seed);
    return scan_pairs(cloud, &sel, m, threads);
  }
  return scan_pairs(cloud, nullptr, m, threads);
}

}  // namespace

std::vector<UnitDirection> oriented_directions(const PointCloud& cloud,
                                               std::optional<std::uint64_t> pair_budget,
                                               std::uint64_t seed, int threads) {
  const PairScan scan = enumerate_directions(cloud, pair_budget, seed, threads);
  std::vector<UnitDirection> out;
  out.reserve(scan.dirs.size() * 2);
  for (const UnitDirection& u : scan.dirs) {
    out.push_back(u);
    out.push_back(u.negated());
  }
  return out;
}

namespace {

std::vector<ProjectiveDirection> merge_classes(std::vector<ProjectiveDirection> classes,
                                               std::size_t dim, double tol) {
  if (classes.empty()) return classes;

  std::vector<ProjectiveDirection> merged;
  if (dim == 2) {
    // Work in the RP^1 angle chart where sorted order is metric order; the
    // circle is pi-periodic so the first and last cluster may wrap together.
    std::vector<std::pair<double, std::size_t>> ang(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) ang[i] = {rp1_angle(classes[i]), i};
    std::sort(ang.begin(), ang.end());

    std::vector<std::size_t> cluster_start;
    cluster_start.push_back(0);
    for (std::size_t i = 1; i < ang.size(); ++i) {
      if (ang[i].first - ang[i - 1].first > tol) cluster_start.push_back(i);
    }
    // Wraparound: if first and last clusters touch across pi, drop the last
    // cluster into the first.
    bool wrap = false;
    if (cluster_start.size() > 1) {
      const double gap = ang.front().first + kPi - ang.back().first;
      if (gap <= tol) wrap = true;
    }
    const std::size_t n_clusters = cluster_start.size() - (wrap ? 1 : 0);
    merged.reserve(n_clusters);
    for (std::size_t c = 0; c < n_clusters; ++c) {
      merged.push_back(classes[ang[cluster_start[c]].second]);
    }
  } else {
    // Sort canonical representatives lexicographically, then sweep: a class
    // joins the current cluster while it stays within tol of the cluster's
    // first member. Numerically equal classes are adjacent in this order,
    // which is the case that matters for dedup.
    std::sort(classes.begin(), classes.end(), projective_less);
    merged.push_back(classes.front());
    for (std::size_t i = 1; i < classes.size(); ++i) {
      if (projective_distance(merged.back(), classes[i]) > tol) merged.push_back(classes[i]);
    }
  }

  std::sort(merged.begin(), merged.end(), projective_less);
  return merged;
}

}  // namespace

DirectionSet unoriented_directions(const PointCloud& cloud, double tol,
                                   std::optional<std::uint64_t> pair_budget, std::uint64_t seed,
                                   bool keep_oriented, int threads) {
  if (tol < 0.0) throw BadTolerance("unoriented_directions: tol must be >= 0");
  const PairScan scan = enumerate_directions(cloud, pair_budget, seed, threads);

  DirectionSet out;
  out.dim = cloud.dim();
  out.n_points = cloud.size();
  out.pairs_examined = scan.examined;
  out.skipped_coincident = scan.skipped;
  out.dedup_tol = tol;

  std::vector<ProjectiveDirection> classes;
  classes.reserve(scan.dirs.size());
  for (const UnitDirection& u : scan.dirs) classes.push_back(projective_canonical(u));
  out.projective = merge_classes(std::move(classes), cloud.dim(), tol);

  if (keep_oriented) {
    out.oriented_included = true;
    out.oriented.reserve(scan.dirs.size() * 2);
    for (const UnitDirection& u : scan.dirs) {
      out.oriented.push_back(u);
      out.oriented.push_back(u.negated());
    }
  }
  return out;
}

CollinearityVerdict collinearity_test(const PointCloud& cloud, double tol) {
  if (cloud.size() < 2) throw TooFewPoints("collinearity_test needs at least 2 points");
  if (tol < 0.0) throw BadTolerance("collinearity_test: tol must be >= 0");
  const std::size_t n = cloud.size();
  const std::size_t d = cloud.dim();

  auto dist2 = [&](std::size_t a, std::size_t b) {
    double s = 0.0;
    std::span<const double> pa = cloud.point(a), pb = cloud.point(b);
    for (std::size_t c = 0; c < d; ++c) {
      const double t = pb[c] - pa[c];
      s += t * t;
    }
    return s;
  };

  // Reference class: direction of the most separated pair. Any tol-collinear
  // configuration has every pair direction within tol of it.
  std::size_t ri = 0, rj = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double t = dist2(i, j);
      if (t > best) {
        best = t;
        ri = i;
        rj = j;
      }
    }
  }

  CollinearityVerdict verdict;
  if (!(std::sqrt(best) > kCoincidentTol)) {
    // Every pair is coincident; the cloud sits inside a 1e-12 blob and is
    // contained in a line trivially.
    verdict.collinear = true;
    verdict.line_point.assign(cloud.point(0).begin(), cloud.point(0).end());
    return verdict;
  }

  const ProjectiveDirection ref = projective_canonical(pair_direction(cloud.point(ri), cloud.point(rj)));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(std::sqrt(dist2(i, j)) > kCoincidentTol)) continue;
      const ProjectiveDirection pd = projective_canonical(pair_direction(cloud.point(i), cloud.point(j)));
      if (projective_distance(ref, pd) > tol) {
        // Witness triple: the reference pair plus whichever failing-pair
        // endpoint sits farther from the reference pair (near-threshold
        // inputs may yield a witness whose own span is close to tol).
        std::size_t k = j;
        if (i != ri && i != rj && j != ri && j != rj) {
          k = dist2(ri, i) + dist2(rj, i) > dist2(ri, j) + dist2(rj, j) ? i : j;
        } else {
          k = (i == ri || i == rj) ? j : i;
        }
        std::array<std::size_t, 3> w{ri, rj, k};
        std::sort(w.begin(), w.end());
        verdict.collinear = false;
        verdict.witness = w;
        return verdict;
      }
    }
  }

  verdict.collinear = true;
  verdict.line_direction = ref;
  verdict.line_point.assign(cloud.point(ri).begin(), cloud.point(ri).end());
  return verdict;
}

std::size_t count_distinct_directions(const PointCloud& cloud, double tol) {
  return unoriented_directions(cloud, tol).projective.size();
}

}  // namespace dirset
