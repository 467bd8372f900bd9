#include "dirset/trichotomy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirset/detail/pairs.hpp"
#include "dirset/errors.hpp"
#include "dirset/parallel.hpp"

namespace dirset {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::class_i: return "class_i";
    case Verdict::class_ii: return "class_ii";
    case Verdict::class_iii: return "class_iii";
  }
  return "unknown";
}

VerticalLineVerdict vertical_line_test(const PointCloud& cloud, const ProjectiveDirection& dir,
                                       double tol) {
  if (cloud.size() < 2) throw TooFewPoints("vertical_line_test needs at least 2 points");
  if (dir.dim() != cloud.dim()) throw DimensionMismatch("vertical_line_test: dimension mismatch");
  if (tol < 0.0) throw BadTolerance("vertical_line_test: tol must be >= 0");

  const std::size_t n = cloud.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      std::span<const double> a = cloud.point(i), b = cloud.point(j);
      for (std::size_t c = 0; c < cloud.dim(); ++c) {
        const double d = b[c] - a[c];
        s += d * d;
      }
      if (!(std::sqrt(s) > kCoincidentTol)) continue;
      const ProjectiveDirection pd = projective_canonical(pair_direction(a, b));
      if (projective_distance(pd, dir) <= tol) {
        return {false, i, j};
      }
    }
  }
  return {true, 0, 0};
}

double lipschitz_constant(std::span<const double> base, std::size_t base_dim,
                          std::span<const double> values, int threads) {
  if (base_dim == 0) throw DimensionMismatch("lipschitz_constant: base dimension must be >= 1");
  if (base.size() % base_dim != 0) {
    throw DimensionMismatch("lipschitz_constant: base size not a multiple of base_dim");
  }
  const std::size_t n = base.size() / base_dim;
  if (n != values.size()) throw LengthMismatch("lipschitz_constant: base/value count mismatch");
  if (n < 2) throw TooFewPoints("lipschitz_constant: need at least 2 samples");

  const std::uint64_t m = detail::pair_count(n);
  return block_reduce<double>(
      m, 0.0,
      [&](std::uint64_t lo, std::uint64_t hi) {
        double local = 0.0;
        for (std::uint64_t t = lo; t < hi; ++t) {
          const auto [i, j] = detail::pair_unrank(t, n);
          double s = 0.0;
          for (std::size_t c = 0; c < base_dim; ++c) {
            const double d = base[j * base_dim + c] - base[i * base_dim + c];
            s += d * d;
          }
          const double dist = std::sqrt(s);
          if (!(dist > kCoincidentTol)) {
            throw CoincidentBasePoints("lipschitz_constant: base points " + std::to_string(i) +
                                       " and " + std::to_string(j) + " coincide within 1e-12");
          }
          local = std::max(local, std::abs(values[j] - values[i]) / dist);
        }
        return local;
      },
      [](double a, double b) { return std::max(a, b); }, threads);
}

GraphWitness extract_graph(const PointCloud& cloud, const ProjectiveDirection& pole, double tol,
                           int threads) {
  const VerticalLineVerdict v = vertical_line_test(cloud, pole, tol);
  if (!v.graph) {
    throw NotAGraph("extract_graph: pair (" + std::to_string(v.witness_i) + ", " +
                        std::to_string(v.witness_j) + ") is parallel to the pole within tol",
                    v.witness_i, v.witness_j);
  }

  const std::size_t d = cloud.dim();
  const std::size_t n = cloud.size();

  GraphWitness witness{Rotation::identity(d)};
  witness.rotation = rotation_to_pole(pole.rep);
  witness.base_dim = d - 1;
  witness.base.reserve(n * (d - 1));
  witness.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> q = witness.rotation.apply(cloud.point(i));
    witness.base.insert(witness.base.end(), q.begin(), q.end() - 1);
    witness.values.push_back(q.back());
  }

  // The vertical-line test only rules out pairs within tol of the pole;
  // distinct cloud points may still project to coincident base points when
  // their segment is nearly vertical but outside tol, and exact duplicates
  // are legitimate under allow_duplicates. Both cases are skipped exactly
  // like coincident pairs in the direction scan.
  const std::uint64_t m = detail::pair_count(n);
  witness.lipschitz_constant = block_reduce<double>(
      m, 0.0,
      [&](std::uint64_t lo, std::uint64_t hi) {
        double local = 0.0;
        for (std::uint64_t t = lo; t < hi; ++t) {
          const auto [i, j] = detail::pair_unrank(t, n);
          double sb = 0.0;
          for (std::size_t c = 0; c + 1 < d; ++c) {
            const double diff = witness.base[j * (d - 1) + c] - witness.base[i * (d - 1) + c];
            sb += diff * diff;
          }
          const double dv = std::abs(witness.values[j] - witness.values[i]);
          const double db = std::sqrt(sb);
          if (!(std::sqrt(sb + dv * dv) > kCoincidentTol)) continue;  // coincident pair
          if (!(db > 0.0)) {
            // Exactly vertical pair; the tol test above admits none.
            throw NotAGraph("extract_graph: points " + std::to_string(i) + " and " +
                                std::to_string(j) + " share a base point",
                            i, j);
          }
          local = std::max(local, dv / db);
        }
        return local;
      },
      [](double a, double b) { return std::max(a, b); }, threads);

  return witness;
}

Classification classify(const PointCloud& cloud, double eps_hole, double eps_cover, double tol,
                        int threads) {
  if (cloud.size() < 2) throw TooFewPoints("classify needs at least 2 points");
  if (!(eps_hole > 0.0) || !(eps_cover > 0.0)) {
    throw BadTolerance("classify: resolutions must be > 0");
  }
  if (eps_cover > eps_hole) {
    throw BadTolerance("classify: eps_cover must not exceed eps_hole");
  }

  Classification result;
  result.dim = cloud.dim();
  result.n_points = cloud.size();
  result.eps_hole = eps_hole;
  result.eps_cover = eps_cover;
  result.tol = tol;

  // Exhaustive pairs: verdicts are never based on subsampled directions.
  const DirectionSet ds = unoriented_directions(cloud, tol, {}, 0, false, threads);
  result.cap = largest_empty_cap(ds.projective, cloud.dim(), {}, threads);

  if (result.cap.radius >= eps_hole) {
    result.verdict = Verdict::class_i;
    // The cap is direction-free with radius >= eps_hole > tol, so the
    // vertical-line test at the center cannot fail; a NotAGraph here would
    // be an internal inconsistency, and the exception would propagate.
    GraphWitness witness = extract_graph(cloud, result.cap.center, tol, threads);
    witness.bound = std::tan(kPi / 2.0 - eps_hole);
    result.witness = std::move(witness);
    return result;
  }

  const CoverageCertificate cert =
      eps_cover_test(ds.projective, cloud.dim(), eps_cover, {}, threads);
  result.cover = cert;
  if (cert.covered) {
    result.verdict = Verdict::class_iii;
    return result;
  }

  result.verdict = Verdict::class_ii;
  RefinementNote note;
  note.cap_radius = result.cap.radius;
  note.coverage = coverage_fraction(ds.projective, cloud.dim(), eps_cover, threads);
  note.note = "largest empty cap radius " + std::to_string(result.cap.radius) +
              " is below eps_hole and coverage at eps_cover is incomplete; "
              "sample more densely to separate the regimes";
  result.refinement = std::move(note);
  return result;
}

}  // namespace dirset
