#include "dirset/cap_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "dirset/errors.hpp"
#include "dirset/parallel.hpp"
#include "dirset/sphere_net.hpp"

namespace dirset {

std::string to_string(CapMethod m) {
  switch (m) {
    case CapMethod::exact_gap_2d: return "exact_gap_2d";
    case CapMethod::voronoi_3d: return "voronoi_3d";
    case CapMethod::sampled: return "sampled";
  }
  return "unknown";
}

std::string to_string(CapQuality q) {
  return q == CapQuality::exact ? "exact" : "lower_bound";
}

namespace {

void check_dims(std::span<const ProjectiveDirection> dirs, std::size_t dim) {
  for (const auto& d : dirs) {
    if (d.dim() != dim) throw DimensionMismatch("direction dimension does not match");
  }
}

double min_projective_distance(std::span<const double> center,
                               std::span<const ProjectiveDirection> dirs) {
  double best_abs = 0.0;  // max |cos|; min distance = arccos of it
  for (const auto& d : dirs) {
    double s = 0.0;
    for (std::size_t c = 0; c < center.size(); ++c) s += center[c] * d.rep.coords[c];
    best_abs = std::max(best_abs, std::abs(s));
    if (best_abs >= 1.0) return 0.0;
  }
  return std::acos(std::min(1.0, best_abs));
}

void validate_emptiness(const CapReport& report, std::span<const ProjectiveDirection> dirs) {
  const double closest = min_projective_distance(report.center.rep.coords, dirs);
  if (closest < report.radius - 1e-9) {
    throw InternalError("cap report failed its emptiness check: closest class at " +
                        std::to_string(closest) + " inside radius " +
                        std::to_string(report.radius));
  }
}

}  // namespace

CapReport largest_empty_arc(std::span<const ProjectiveDirection> dirs) {
  if (dirs.empty()) throw EmptyInput("largest_empty_arc: no directions");
  check_dims(dirs, 2);

  std::vector<double> angles;
  angles.reserve(dirs.size());
  for (const auto& d : dirs) angles.push_back(rp1_angle(d));
  std::sort(angles.begin(), angles.end());

  double best_gap = -1.0;
  double best_center = 0.0;
  auto consider = [&](double gap, double center) {
    if (center >= kPi) center -= kPi;
    if (center < 0.0) center += kPi;
    if (gap > best_gap || (gap == best_gap && center < best_center)) {
      best_gap = gap;
      best_center = center;
    }
  };
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    consider(angles[i + 1] - angles[i], (angles[i] + angles[i + 1]) / 2.0);
  }
  const double wrap = (kPi - angles.back()) + angles.front();
  consider(wrap, angles.back() + wrap / 2.0);

  CapReport report;
  report.center = rp1_direction(best_center);
  report.radius = best_gap / 2.0;
  report.method = CapMethod::exact_gap_2d;
  report.quality = CapQuality::exact;
  validate_emptiness(report, dirs);
  return report;
}

namespace {

std::vector<double> cross3(std::span<const double> a, std::span<const double> b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (const double c : v) s += c * c;
  return std::sqrt(s);
}

// Deterministic unit vector orthogonal to u: orthogonalize the standard axis
// with the smallest |component| against u.
std::vector<double> any_orthogonal(std::span<const double> u) {
  std::size_t axis = 0;
  double smallest = std::abs(u[0]);
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (std::abs(u[i]) < smallest) {
      smallest = std::abs(u[i]);
      axis = i;
    }
  }
  double proj = u[axis];
  std::vector<double> v(u.size(), 0.0);
  v[axis] = 1.0;
  for (std::size_t i = 0; i < u.size(); ++i) v[i] -= proj * u[i];
  const double n = norm(v);
  for (double& c : v) c /= n;
  return v;
}

struct Candidate {
  double value = -1.0;
  ProjectiveDirection center;
  bool valid = false;
};

void consider_candidate(Candidate& best, std::span<const double> center,
                        std::span<const ProjectiveDirection> dirs) {
  const double v = min_projective_distance(center, dirs);
  if (!best.valid || v > best.value) {
    best.value = v;
    UnitDirection u;
    u.coords.assign(center.begin(), center.end());
    best.center = projective_canonical(u);
    best.valid = true;
    return;
  }
  if (v == best.value) {
    UnitDirection u;
    u.coords.assign(center.begin(), center.end());
    ProjectiveDirection p = projective_canonical(u);
    if (projective_less(p, best.center)) best.center = std::move(p);
  }
}

Candidate combine_candidates(Candidate a, Candidate b) {
  if (!b.valid) return a;
  if (!a.valid) return b;
  if (b.value > a.value || (b.value == a.value && projective_less(b.center, a.center))) return b;
  return a;
}

// Exact d=3 search. Local maxima of the min-distance function over the
// antipodally doubled class set sit either at a point equidistant from
// three doubled sites (a circumcenter of a signed triple) or, because the
// doubled set is symmetric, at the common perpendicular of a class pair.
// Enumerating all of those plus the degenerate one-class case covers every
// candidate the spherical Voronoi diagram could produce.
CapReport cap_voronoi_3d(std::span<const ProjectiveDirection> dirs, int threads) {
  const std::size_t k = dirs.size();
  Candidate best;

  if (k == 1) {
    const std::vector<double> c = any_orthogonal(dirs[0].rep.coords);
    consider_candidate(best, c, dirs);
  } else {
    std::vector<std::vector<double>> candidates;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        std::vector<double> c = cross3(dirs[i].rep.coords, dirs[j].rep.coords);
        const double n = norm(c);
        if (n <= 1e-12) continue;
        for (double& x : c) x /= n;
        candidates.push_back(std::move(c));
      }
    }
    const double signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::vector<double> p2(3), p3(3), e1(3), e2(3);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (std::size_t l = j + 1; l < k; ++l) {
          for (const auto& sg : signs) {
            for (std::size_t c = 0; c < 3; ++c) {
              p2[c] = sg[0] * dirs[j].rep.coords[c];
              p3[c] = sg[1] * dirs[l].rep.coords[c];
              e1[c] = p2[c] - dirs[i].rep.coords[c];
              e2[c] = p3[c] - dirs[i].rep.coords[c];
            }
            std::vector<double> n3 = cross3(e1, e2);
            const double n = norm(n3);
            if (n <= 1e-12) continue;
            for (double& x : n3) x /= n;
            candidates.push_back(std::move(n3));
          }
        }
      }
    }

    best = block_reduce<Candidate>(
        candidates.size(), Candidate{},
        [&](std::uint64_t lo, std::uint64_t hi) {
          Candidate local;
          for (std::uint64_t t = lo; t < hi; ++t) consider_candidate(local, candidates[t], dirs);
          return local;
        },
        combine_candidates, threads);
  }

  CapReport report;
  report.center = best.center;
  report.radius = best.value;
  report.method = CapMethod::voronoi_3d;
  report.quality = CapQuality::exact;
  validate_emptiness(report, dirs);
  return report;
}

// Deterministic local sharpening: walk away from the current nearest class
// along the connecting great circle, halving the step on failure. Keeps the
// best visited center, so the result never falls below the starting value.
Candidate refine_center(const Candidate& start, std::span<const ProjectiveDirection> dirs) {
  const std::size_t d = start.center.dim();
  std::vector<double> c = start.center.rep.coords;
  double value = start.value;
  double step = 0.25;
  for (int it = 0; it < 48 && step > 1e-12; ++it) {
    // Nearest doubled site.
    double best_abs = -1.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      double s = 0.0;
      for (std::size_t t = 0; t < d; ++t) s += c[t] * dirs[i].rep.coords[t];
      if (std::abs(s) > best_abs) {
        best_abs = std::abs(s);
        arg = i;
      }
    }
    double sdot = 0.0;
    for (std::size_t t = 0; t < d; ++t) sdot += c[t] * dirs[arg].rep.coords[t];
    const double sign = sdot >= 0.0 ? 1.0 : -1.0;
    std::vector<double> w(d);
    for (std::size_t t = 0; t < d; ++t) w[t] = sign * dirs[arg].rep.coords[t];

    // Tangent away from w at c.
    double cw = 0.0;
    for (std::size_t t = 0; t < d; ++t) cw += c[t] * w[t];
    std::vector<double> tang(d);
    for (std::size_t t = 0; t < d; ++t) tang[t] = c[t] - cw * w[t];
    double tn = norm(tang);
    if (tn <= 1e-12) {
      tang = any_orthogonal(w);
      tn = 1.0;
    } else {
      for (double& x : tang) x /= tn;
    }

    const double alpha = std::acos(std::clamp(cw, -1.0, 1.0));
    const double alpha2 = std::min(alpha + step, kPi);
    std::vector<double> c2(d);
    for (std::size_t t = 0; t < d; ++t) {
      c2[t] = std::cos(alpha2) * w[t] + std::sin(alpha2) * tang[t];
    }
    const double v2 = min_projective_distance(c2, dirs);
    if (v2 > value) {
      c = std::move(c2);
      value = v2;
    } else {
      step /= 2.0;
    }
  }

  Candidate out;
  out.value = value;
  UnitDirection u;
  u.coords = std::move(c);
  out.center = projective_canonical(u);
  out.valid = true;
  return out;
}

struct PrefixMaxima {
  // Strictly increasing running maxima of the candidate stream, in index
  // order. Nested streams have nested prefix-maxima sets, which is what
  // makes the refined report monotone in the sample count.
  std::vector<Candidate> maxima;
  double running = -1.0;
};

CapReport cap_sampled(std::span<const ProjectiveDirection> dirs, std::size_t dim,
                      const CapSearchOptions& opts, int threads) {
  const SphereSequence seq(dim, opts.seed);
  const std::uint64_t k = std::max<std::uint64_t>(1, opts.sample_count);

  PrefixMaxima chain = block_reduce<PrefixMaxima>(
      k, PrefixMaxima{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        PrefixMaxima local;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const std::vector<double> c = seq.point(i);
          const double v = min_projective_distance(c, dirs);
          if (v > local.running) {
            Candidate cand;
            cand.value = v;
            UnitDirection u;
            u.coords = c;
            cand.center = projective_canonical(u);
            cand.valid = true;
            local.maxima.push_back(std::move(cand));
            local.running = v;
          }
        }
        return local;
      },
      [](PrefixMaxima acc, PrefixMaxima next) {
        for (auto& cand : next.maxima) {
          if (cand.value > acc.running) {
            acc.running = cand.value;
            acc.maxima.push_back(std::move(cand));
          }
        }
        return acc;
      },
      threads);

  Candidate best;
  for (const Candidate& cand : chain.maxima) {
    best = combine_candidates(best, refine_center(cand, dirs));
  }
  if (!best.valid) {
    // Cannot happen for k >= 1, but keep the failure loud.
    throw InternalError("cap_sampled: empty candidate chain");
  }

  CapReport report;
  report.center = best.center;
  report.radius = best.value;
  report.method = CapMethod::sampled;
  report.quality = CapQuality::lower_bound;
  report.sample_count = k;
  report.seed = opts.seed;
  validate_emptiness(report, dirs);
  return report;
}

}  // namespace

CapReport largest_empty_cap(std::span<const ProjectiveDirection> dirs, std::size_t dim,
                            const CapSearchOptions& opts, int threads) {
  if (dirs.empty()) throw EmptyInput("largest_empty_cap: no directions");
  if (dim < 2) throw DimensionMismatch("largest_empty_cap: dimension must be >= 2");
  check_dims(dirs, dim);

  if (opts.force_sampled) return cap_sampled(dirs, dim, opts, threads);
  if (dim == 2) return largest_empty_arc(dirs);
  if (dim == 3 && dirs.size() <= opts.voronoi_class_limit) return cap_voronoi_3d(dirs, threads);
  return cap_sampled(dirs, dim, opts, threads);
}

namespace {

struct CoverScan {
  std::uint64_t covered_count = 0;
  std::uint64_t first_uncovered = std::numeric_limits<std::uint64_t>::max();
};

CoverScan scan_net(std::span<const ProjectiveDirection> dirs, const std::vector<double>& net,
                   std::size_t dim, double eps, int threads) {
  const std::uint64_t n = net.size() / dim;
  // Covered means arccos(min(1, |dot|)) <= eps. The |dot| >= cos(eps)
  // comparison is the cheap equivalent away from the boundary; inside a
  // small band around cos(eps) we arbitrate with arccos itself so the
  // certificate matches the projective_distance definition bit for bit.
  const double cos_eps = std::cos(std::min(eps, kPi));
  const double accept = cos_eps + 1e-12;
  const double reject = cos_eps - 1e-12;
  return block_reduce<CoverScan>(
      n, CoverScan{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        CoverScan local;
        for (std::uint64_t i = lo; i < hi; ++i) {
          std::span<const double> p{net.data() + i * dim, dim};
          bool covered = false;
          for (const auto& d : dirs) {
            double s = 0.0;
            for (std::size_t t = 0; t < dim; ++t) s += p[t] * d.rep.coords[t];
            const double a = std::abs(s);
            if (a >= accept || (a > reject && std::acos(std::min(1.0, a)) <= eps)) {
              covered = true;
              break;
            }
          }
          if (covered) {
            ++local.covered_count;
          } else if (local.first_uncovered == std::numeric_limits<std::uint64_t>::max()) {
            local.first_uncovered = i;
          }
        }
        return local;
      },
      [](CoverScan acc, CoverScan next) {
        acc.covered_count += next.covered_count;
        acc.first_uncovered = std::min(acc.first_uncovered, next.first_uncovered);
        return acc;
      },
      threads);
}

}  // namespace

CoverageCertificate eps_cover_test(std::span<const ProjectiveDirection> dirs, std::size_t dim,
                                   Angle eps, std::optional<Angle> net_density, int threads) {
  if (dim < 2) throw DimensionMismatch("eps_cover_test: dimension must be >= 2");
  if (!(eps > 0.0)) throw BadTolerance("eps_cover_test: eps must be > 0");
  const double density = net_density.value_or(eps / 4.0);
  if (!(density > 0.0)) throw BadTolerance("eps_cover_test: net density must be > 0");
  if (density > eps / 2.0) {
    throw BadTolerance("eps_cover_test: net density must not exceed eps/2");
  }
  check_dims(dirs, dim);

  const std::vector<double> net = sphere_covering_net(dim, density);
  const std::uint64_t n = net.size() / dim;
  const CoverScan scan = scan_net(dirs, net, dim, eps, threads);

  CoverageCertificate cert;
  cert.eps = eps;
  cert.net_density = density;
  cert.net_size = n;
  cert.covered = scan.first_uncovered == std::numeric_limits<std::uint64_t>::max();
  if (!cert.covered) {
    UnitDirection u;
    u.coords.assign(net.begin() + scan.first_uncovered * dim,
                    net.begin() + (scan.first_uncovered + 1) * dim);
    cert.witness = projective_canonical(u);
  }
  return cert;
}

double coverage_fraction(std::span<const ProjectiveDirection> dirs, std::size_t dim, Angle eps,
                         int threads) {
  if (dim < 2) throw DimensionMismatch("coverage_fraction: dimension must be >= 2");
  if (!(eps > 0.0)) throw BadTolerance("coverage_fraction: eps must be > 0");
  check_dims(dirs, dim);
  const std::vector<double> net = sphere_covering_net(dim, eps / 4.0);
  const std::uint64_t n = net.size() / dim;
  const CoverScan scan = scan_net(dirs, net, dim, eps, threads);
  return static_cast<double>(scan.covered_count) / static_cast<double>(n);
}

}  // namespace dirset
