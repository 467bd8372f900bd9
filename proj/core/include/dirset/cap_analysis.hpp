#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "dirset/geometry.hpp"

namespace dirset {

enum class CapMethod { exact_gap_2d, voronoi_3d, sampled };
enum class CapQuality { exact, lower_bound };

std::string to_string(CapMethod m);
std::string to_string(CapQuality q);

// A direction-free cap in RP^{d-1}: no input class lies strictly inside the
// cap of angular radius `radius` around `center`. Every search method
// re-checks that emptiness before returning.
struct CapReport {
  ProjectiveDirection center;
  Angle radius = 0.0;
  CapMethod method = CapMethod::exact_gap_2d;
  CapQuality quality = CapQuality::exact;
  std::uint64_t sample_count = 0;  // sampled method only
  std::uint64_t seed = 0;          // sampled method only
};

struct CapSearchOptions {
  // Force the sampled method regardless of dimension.
  bool force_sampled = false;
  std::uint64_t sample_count = 100000;
  std::uint64_t seed = 0;
  // The d=3 exact search enumerates candidate triples, which is cubic in the
  // class count; above this limit the automatic mode falls back to the
  // sampled lower bound.
  std::size_t voronoi_class_limit = 160;
};

// Exact largest empty arc on RP^1: sort class angles, take the largest gap
// of the pi-periodic circle; the cap is the gap's middle half. Ties go to
// the smaller center angle.
CapReport largest_empty_arc(std::span<const ProjectiveDirection> dirs);

// Largest direction-free cap.
//   d = 2          exact (largest_empty_arc)
//   d = 3          exact: candidate centers are the perpendiculars of class
//                  pairs and the circumcenters of signed class triples (the
//                  spherical Voronoi vertices of the antipodally doubled
//                  set), evaluated exhaustively
//   d > 3, forced  sampled lower bound: nested quasirandom candidates plus a
//                  deterministic local refinement of every running best, so
//                  the report is monotone in sample_count
CapReport largest_empty_cap(std::span<const ProjectiveDirection> dirs, std::size_t dim,
                            const CapSearchOptions& opts = {}, int threads = 0);

// Certificate from a deterministic net with covering radius <= net_density.
//   covered = true   every projective point lies within eps + net_density of
//                    some input class
//   covered = false  `witness` is a net point farther than eps from every
//                    input class (so the cap of radius eps around it, and a
//                    fortiori eps - net_density, is direction-free)
struct CoverageCertificate {
  Angle eps = 0.0;
  Angle net_density = 0.0;
  std::uint64_t net_size = 0;
  bool covered = false;
  std::optional<ProjectiveDirection> witness;
};

// net_density defaults to eps/4 and must not exceed eps/2.
CoverageCertificate eps_cover_test(std::span<const ProjectiveDirection> dirs, std::size_t dim,
                                   Angle eps, std::optional<Angle> net_density = {},
                                   int threads = 0);

// Fraction of net points within eps of some input class (net density eps/4).
double coverage_fraction(std::span<const ProjectiveDirection> dirs, std::size_t dim, Angle eps,
                         int threads = 0);

}  // namespace dirset
