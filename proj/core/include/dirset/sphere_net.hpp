#pragma once

#include <cstdint>
#include <vector>

namespace dirset {

// Deterministic net on S^{dim-1} with certified covering radius <= r in the
// geodesic metric, returned as flat row-major unit vectors.
//
// Construction: uniform angles on the circle; for dim >= 3, latitude rings
// spaced pi/J apart, each carrying a recursively built net of the slice
// sphere, with the radius budget split r = r/2 (polar) + r/2 (slice). Any
// point is within pi/(2J) <= r/2 of a ring in polar angle, and within
// sin(theta_ring) * rho_ring <= r/2 along the slice, so the covering radius
// bound holds by the triangle inequality. Projective covering radius is
// never larger than the spherical one, so the same net certifies RP^{dim-1}
// coverage after folding.
//
// Throws BadTolerance when r is not positive or the net would exceed
// max_points (cost grows like r^-(dim-1)).
std::vector<double> sphere_covering_net(std::size_t dim, double r,
                                        std::uint64_t max_points = 50'000'000);

// Deterministic nested sequence of unit vectors on S^{dim-1}: an additive
// (Kronecker) recurrence with generalized-golden-ratio increments drives a
// Box-Muller map to the sphere. The first k points of the same (dim, seed)
// sequence are a prefix of the first k' > k points, which makes cap lower
// bounds monotone in the sample count. The seed only shifts the recurrence
// phase.
class SphereSequence {
 public:
  SphereSequence(std::size_t dim, std::uint64_t seed);

  std::size_t dim() const { return dim_; }
  // i-th point of the sequence; thread-safe, pure in (this, i).
  std::vector<double> point(std::uint64_t i) const;

 private:
  std::size_t dim_;
  std::uint64_t offset_;
  std::vector<double> alpha_;
};

}  // namespace dirset
