#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dirset/point_cloud.hpp"

namespace dirset {

// Deterministic fixture clouds. Identical spec and seed reproduce the cloud
// byte for byte on any platform: all randomness comes from SplitMix64 and
// all grids are dyadic.
//
// Kinds and parameters (all params are doubles; integer-valued ones are
// validated as such):
//   lipschitz_random       C > 0, n >= 2       d=2 graph samples on the grid
//                          x_i = i/128 with increments |dy| <= C dx; for C
//                          with C*8192 integral (e.g. 0.5, 1, 2, 5) the
//                          increment lattice is exact in doubles and the
//                          pairwise bound max |slope| <= C holds exactly by
//                          telescoping
//   weierstrass            a in (0,1), b odd int >= 3, a*b > 1, depth 1..13
//                          dyadic graph samples of the truncated series
//   absolute_value         n >= 2              uniform samples of |x| on [-1, 1]
//   line                   n >= 2              collinear points, seeded anchor
//                          and direction, d = dim (default 2)
//   circle                 n >= 2              equally spaced unit-circle points
//   collinear_plus_point   k >= 2              k seeded collinear points plus
//                          one off-line point
//   random_ball            n >= 1, dim >= 2    seeded uniform samples of the
//                          unit ball
//   cantor_graph           depth 1..13         dyadic samples of the
//                          Cantor-Lebesgue staircase
//   plane_slice            grid >= 2, w1, w2   d=3 graph z = w1 x + w2 y on a
//                          grid x grid lattice over [0,1]^2
struct GeneratorSpec {
  std::string kind;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
};

// Throws UnknownGenerator for an unrecognized kind and BadSpec with a
// field-level message for invalid parameters.
PointCloud generate(const GeneratorSpec& spec);

}  // namespace dirset
