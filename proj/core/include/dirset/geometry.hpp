#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dirset/point_cloud.hpp"

namespace dirset {

// Angles are plain radians throughout.
using Angle = double;

// Pairs closer than this have no meaningful direction.
inline constexpr double kCoincidentTol = 1e-12;
// Leading coordinates at or below this magnitude are skipped by the
// canonical sign rule.
inline constexpr double kCanonicalSignTol = 1e-12;
// Default angular tolerance for deduplicating direction classes.
inline constexpr double kDefaultDedupTol = 1e-9;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Unit vector on S^{d-1}.
struct UnitDirection {
  std::vector<double> coords;

  std::size_t dim() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }

  // Exact coordinate-wise negation.
  UnitDirection negated() const;
};

// Antipodal class in RP^{d-1}, stored through a canonical representative:
// the first coordinate of magnitude above kCanonicalSignTol is strictly
// positive, and every zero is +0.0. With that normalization,
// projective_canonical(u) and projective_canonical(-u) are bit-identical.
struct ProjectiveDirection {
  UnitDirection rep;

  std::size_t dim() const { return rep.dim(); }
};

// Normalize a vector into a UnitDirection. Throws EmptyInput on an empty
// span and CoincidentPoints when the norm is at or below kCoincidentTol.
UnitDirection make_unit(std::span<const double> v);

double dot(const UnitDirection& a, const UnitDirection& b);

// Direction of the ray from x to y: (y - x) / |y - x|.
// pair_direction(y, x) is the exact negation of pair_direction(x, y).
// Throws CoincidentPoints when |y - x| <= kCoincidentTol.
UnitDirection pair_direction(std::span<const double> x, std::span<const double> y);

ProjectiveDirection projective_canonical(const UnitDirection& u);

// Angular distance between two lines: arccos(min(1, |p . q|)), in [0, pi/2].
Angle projective_distance(const ProjectiveDirection& p, const ProjectiveDirection& q);

// Lexicographic order on canonical representatives; total and strict on
// distinct classes.
bool projective_less(const ProjectiveDirection& a, const ProjectiveDirection& b);

// d x d rotation matrix (orthogonal, det +1), row-major storage.
class Rotation {
 public:
  Rotation(std::size_t dim, std::vector<double> row_major);
  static Rotation identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  double at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }
  const std::vector<double>& matrix() const { return m_; }

  std::vector<double> apply(std::span<const double> v) const;
  Rotation transposed() const;

  // max |R^T R - I|, for validity checks.
  double orthogonality_defect() const;
  // Determinant via LU with partial pivoting; dims here are small.
  double determinant() const;

 private:
  std::size_t dim_;
  std::vector<double> m_;
};

// Deterministic rotation taking u to the pole e_d, built from at most two
// Householder reflections so no trigonometric branch is involved. For
// u = e_d this is exactly the identity; for u = -e_d it is the diagonal
// rotation flipping the last two coordinates.
Rotation rotation_to_pole(const UnitDirection& u);

// Pointwise matrix action on a cloud.
PointCloud apply_rotation(const Rotation& r, const PointCloud& cloud);

// RP^1 chart: angle in [0, pi) of a projective class (d = 2 only).
Angle rp1_angle(const ProjectiveDirection& p);
// Inverse chart: class of the line at the given angle.
ProjectiveDirection rp1_direction(Angle theta);
// Metric on the chart: min(|a-b|, pi-|a-b|).
Angle rp1_distance(Angle a, Angle b);

}  // namespace dirset
