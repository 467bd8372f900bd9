#include "dirset/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "dirset/errors.hpp"

namespace dirset {

namespace {

double norm(std::span<const double> v) {
  double s = 0.0;
  for (const double c : v) s += c * c;
  return std::sqrt(s);
}

// -0.0 -> +0.0 so canonical representatives compare and hash consistently.
double scrub_zero(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

UnitDirection UnitDirection::negated() const {
  UnitDirection out;
  out.coords.reserve(coords.size());
  for (const double c : coords) out.coords.push_back(-c);
  return out;
}

UnitDirection make_unit(std::span<const double> v) {
  if (v.empty()) throw EmptyInput("make_unit: empty vector");
  const double n = norm(v);
  if (!(n > kCoincidentTol)) throw CoincidentPoints("make_unit: vector norm below 1e-12");
  UnitDirection u;
  u.coords.reserve(v.size());
  for (const double c : v) u.coords.push_back(c / n);
  return u;
}

double dot(const UnitDirection& a, const UnitDirection& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

UnitDirection pair_direction(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionMismatch("pair_direction: dimension mismatch");
  if (x.empty()) throw EmptyInput("pair_direction: empty points");
  std::vector<double> diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = y[i] - x[i];
  const double n = norm(diff);
  if (!(n > kCoincidentTol)) {
    throw CoincidentPoints("pair_direction: points coincide within 1e-12");
  }
  UnitDirection u;
  u.coords.resize(diff.size());
  for (std::size_t i = 0; i < diff.size(); ++i) u.coords[i] = diff[i] / n;
  return u;
}

ProjectiveDirection projective_canonical(const UnitDirection& u) {
  if (u.dim() == 0) throw EmptyInput("projective_canonical: empty direction");
  bool flip = false;
  for (const double c : u.coords) {
    if (std::abs(c) > kCanonicalSignTol) {
      flip = c < 0.0;
      break;
    }
  }
  ProjectiveDirection p;
  p.rep.coords.reserve(u.dim());
  for (const double c : u.coords) p.rep.coords.push_back(scrub_zero(flip ? -c : c));
  return p;
}

Angle projective_distance(const ProjectiveDirection& p, const ProjectiveDirection& q) {
  // Same value as arccos(min(1, |p . q|)) but computed through the chord of
  // the sign-aligned representatives: arccos alone loses half the mantissa
  // near zero distance, which would swamp dedup tolerances of 1e-9.
  const double d = dot(p.rep, q.rep);
  const double sign = d >= 0.0 ? 1.0 : -1.0;
  double chord2 = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double t = p.rep.coords[i] - sign * q.rep.coords[i];
    chord2 += t * t;
  }
  return 2.0 * std::asin(std::min(1.0, std::sqrt(chord2) / 2.0));
}

bool projective_less(const ProjectiveDirection& a, const ProjectiveDirection& b) {
  return std::lexicographical_compare(a.rep.coords.begin(), a.rep.coords.end(),
                                      b.rep.coords.begin(), b.rep.coords.end());
}

Rotation::Rotation(std::size_t dim, std::vector<double> row_major)
    : dim_(dim), m_(std::move(row_major)) {
  if (dim_ < 1 || m_.size() != dim_ * dim_) {
    throw DimensionMismatch("Rotation: matrix shape does not match dimension");
  }
}

Rotation Rotation::identity(std::size_t dim) {
  std::vector<double> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return Rotation(dim, std::move(m));
}

std::vector<double> Rotation::apply(std::span<const double> v) const {
  if (v.size() != dim_) throw DimensionMismatch("Rotation::apply: dimension mismatch");
  std::vector<double> out(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) s += m_[r * dim_ + c] * v[c];
    out[r] = s;
  }
  return out;
}

Rotation Rotation::transposed() const {
  std::vector<double> t(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t[c * dim_ + r] = m_[r * dim_ + c];
  return Rotation(dim_, std::move(t));
}

double Rotation::orthogonality_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) s += m_[k * dim_ + r] * m_[k * dim_ + c];
      const double target = r == c ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  }
  return worst;
}

double Rotation::determinant() const {
  std::vector<double> a = m_;
  const std::size_t n = dim_;
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (a[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      det = -det;
    }
    det *= a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return det;
}

namespace {

// Householder reflection H_v = I - 2 v v^T / (v^T v), as a dense matrix.
std::vector<double> householder(const std::vector<double>& v) {
  const std::size_t n = v.size();
  double vv = 0.0;
  for (const double c : v) vv += c * c;
  std::vector<double> h(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      h[r * n + c] = (r == c ? 1.0 : 0.0) - 2.0 * v[r] * v[c] / vv;
    }
  }
  return h;
}

std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b,
                           std::size_t n) {
  std::vector<double> out(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const double f = a[r * n + k];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) out[r * n + c] += f * b[k * n + c];
    }
  }
  return out;
}

}  // namespace

Rotation rotation_to_pole(const UnitDirection& u) {
  const std::size_t d = u.dim();
  if (d < 2) throw DimensionMismatch("rotation_to_pole: dimension must be >= 2");

  // Directions within 1e-10 of +-e_d take the exact limit rotations. The
  // postcondition only asks for R u = e_d within 1e-10 per coordinate, and
  // the exact identity keeps axis-aligned data bit-identical under
  // extraction instead of smearing it by an ulp-sized rotation.
  bool near_pole = true, near_antipole = true;
  for (std::size_t i = 0; i < d; ++i) {
    const double target = i + 1 == d ? 1.0 : 0.0;
    if (std::abs(u.coords[i] - target) > 1e-10) near_pole = false;
    if (std::abs(u.coords[i] + target) > 1e-10) near_antipole = false;
  }
  if (near_pole) return Rotation::identity(d);
  if (near_antipole) {
    Rotation flip = Rotation::identity(d);
    std::vector<double> m = flip.matrix();
    m[(d - 2) * d + (d - 2)] = -1.0;
    m[(d - 1) * d + (d - 1)] = -1.0;
    return Rotation(d, std::move(m));
  }

  // Pick the numerically larger of u +- e_d as the reflection axis. The
  // first reflection sends u to -+ e_d, the second restores determinant +1
  // while fixing the outcome at e_d. For u = e_d the product collapses to
  // the exact identity; for u = -e_d it is diag(1, ..., 1, -1, -1).
  std::vector<double> v(u.coords.begin(), u.coords.end());
  std::vector<double> first;
  std::size_t fix_axis;
  if (u.coords[d - 1] > 0.0) {
    v[d - 1] += 1.0;  // reflect u -> -e_d
    fix_axis = d - 1; // then flip the pole back: H_{e_d}
  } else {
    v[d - 1] -= 1.0;  // reflect u -> e_d
    fix_axis = d - 2; // fix the pole, flip coordinate d-1: H_{e_{d-1}}
  }
  first = householder(v);
  std::vector<double> axis(d, 0.0);
  axis[fix_axis] = 1.0;
  const std::vector<double> second = householder(axis);

  return Rotation(d, matmul(second, first, d));
}

PointCloud apply_rotation(const Rotation& r, const PointCloud& cloud) {
  if (r.dim() != cloud.dim()) throw DimensionMismatch("apply_rotation: dimension mismatch");
  std::vector<double> out;
  out.reserve(cloud.data().size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const std::vector<double> p = r.apply(cloud.point(i));
    out.insert(out.end(), p.begin(), p.end());
  }
  return PointCloud(cloud.dim(), std::move(out), cloud.label(), /*allow_duplicates=*/true);
}

Angle rp1_angle(const ProjectiveDirection& p) {
  if (p.dim() != 2) throw DimensionMismatch("rp1_angle: RP^1 chart needs dimension 2");
  double a = std::atan2(p.rep.coords[1], p.rep.coords[0]);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a -= kPi;
  return a;
}

ProjectiveDirection rp1_direction(Angle theta) {
  UnitDirection u;
  u.coords = {std::cos(theta), std::sin(theta)};
  return projective_canonical(u);
}

Angle rp1_distance(Angle a, Angle b) {
  const double d = std::abs(a - b);
  return std::min(d, kPi - d);
}

}  // namespace dirset
