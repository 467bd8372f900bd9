#include "dirset/sphere_net.hpp"

#include <cmath>
#include <string>

#include "dirset/errors.hpp"
#include "dirset/geometry.hpp"
#include "dirset/rng.hpp"

namespace dirset {

namespace {

void build_net(std::size_t dim, double r, std::vector<double>& out, std::uint64_t max_points) {
  if (dim == 2) {
    const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(kPi / r));
    if (out.size() / 2 + m > max_points) {
      throw BadTolerance("sphere_covering_net: net would exceed " + std::to_string(max_points) +
                         " points; loosen the density");
    }
    for (std::uint64_t t = 0; t < m; ++t) {
      const double a = 2.0 * kPi * static_cast<double>(t) / static_cast<double>(m);
      out.push_back(std::cos(a));
      out.push_back(std::sin(a));
    }
    return;
  }

  const std::uint64_t rings = static_cast<std::uint64_t>(std::ceil(kPi / r));
  for (std::uint64_t j = 0; j < rings; ++j) {
    const double theta = (static_cast<double>(j) + 0.5) * kPi / static_cast<double>(rings);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double rho = (r / 2.0) / s;
    if (rho >= kPi) {
      // One point covers the whole slice sphere.
      if (out.size() / dim + 1 > max_points) {
        throw BadTolerance("sphere_covering_net: net would exceed " +
                           std::to_string(max_points) + " points; loosen the density");
      }
      out.push_back(s);
      for (std::size_t k = 1; k + 1 < dim; ++k) out.push_back(0.0);
      out.push_back(c);
      continue;
    }
    std::vector<double> slice;
    build_net(dim - 1, rho, slice, max_points);
    const std::size_t slice_count = slice.size() / (dim - 1);
    if (out.size() / dim + slice_count > max_points) {
      throw BadTolerance("sphere_covering_net: net would exceed " + std::to_string(max_points) +
                         " points; loosen the density");
    }
    for (std::size_t p = 0; p < slice_count; ++p) {
      for (std::size_t k = 0; k + 1 < dim; ++k) out.push_back(s * slice[p * (dim - 1) + k]);
      out.push_back(c);
    }
  }
}

}  // namespace

std::vector<double> sphere_covering_net(std::size_t dim, double r, std::uint64_t max_points) {
  if (dim < 2) throw DimensionMismatch("sphere_covering_net: dimension must be >= 2");
  if (!(r > 0.0)) throw BadTolerance("sphere_covering_net: covering radius must be > 0");
  std::vector<double> out;
  build_net(dim, r, out, max_points);
  return out;
}

SphereSequence::SphereSequence(std::size_t dim, std::uint64_t seed) : dim_(dim) {
  if (dim_ < 2) throw DimensionMismatch("SphereSequence: dimension must be >= 2");
  // Keep the phase offset small so (offset + i) * alpha retains enough
  // mantissa for a meaningful fractional part.
  SplitMix64 mix(seed);
  offset_ = mix.next_u64() % (std::uint64_t{1} << 20);

  // R_m increments: alpha_j = phi^-(j+1) where phi is the positive root of
  // x^(m+1) = x + 1 (Roberts' generalized golden ratio).
  const std::size_t m = 2 * ((dim_ + 1) / 2);
  double phi = 2.0;
  for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (static_cast<double>(m) + 1.0));
  alpha_.resize(m);
  double p = phi;
  for (std::size_t j = 0; j < m; ++j) {
    alpha_[j] = 1.0 / p;
    p *= phi;
  }
}

std::vector<double> SphereSequence::point(std::uint64_t i) const {
  const std::size_t m = alpha_.size();
  std::vector<double> u(m);
  const double idx = static_cast<double>(offset_ + i + 1);
  for (std::size_t j = 0; j < m; ++j) {
    const double v = 0.5 + idx * alpha_[j];
    u[j] = v - std::floor(v);
  }
  std::vector<double> g(dim_);
  for (std::size_t j = 0; j < dim_; j += 2) {
    double u1 = u[j];
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * kPi * u[j + 1];
    g[j] = rad * std::cos(ang);
    if (j + 1 < dim_) g[j + 1] = rad * std::sin(ang);
  }
  double n = 0.0;
  for (const double c : g) n += c * c;
  n = std::sqrt(n);
  if (!(n > 1e-12)) {
    // Degenerate draw; fall back to a fixed axis.
    std::vector<double> e(dim_, 0.0);
    e[0] = 1.0;
    return e;
  }
  for (double& c : g) c /= n;
  return g;
}

}  // namespace dirset
