#include "dirset/generators.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dirset/errors.hpp"
#include "dirset/geometry.hpp"
#include "dirset/rng.hpp"
#include "dirset/scalar_functions.hpp"

namespace dirset {

namespace {

double need(const GeneratorSpec& spec, const std::string& key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw BadSpec(spec.kind + ": missing parameter '" + key + "'");
  }
  return it->second;
}

double get_or(const GeneratorSpec& spec, const std::string& key, double fallback) {
  const auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

std::size_t need_count(const GeneratorSpec& spec, const std::string& key, double min_value) {
  const double v = need(spec, key);
  if (!std::isfinite(v) || v != std::floor(v) || v < min_value) {
    throw BadSpec(spec.kind + ": parameter '" + key + "' must be an integer >= " +
                  std::to_string(static_cast<long long>(min_value)));
  }
  return static_cast<std::size_t>(v);
}

PointCloud graph2d(std::vector<double> xs, std::vector<double> ys, std::string label) {
  std::vector<double> flat;
  flat.reserve(xs.size() * 2);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    flat.push_back(xs[i]);
    flat.push_back(ys[i]);
  }
  return PointCloud(2, std::move(flat), std::move(label));
}

PointCloud gen_lipschitz_random(const GeneratorSpec& spec) {
  const double c = need(spec, "C");
  if (!(c > 0.0) || !std::isfinite(c)) throw BadSpec("lipschitz_random: 'C' must be > 0");
  const std::size_t n = need_count(spec, "n", 2);

  // x_i = i/128 and dy = C * k/8192 with integer k in [-64, 64]: for C whose
  // product with 8192 is an integer of moderate size, every increment and
  // every partial sum is an exact double, so |y_j - y_i| <= C (x_j - x_i)
  // telescopes exactly and the extracted Lipschitz constant never exceeds C.
  SplitMix64 rng(spec.seed);
  std::vector<double> xs(n), ys(n);
  double y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = std::ldexp(static_cast<double>(i), -7);
    ys[i] = y;
    const double k = static_cast<double>(rng.next_below(129)) - 64.0;
    y += c * (k * 0x1.0p-13);
  }
  return graph2d(std::move(xs), std::move(ys), "lipschitz_random");
}

PointCloud gen_function_graph(const GeneratorSpec& spec, const std::string& fname,
                              std::size_t depth_or_n, bool dyadic) {
  ScalarFunctionSpec f{fname, spec.params};
  validate_scalar_function(f);
  const auto [lo, hi] = scalar_function_domain(f);
  std::vector<double> xs, ys;
  if (dyadic) {
    const std::size_t n = (std::size_t{1} << depth_or_n) + 1;
    xs.resize(n);
    ys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = std::ldexp(static_cast<double>(i), -static_cast<int>(depth_or_n));
      xs[i] = lo + (hi - lo) * t;
      ys[i] = eval_scalar_function(f, xs[i]);
    }
  } else {
    const std::size_t n = depth_or_n;
    xs.resize(n);
    ys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
      ys[i] = eval_scalar_function(f, xs[i]);
    }
  }
  return graph2d(std::move(xs), std::move(ys), fname);
}

PointCloud gen_circle(const GeneratorSpec& spec) {
  const std::size_t n = need_count(spec, "n", 2);
  std::vector<double> flat;
  flat.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
    flat.push_back(std::cos(a));
    flat.push_back(std::sin(a));
  }
  return PointCloud(2, std::move(flat), "circle");
}

// Seeded anchor in [-1,1]^d and a seeded unit direction; points at
// parameters i/(count-1), optionally jittered along the line.
void seeded_line(std::size_t dim, std::size_t count, SplitMix64& rng, std::vector<double>& flat) {
  std::vector<double> anchor(dim), dir(dim);
  for (std::size_t c = 0; c < dim; ++c) anchor[c] = 2.0 * rng.next_double() - 1.0;
  double norm = 0.0;
  while (true) {
    norm = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      dir[c] = rng.next_normal();
      norm += dir[c] * dir[c];
    }
    norm = std::sqrt(norm);
    if (norm > 1e-6) break;
  }
  for (std::size_t c = 0; c < dim; ++c) dir[c] /= norm;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1) +
                     0.1 * rng.next_double() / static_cast<double>(count);
    for (std::size_t c = 0; c < dim; ++c) flat.push_back(anchor[c] + t * dir[c]);
  }
}

PointCloud gen_line(const GeneratorSpec& spec) {
  const std::size_t n = need_count(spec, "n", 2);
  const std::size_t dim =
      spec.params.count("dim") ? need_count(spec, "dim", 2) : std::size_t{2};
  SplitMix64 rng(spec.seed);
  std::vector<double> flat;
  flat.reserve(n * dim);
  seeded_line(dim, n, rng, flat);
  return PointCloud(dim, std::move(flat), "line");
}

PointCloud gen_collinear_plus_point(const GeneratorSpec& spec) {
  const std::size_t k = need_count(spec, "k", 2);
  const std::size_t dim =
      spec.params.count("dim") ? need_count(spec, "dim", 2) : std::size_t{2};
  SplitMix64 rng(spec.seed);
  std::vector<double> flat;
  flat.reserve((k + 1) * dim);
  seeded_line(dim, k, rng, flat);

  // Off-line point: anchor of the line plus a substantial perpendicular
  // offset, so all k+1 directions separate far beyond any dedup tolerance.
  std::vector<double> dir(dim);
  for (std::size_t c = 0; c < dim; ++c) dir[c] = flat[dim + c] - flat[c];
  double norm = 0.0;
  for (const double v : dir) norm += v * v;
  norm = std::sqrt(norm);
  for (double& v : dir) v /= norm;
  // Deterministic perpendicular via the smallest-component axis.
  std::size_t axis = 0;
  for (std::size_t c = 1; c < dim; ++c) {
    if (std::abs(dir[c]) < std::abs(dir[axis])) axis = c;
  }
  std::vector<double> perp(dim, 0.0);
  perp[axis] = 1.0;
  double proj = dir[axis];
  double pnorm = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    perp[c] -= proj * dir[c];
    pnorm += perp[c] * perp[c];
  }
  pnorm = std::sqrt(pnorm);
  for (std::size_t c = 0; c < dim; ++c) {
    flat.push_back(flat[c] + 0.75 * perp[c] / pnorm + 0.25 * dir[c]);
  }
  return PointCloud(dim, std::move(flat), "collinear_plus_point");
}

PointCloud gen_random_ball(const GeneratorSpec& spec) {
  const std::size_t n = need_count(spec, "n", 1);
  const std::size_t dim =
      spec.params.count("dim") ? need_count(spec, "dim", 2) : std::size_t{2};
  SplitMix64 rng(spec.seed);
  std::vector<double> flat;
  flat.reserve(n * dim);
  std::vector<double> g(dim);
  for (std::size_t i = 0; i < n; ++i) {
    double norm = 0.0;
    do {
      norm = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        g[c] = rng.next_normal();
        norm += g[c] * g[c];
      }
      norm = std::sqrt(norm);
    } while (!(norm > 1e-12));
    const double r = std::pow(rng.next_double(), 1.0 / static_cast<double>(dim));
    for (std::size_t c = 0; c < dim; ++c) flat.push_back(r * g[c] / norm);
  }
  return PointCloud(dim, std::move(flat), "random_ball");
}

PointCloud gen_plane_slice(const GeneratorSpec& spec) {
  const std::size_t grid = need_count(spec, "grid", 2);
  const double w1 = get_or(spec, "w1", 0.5);
  const double w2 = get_or(spec, "w2", 0.5);
  if (!std::isfinite(w1) || !std::isfinite(w2)) {
    throw BadSpec("plane_slice: 'w1'/'w2' must be finite");
  }
  std::vector<double> flat;
  flat.reserve(grid * grid * 3);
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t j = 0; j < grid; ++j) {
      const double x = static_cast<double>(i) / static_cast<double>(grid - 1);
      const double y = static_cast<double>(j) / static_cast<double>(grid - 1);
      flat.push_back(x);
      flat.push_back(y);
      flat.push_back(w1 * x + w2 * y);
    }
  }
  return PointCloud(3, std::move(flat), "plane_slice");
}

}  // namespace

PointCloud generate(const GeneratorSpec& spec) {
  if (spec.kind == "lipschitz_random") return gen_lipschitz_random(spec);
  if (spec.kind == "weierstrass") {
    const std::size_t depth = need_count(spec, "depth", 1);
    if (depth > 13) throw BadSpec("weierstrass: 'depth' must lie in [1, 13]");
    return gen_function_graph(spec, "weierstrass", depth, /*dyadic=*/true);
  }
  if (spec.kind == "absolute_value") {
    const std::size_t n = need_count(spec, "n", 2);
    return gen_function_graph(spec, "absolute_value", n, /*dyadic=*/false);
  }
  if (spec.kind == "cantor_graph") {
    const std::size_t depth = need_count(spec, "depth", 1);
    if (depth > 13) throw BadSpec("cantor_graph: 'depth' must lie in [1, 13]");
    return gen_function_graph(spec, "cantor", depth, /*dyadic=*/true);
  }
  if (spec.kind == "line") return gen_line(spec);
  if (spec.kind == "circle") return gen_circle(spec);
  if (spec.kind == "collinear_plus_point") return gen_collinear_plus_point(spec);
  if (spec.kind == "random_ball") return gen_random_ball(spec);
  if (spec.kind == "plane_slice") return gen_plane_slice(spec);
  throw UnknownGenerator("unknown generator kind '" + spec.kind + "'");
}

}  // namespace dirset
