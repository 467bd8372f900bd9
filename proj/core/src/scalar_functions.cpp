#include "dirset/scalar_functions.hpp"

#include <cmath>
#include <string>

#include "dirset/errors.hpp"
#include "dirset/geometry.hpp"

namespace dirset {

namespace {

double param(const ScalarFunctionSpec& spec, const std::string& key, double fallback,
             bool required = false) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    if (required) throw BadSpec(spec.name + ": missing parameter '" + key + "'");
    return fallback;
  }
  return it->second;
}

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

void validate_weierstrass(const ScalarFunctionSpec& spec) {
  const double a = param(spec, "a", 0.5);
  const double b = param(spec, "b", 3.0);
  if (!(a > 0.0 && a < 1.0)) throw BadSpec("weierstrass: parameter 'a' must lie in (0, 1)");
  if (!is_integer(b) || b < 3.0 || std::fmod(b, 2.0) != 1.0) {
    throw BadSpec("weierstrass: parameter 'b' must be an odd integer >= 3");
  }
  if (!(a * b > 1.0)) throw BadSpec("weierstrass: parameters must satisfy a*b > 1");
}

double eval_weierstrass(double a, double b, double x) {
  const int n_terms = weierstrass_truncation(a);
  double acc = 0.0;
  double amp = 1.0;
  double freq = kPi;
  for (int n = 0; n <= n_terms; ++n) {
    acc += amp * std::cos(freq * x);
    amp *= a;
    freq *= b;
  }
  return acc;
}

// Cantor-Lebesgue staircase via ternary digits: binary digit t/2 for each
// leading 0-or-2 ternary digit, then 1 at the first digit equal to 1.
double eval_cantor(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double y = 0.0;
  double bit = 0.5;
  for (int it = 0; it < 64; ++it) {
    x *= 3.0;
    int digit = static_cast<int>(std::floor(x));
    if (digit > 2) digit = 2;
    x -= digit;
    if (digit == 1) {
      y += bit;
      break;
    }
    if (digit == 2) y += bit;
    bit *= 0.5;
    if (bit == 0.0) break;
  }
  return y;
}

}  // namespace

int weierstrass_truncation(double a) {
  return static_cast<int>(std::ceil(std::log(1e-12 * (1.0 - a)) / std::log(a)));
}

void validate_scalar_function(const ScalarFunctionSpec& spec) {
  if (spec.name == "line") {
    const double slope = param(spec, "slope", 1.0);
    if (!std::isfinite(slope)) throw BadSpec("line: parameter 'slope' must be finite");
    return;
  }
  if (spec.name == "absolute_value" || spec.name == "cantor") return;
  if (spec.name == "weierstrass") {
    validate_weierstrass(spec);
    return;
  }
  throw UnknownGenerator("unknown function '" + spec.name + "'");
}

double eval_scalar_function(const ScalarFunctionSpec& spec, double x) {
  if (spec.name == "line") return param(spec, "slope", 1.0) * x;
  if (spec.name == "absolute_value") return std::abs(x);
  if (spec.name == "weierstrass") {
    return eval_weierstrass(param(spec, "a", 0.5), param(spec, "b", 3.0), x);
  }
  if (spec.name == "cantor") return eval_cantor(x);
  throw UnknownGenerator("unknown function '" + spec.name + "'");
}

std::pair<double, double> scalar_function_domain(const ScalarFunctionSpec& spec) {
  if (spec.name == "absolute_value") return {-1.0, 1.0};
  if (spec.name == "line" || spec.name == "weierstrass" || spec.name == "cantor") {
    return {0.0, 1.0};
  }
  throw UnknownGenerator("unknown function '" + spec.name + "'");
}

}  // namespace dirset
