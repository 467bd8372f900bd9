#pragma once

#include <map>
#include <string>
#include <utility>

namespace dirset {

// One-dimensional sample-function families used by the refinement study and
// the graph-cloud generators. Each family has a fixed domain so dyadic grids
// nest exactly across depths.
//
//   line            f(x) = slope * x            on [0, 1]   (param: slope)
//   absolute_value  f(x) = |x|                  on [-1, 1]
//   weierstrass     sum a^n cos(b^n pi x)       on [0, 1]   (params: a, b)
//   cantor          Cantor-Lebesgue staircase   on [0, 1]
//
// The Weierstrass series is truncated at N = ceil(log(1e-12 * (1 - a)) /
// log(a)) terms so the dropped tail is below 1e-12; parameters must satisfy
// 0 < a < 1, b an odd integer >= 3, and a*b > 1 (enough for the unbounded
// secant behavior of interest here, weaker than the classical
// nowhere-differentiability condition).
struct ScalarFunctionSpec {
  std::string name;
  std::map<std::string, double> params;
};

// Throws UnknownGenerator for an unrecognized name, BadSpec for invalid
// parameters.
void validate_scalar_function(const ScalarFunctionSpec& spec);
double eval_scalar_function(const ScalarFunctionSpec& spec, double x);
std::pair<double, double> scalar_function_domain(const ScalarFunctionSpec& spec);

// Truncation index for the Weierstrass partial sum at amplitude ratio a.
int weierstrass_truncation(double a);

}  // namespace dirset
