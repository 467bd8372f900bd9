#pragma once

#include <string>
#include <vector>

#include "dirset/cap_analysis.hpp"
#include "dirset/direction_set.hpp"

namespace dirset::svg {

// RP^1 angle ring: classes as ticks at the doubled angle (so the ring
// closes), the largest empty arc shaded. Display only.
std::string render_rp1_ring(const std::vector<ProjectiveDirection>& dirs,
                            const CapReport* highlight);

// Orthographic scatter of the doubled class representatives on S^2, with an
// optional cap boundary.
std::string render_sphere_scatter(const std::vector<ProjectiveDirection>& dirs,
                                  const CapReport* highlight);

// Slope histogram with a fixed bin count.
std::string render_slope_histogram(const std::vector<double>& slopes);

}  // namespace dirset::svg
