#pragma once

#include <string>
#include <vector>

#include "toric/subdivision.hpp"

namespace toric {

// Drawing of a planar configuration with the subdivision's edges; only
// 2-dimensional configurations are supported.
std::string svg_subdivision(const PointConfig& a, const Subdivision& s);

// Log-scale distance curve of a degeneration run, with the acceptance
// threshold drawn as a horizontal line.
std::string svg_distance_curve(const std::vector<double>& schedule,
                               const std::vector<double>& distances, double threshold);

}  // namespace toric
