#pragma once

#include "toric/secondary_fan.hpp"

namespace toric {

// Two-sided max-min Euclidean distance between finite clouds.
double hausdorff_distance(const PointCloud& p, const PointCloud& q);

// A fixed set of moment targets in conv(A), grouped by subdivision facet:
// barycenters of all faces of each facet plus `density` uniform draws.
struct MomentGrid {
  std::vector<Vec> targets;
  std::vector<size_t> facet_of;
};

MomentGrid sample_moment_grid(const PointConfig& a, const Subdivision& s, int density,
                              uint64_t seed);

// The complex Z(S,w) sampled at the grid: each target goes through the
// Birch inverse of its own facet subconfiguration.
PointCloud complex_cloud_at(const PointConfig& a, const ToricComplex& cx, const MomentGrid& grid);

// The translate w.Z_A sampled at the grid through the full configuration.
PointCloud variety_cloud_at(const PointConfig& a, const Vec& w, const MomentGrid& grid);

// Sampling-noise scale: Hausdorff distance between reseeded samples of the
// same translate, measured at two densities, worst case rescaled by
// sqrt(density) and padded.
double calibrate_sampling_constant(const PointConfig& a, const Vec& w, int density,
                                   uint64_t seed);

inline double sampling_threshold(double c, int density, double eps_limit) {
  return c / std::sqrt(static_cast<double>(density)) + eps_limit;
}

struct DegenerationReport {
  std::vector<double> schedule;
  std::vector<double> distances;
  Subdivision predicted;
  double threshold = 0.0;
  double sampling_constant = 0.0;
  double final_distance = 0.0;
  bool monotone = false;         // nonincreasing over the tail, up to eps_limit
  bool cone_consistent = false;  // secondary ray limit lands in the cone of S(v)
  bool verdict = false;
};

// The main experiment: w_s = w.exp(-s v) translates of Z_A against the
// complex Z(S(v), w), at matched moment targets.
DegenerationReport degenerate(const PointConfig& a, const Vec& w, const Vec& v,
                              const std::vector<double>& schedule, int density, uint64_t seed);

// Stabilizer check: weight perturbations inside the span of S(v)'s
// secondary cone leave the sampled complex within the sampling threshold;
// transverse perturbations of the same size move it beyond.
bool orbit_match(const PointConfig& a, const Vec& v, const Vec& w);

}  // namespace toric
