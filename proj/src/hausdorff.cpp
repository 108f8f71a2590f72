#include "toric/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

namespace toric {

double hausdorff_distance(const PointCloud& p, const PointCloud& q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("hausdorff_distance: empty cloud");
  auto one_sided = [](const PointCloud& from, const PointCloud& to) {
    double worst = 0.0;
    for (const Vec& x : from) {
      double best = 1e300;
      for (const Vec& y : to) best = std::min(best, (x - y).norm());
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(p, q), one_sided(q, p));
}

MomentGrid sample_moment_grid(const PointConfig& a, const Subdivision& s, int density,
                              uint64_t seed) {
  MomentGrid grid;
  for (size_t fi = 0; fi < s.facets.size(); ++fi) {
    const std::vector<int>& facet = s.facets[fi];
    std::vector<Vec> pts;
    for (int i : facet) pts.push_back(a.point(static_cast<size_t>(i)));
    for (const std::vector<int>& f : point_set_faces(pts, a.tol())) {
      Vec bary = Vec::Zero(a.ambient_dim());
      for (int i : f) bary += pts[static_cast<size_t>(i)];
      grid.targets.push_back(bary / static_cast<double>(f.size()));
      grid.facet_of.push_back(fi);
    }
    if (density > 0) {
      std::vector<Vec> diffs;
      for (size_t j = 1; j < pts.size(); ++j) diffs.push_back(pts[j] - pts[0]);
      Mat basis = orthonormal_span(diffs, a.ambient_dim(), a.tol().eps_geom);
      const Eigen::Index m = basis.cols();
      Vec lo = Vec::Constant(m, 1e300), hi = Vec::Constant(m, -1e300);
      for (const Vec& p : pts) {
        Vec c = basis.transpose() * (p - pts[0]);
        lo = lo.cwiseMin(c);
        hi = hi.cwiseMax(c);
      }
      std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0xda3e39cb94b95bdbull * (fi + 1));
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      int accepted = 0;
      for (int guard = 0; accepted < density && guard < 10000 * density + 10000; ++guard) {
        Vec c(m);
        for (Eigen::Index j = 0; j < m; ++j) c(j) = lo(j) + (hi(j) - lo(j)) * unif(rng);
        Vec target = pts[0] + basis * c;
        if (!in_convex_hull(pts, target, a.tol().eps_geom)) continue;
        grid.targets.push_back(std::move(target));
        grid.facet_of.push_back(fi);
        ++accepted;
      }
      if (accepted < density)
        throw std::runtime_error("sample_moment_grid: rejection sampling starved");
    }
  }
  return grid;
}

PointCloud complex_cloud_at(const PointConfig& a, const ToricComplex& cx, const MomentGrid& grid) {
  PointCloud cloud;
  const std::vector<std::vector<int>>& facets = cx.subdivision.facets;
  std::vector<std::optional<PointConfig>> subs(facets.size());
  std::vector<Vec> sub_w(facets.size());
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    std::vector<std::string> labels;
    std::vector<Vec> pts;
    Vec wv(static_cast<Eigen::Index>(facets[fi].size()));
    for (size_t j = 0; j < facets[fi].size(); ++j) {
      labels.push_back(a.labels()[static_cast<size_t>(facets[fi][j])]);
      pts.push_back(a.point(static_cast<size_t>(facets[fi][j])));
      wv(static_cast<Eigen::Index>(j)) = cx.weights(facets[fi][j]);
    }
    subs[fi].emplace(labels, pts, a.affine(), a.tol());
    sub_w[fi] = std::move(wv);
  }
  for (size_t k = 0; k < grid.targets.size(); ++k) {
    size_t fi = grid.facet_of[k];
    BirchResult b = birch_inverse(*subs[fi], sub_w[fi], grid.targets[k]);
    Vec z = Vec::Zero(static_cast<Eigen::Index>(a.size()));
    for (size_t j = 0; j < facets[fi].size(); ++j)
      z(facets[fi][j]) = b.z(static_cast<Eigen::Index>(j));
    cloud.push_back(std::move(z));
  }
  return cloud;
}

PointCloud variety_cloud_at(const PointConfig& a, const Vec& w, const MomentGrid& grid) {
  PointCloud cloud;
  for (const Vec& u : grid.targets) cloud.push_back(birch_inverse(a, w, u).z);
  return cloud;
}

double calibrate_sampling_constant(const PointConfig& a, const Vec& w, int density,
                                   uint64_t seed) {
  Subdivision trivial = regular_subdivision(a, Vec::Zero(static_cast<Eigen::Index>(a.size())));
  double c = 0.0;
  for (int d : {std::max(density / 2, 1), density}) {
    MomentGrid g1 = sample_moment_grid(a, trivial, d, seed);
    MomentGrid g2 = sample_moment_grid(a, trivial, d, seed + 0x5eedu);
    double dist = hausdorff_distance(variety_cloud_at(a, w, g1), variety_cloud_at(a, w, g2));
    c = std::max(c, dist * std::sqrt(static_cast<double>(d)));
  }
  return 3.0 * c;
}

DegenerationReport degenerate(const PointConfig& a, const Vec& w, const Vec& v,
                              const std::vector<double>& schedule, int density, uint64_t seed) {
  if (schedule.empty()) throw std::invalid_argument("degenerate: empty schedule");
  for (size_t i = 1; i < schedule.size(); ++i)
    if (!(schedule[i] > schedule[i - 1]))
      throw std::invalid_argument("degenerate: schedule must increase");
  if (density < 1) throw std::invalid_argument("degenerate: density must be at least 1");
  if (w.size() != static_cast<Eigen::Index>(a.size()) ||
      v.size() != static_cast<Eigen::Index>(a.size()))
    throw std::invalid_argument("degenerate: weight/direction count mismatch");

  DegenerationReport report;
  report.schedule = schedule;
  report.predicted = regular_subdivision(a, v);

  MomentGrid grid = sample_moment_grid(a, report.predicted, density, seed);
  PointCloud target = complex_cloud_at(a, ToricComplex{report.predicted, w}, grid);

  // Schedule entries are independent; evaluate them in parallel with each
  // entry writing its own slot, so the report does not depend on the thread
  // count.  TORIC_DEGEN_THREADS caps the pool.
  size_t n_threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TORIC_DEGEN_THREADS"))
    n_threads = std::max(1, std::atoi(env));
  n_threads = std::min(n_threads, schedule.size());
  report.distances.assign(schedule.size(), 0.0);
  std::vector<std::exception_ptr> errors(n_threads);
  auto worker = [&](size_t tid) {
    try {
      for (size_t i = tid; i < schedule.size(); i += n_threads) {
        Vec ws = (w.array().log() - schedule[i] * v.array()).exp();
        if (!ws.allFinite() || ws.minCoeff() <= 0.0)
          throw std::invalid_argument("degenerate: translated weights under/overflow");
        report.distances[i] = hausdorff_distance(variety_cloud_at(a, ws, grid), target);
      }
    } catch (...) {
      errors[tid] = std::current_exception();
    }
  };
  if (n_threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  report.sampling_constant = calibrate_sampling_constant(a, w, density, seed);
  report.threshold = sampling_threshold(report.sampling_constant, density, a.tol().eps_limit);
  report.final_distance = report.distances.back();

  report.monotone = true;
  for (size_t i = schedule.size() / 2; i + 1 < schedule.size(); ++i)
    if (report.distances[i + 1] > report.distances[i] + a.tol().eps_limit)
      report.monotone = false;

  Vec base = -w.array().log();
  report.cone_consistent = secondary_ray_limit(a, base, v).cone.same_as(report.predicted);
  report.verdict =
      report.monotone && report.cone_consistent && report.final_distance < report.threshold;
  return report;
}

bool orbit_match(const PointConfig& a, const Vec& v, const Vec& w) {
  const int density = 60;
  const uint64_t seed = 0xacceded5u;
  Subdivision s = regular_subdivision(a, v);
  Mat span = secondary_cone_span(a, s);
  Mat transverse = orthogonal_complement(span, static_cast<int>(a.size()));

  double c = calibrate_sampling_constant(a, w, density, seed);
  double theta = sampling_threshold(c, density, a.tol().eps_limit);
  double step = 10.0 * std::max(theta, 1e-3);

  MomentGrid grid = sample_moment_grid(a, s, density, seed);
  PointCloud base = complex_cloud_at(a, ToricComplex{s, w}, grid);
  for (Eigen::Index k = 0; k < span.cols(); ++k) {
    Vec ws = (w.array().log() - step * span.col(k).array()).exp();
    PointCloud moved = complex_cloud_at(a, ToricComplex{s, ws}, grid);
    if (hausdorff_distance(base, moved) > theta) return false;
  }
  for (Eigen::Index k = 0; k < transverse.cols(); ++k) {
    Vec ws = (w.array().log() - step * transverse.col(k).array()).exp();
    PointCloud moved = complex_cloud_at(a, ToricComplex{s, ws}, grid);
    if (hausdorff_distance(base, moved) <= theta) return false;
  }
  return true;
}

}  // namespace toric
