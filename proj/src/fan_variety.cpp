#include "toric/fan_variety.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace toric {

Vec canonicalize(const Fan& f, size_t sigma, const Vec& v) {
  if (v.size() != f.ambient_dim()) throw std::invalid_argument("canonicalize: dimension mismatch");
  return v - project_onto(f.cone(sigma).span_basis(), v);
}

bool fan_points_equal(const Fan& f, const FanPoint& p, const FanPoint& q) {
  if (p.cone_id != q.cone_id) return false;
  return (canonicalize(f, p.cone_id, p.orbit_coord) - canonicalize(f, q.cone_id, q.orbit_coord))
             .norm() <= f.tol().eps_geom;
}

FanPoint distinguished_point(const Fan& f, size_t sigma) {
  if (sigma >= f.size()) throw std::invalid_argument("distinguished_point: unknown cone id");
  return {sigma, Vec::Zero(f.ambient_dim())};
}

FanPoint epsilon(const Fan& f) { return distinguished_point(f, f.minimal_cone()); }

FanPoint act(const Fan& f, const TorusElement& t, const FanPoint& p) {
  return {p.cone_id, canonicalize(f, p.cone_id, p.orbit_coord + t.v)};
}

double evaluate(const Fan& f, const FanPoint& p, const Vec& u) {
  const Cone& sigma = f.cone(p.cone_id);
  const double eps = f.tol().eps_geom;
  const double scale = std::max(1.0, u.norm());
  bool kills = true;
  for (const Vec& g : sigma.generators()) {
    double pairing = u.dot(g) / std::max(1.0, g.norm());
    if (pairing < -eps * scale) throw std::invalid_argument("evaluate: u outside the dual cone");
    if (std::abs(pairing) > eps * scale) kills = false;
  }
  return kills ? std::exp(-u.dot(p.orbit_coord)) : 0.0;
}

std::optional<FanPoint> one_param_limit(const Fan& f, const FanPoint& p, const Vec& v) {
  if (p.cone_id == f.minimal_cone()) {
    // the star of the minimal cone is the fan itself
    std::optional<size_t> hit = f.minimal_containing_cone(v);
    if (!hit) return std::nullopt;
    return FanPoint{*hit, canonicalize(f, *hit, p.orbit_coord)};
  }
  auto [star, origin] = f.star(p.cone_id);
  std::optional<size_t> hit = star.minimal_containing_cone(v);
  if (!hit) return std::nullopt;
  size_t target = origin[*hit];
  return FanPoint{target, canonicalize(f, target, p.orbit_coord)};
}

std::optional<FanPoint> ray_sequence_limit(const Fan& f, const Vec& base, const Vec& dir) {
  std::optional<size_t> tau = f.minimal_containing_cone(dir);
  if (!tau) return std::nullopt;
  return FanPoint{*tau, canonicalize(f, *tau, base)};
}

MonoidElement monoid_mul(const Fan& f, const MonoidElement& x, const MonoidElement& y) {
  if (!x || !y) return std::nullopt;
  std::optional<size_t> rho = f.smallest_common_cone(x->cone_id, y->cone_id);
  if (!rho) return std::nullopt;
  return FanPoint{*rho, canonicalize(f, *rho, x->orbit_coord + y->orbit_coord)};
}

FanPoint fan_map_apply(const Mat& psi, const Fan& f, const Fan& f2, const FanPoint& p) {
  if (psi.cols() != f.ambient_dim() || psi.rows() != f2.ambient_dim())
    throw std::invalid_argument("fan_map_apply: matrix shape mismatch");
  for (size_t i = 0; i < f.size(); ++i) {
    bool landed = false;
    for (size_t j = 0; j < f2.size(); ++j) {
      bool inside = true;
      for (const Vec& g : f.cone(i).generators())
        if (!f2.cone(j).contains(psi * g)) {
          inside = false;
          break;
        }
      if (inside) {
        landed = true;
        break;
      }
    }
    if (!landed)
      throw std::invalid_argument("fan_map_apply: cone " + std::to_string(i) +
                                  " does not map into the target fan");
  }
  Vec sample = psi * f.cone(p.cone_id).interior_sample();
  std::optional<size_t> target = f2.minimal_containing_cone(sample);
  if (!target) throw std::logic_error("fan_map_apply: image cone not found");
  return {*target, canonicalize(f2, *target, psi * p.orbit_coord)};
}

RecoverReport recover_fan(const Fan& f, int n_dirs, uint64_t seed) {
  RecoverReport report;
  FanPoint eps = epsilon(f);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::pair<std::optional<size_t>, size_t>>& groups = report.groups;
  for (int k = 0; k < n_dirs; ++k) {
    Vec v(f.ambient_dim());
    for (int i = 0; i < f.ambient_dim(); ++i) v(i) = gauss(rng);
    if (v.norm() < 1e-9) continue;
    std::optional<FanPoint> lim = one_param_limit(f, eps, v);
    std::optional<size_t> limit_cone = lim ? std::optional<size_t>(lim->cone_id) : std::nullopt;
    std::optional<size_t> direct = f.minimal_containing_cone(v);
    if (limit_cone != direct) ++report.mismatches;
    if (!limit_cone) ++report.absent;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == limit_cone; });
    if (it == groups.end())
      groups.emplace_back(limit_cone, 1);
    else
      ++it->second;
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    if (a.first.has_value() != b.first.has_value()) return b.first.has_value();
    if (!a.first) return false;
    return *a.first < *b.first;
  });
  return report;
}

namespace {

const std::vector<int>& face_of_cone(const NormalFanResult& nf, size_t cone_id) {
  for (size_t i = 0; i < nf.cone_of_face.size(); ++i)
    if (nf.cone_of_face[i] == cone_id) return nf.face_labels[i];
  throw std::invalid_argument("embed_simplex: point's cone is not a normal cone of a face");
}

}  // namespace

Vec embed_simplex(const PointConfig& a, const NormalFanResult& nf, const FanPoint& p,
                  int base_label) {
  const std::vector<int>& face = face_of_cone(nf, p.cone_id);
  if (std::find(face.begin(), face.end(), base_label) == face.end())
    throw std::invalid_argument("embed_simplex: reference label is not on the face");
  const Vec& base = a.point(static_cast<size_t>(base_label));
  Vec z = Vec::Zero(static_cast<Eigen::Index>(a.size()));
  for (int i : face)
    z(i) = std::exp(-(a.point(static_cast<size_t>(i)) - base).dot(p.orbit_coord));
  return z / z.sum();
}

Vec embed_simplex(const PointConfig& a, const NormalFanResult& nf, const FanPoint& p) {
  return embed_simplex(a, nf, p, face_of_cone(nf, p.cone_id).front());
}

}  // namespace toric
