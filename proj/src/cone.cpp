#include "toric/cone.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

constexpr int kMaxAmbientDim = 9;  // double-description hard limit (8 + homogenization)

bool same_direction(const Vec& a, const Vec& b, double eps) {
  return (a - b).norm() <= eps;
}

void enumerate_subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[static_cast<size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (k >= 0 && k <= n) rec(0, 0);
}

}  // namespace

bool FaceLattice::leq(size_t i, size_t j) const {
  const auto& a = faces[i].ray_set;
  const auto& b = faces[j].ray_set;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Cone::Cone(std::vector<Vec> generators, int ambient_dim, Tolerance tol)
    : dim_(ambient_dim), tol_(tol) {
  tol_.validate();
  if (dim_ < 0 || dim_ > kMaxAmbientDim)
    throw std::invalid_argument("Cone: ambient dimension out of supported range (<= 8)");
  for (const Vec& g : generators) {
    if (g.size() != dim_) throw std::invalid_argument("Cone: generator dimension mismatch");
    if (g.norm() <= tol_.eps_geom) continue;  // zero generators allowed, dropped
    Vec gn = g / g.norm();
    bool dup = false;
    for (const Vec& h : gens_)
      if (same_direction(gn, h, tol_.eps_geom)) {
        dup = true;
        break;
      }
    if (!dup) gens_.push_back(gn);
  }
  span_ = orthonormal_span(gens_, dim_, tol_.eps_geom);
  span_dim_ = static_cast<int>(span_.cols());
  compute_lineality_and_rays();
  compute_dual_rays();
  dual_lineality_ = orthogonal_complement(span_, dim_);
  std::vector<Vec> cols = rays_;
  for (Eigen::Index j = 0; j < lineality_.cols(); ++j) {
    cols.push_back(lineality_.col(j));
    cols.push_back(-lineality_.col(j));
  }
  gen_matrix_ = columns(cols, dim_);
}

Cone Cone::zero(int ambient_dim, Tolerance tol) { return Cone({}, ambient_dim, tol); }

Cone Cone::full_space(int ambient_dim, Tolerance tol) {
  std::vector<Vec> gens;
  for (int i = 0; i < ambient_dim; ++i) {
    Vec e = Vec::Zero(ambient_dim);
    e(i) = 1.0;
    gens.push_back(e);
    gens.push_back(-e);
  }
  return Cone(std::move(gens), ambient_dim, tol);
}

void Cone::compute_lineality_and_rays() {
  Mat all = columns(gens_, dim_);
  // A generator whose negative lies in the cone spans part of the lineality.
  std::vector<Vec> lin_vecs;
  std::vector<Vec> ray_cands;
  for (const Vec& g : gens_) {
    if (in_cone_of(all, -g, tol_.eps_geom))
      lin_vecs.push_back(g);
    else
      ray_cands.push_back(g);
  }
  lineality_ = orthonormal_span(lin_vecs, dim_, tol_.eps_geom);
  // Reduce the candidates modulo the lineality space and deduplicate
  // directions, so that coinciding rays cannot eliminate each other in the
  // extremality test below.
  std::vector<Vec> reduced;
  for (const Vec& g : ray_cands) {
    Vec q = g - project_onto(lineality_, g);
    if (q.norm() <= tol_.eps_geom) continue;
    q.normalize();
    bool dup = false;
    for (const Vec& v : reduced)
      if ((q - v).norm() <= 1e3 * tol_.eps_geom) dup = true;
    if (!dup) reduced.push_back(std::move(q));
  }
  // Extreme rays: representatives not generated by the remaining ones.
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Vec> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    if (!in_cone_of(columns(others, dim_), reduced[i], tol_.eps_geom))
      rays_.push_back(reduced[i]);
  }
  if (rays_.size() > 62) throw std::invalid_argument("Cone: too many extreme rays");
}

void Cone::compute_dual_rays() {
  const int r = span_dim_;
  const int ell = static_cast<int>(lineality_.cols());
  const int pick = r - 1 - ell;
  if (r == 0 || pick < 0) return;
  const int n = static_cast<int>(rays_.size());
  const double eps = tol_.eps_geom;
  std::vector<Vec> found;
  auto try_subset = [&](const std::vector<int>& subset) {
    Mat rows(ell + pick, r);
    for (int i = 0; i < ell; ++i) rows.row(i) = (lineality_.col(i).transpose() * span_);
    for (int i = 0; i < pick; ++i)
      rows.row(ell + i) = (rays_[static_cast<size_t>(subset[static_cast<size_t>(i)])].transpose() * span_);
    Mat ker = kernel_basis(rows.topRows(ell + pick), eps);
    if (ker.cols() != 1) return;
    Vec u = span_ * ker.col(0);
    // orient so pairings with the rays are nonnegative
    double strongest = 0.0;
    for (const Vec& g : rays_) {
      double p = u.dot(g);
      if (std::abs(p) > std::abs(strongest)) strongest = p;
    }
    if (std::abs(strongest) <= eps) return;
    if (strongest < 0) u = -u;
    for (const Vec& g : rays_)
      if (u.dot(g) < -eps) return;
    u.normalize();
    for (const Vec& v : found)
      if (same_direction(u, v, 1e3 * eps)) return;
    found.push_back(u);
  };
  enumerate_subsets(n, pick, try_subset);
  dual_rays_ = std::move(found);
}

Cone Cone::dual() const {
  std::vector<Vec> gens = dual_rays_;
  for (Eigen::Index j = 0; j < dual_lineality_.cols(); ++j) {
    gens.push_back(dual_lineality_.col(j));
    gens.push_back(-dual_lineality_.col(j));
  }
  return Cone(std::move(gens), dim_, tol_);
}

bool Cone::contains(const Vec& v) const {
  if (v.size() != dim_) throw std::invalid_argument("Cone::contains: dimension mismatch");
  return in_cone_of(gen_matrix_, v, tol_.eps_geom);
}

bool Cone::contains_relint(const Vec& v) const {
  if (!contains(v)) return false;
  const double scale = std::max(1.0, v.norm());
  for (const Vec& u : dual_rays_)
    if (u.dot(v) <= tol_.eps_geom * scale) return false;
  return true;
}

bool Cone::contains_cone(const Cone& other) const {
  for (const Vec& g : other.rays_)
    if (!contains(g)) return false;
  for (Eigen::Index j = 0; j < other.lineality_.cols(); ++j) {
    if (!contains(other.lineality_.col(j))) return false;
    if (!contains(-other.lineality_.col(j))) return false;
  }
  return true;
}

bool Cone::equals(const Cone& other) const {
  if (dim_ != other.dim_) return false;
  if (span_dim_ != other.span_dim_ || lineality_dim() != other.lineality_dim()) return false;
  return contains_cone(other) && other.contains_cone(*this);
}

Vec Cone::interior_sample() const {
  Vec s = Vec::Zero(dim_);
  for (const Vec& r : rays_) s += r;
  return s;
}

bool Cone::in_lineality(const Vec& v) const {
  Vec p = project_onto(lineality_, v);
  return (v - p).norm() <= tol_.eps_geom * std::max(1.0, v.norm());
}

const FaceLattice& Cone::face_lattice() const {
  if (lattice_) return *lattice_;
  auto lat = std::make_shared<FaceLattice>();
  const int n = static_cast<int>(rays_.size());
  const double eps = tol_.eps_geom;
  std::vector<uint64_t> facets;
  for (const Vec& u : dual_rays_) {
    uint64_t m = 0;
    for (int j = 0; j < n; ++j)
      if (std::abs(u.dot(rays_[static_cast<size_t>(j)])) <= eps) m |= (uint64_t{1} << j);
    facets.push_back(m);
  }
  const uint64_t full = (n == 0) ? 0 : ((uint64_t{1} << n) - 1);
  std::set<uint64_t> masks;
  masks.insert(full);
  for (uint64_t f : facets) masks.insert(f);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint64_t> cur(masks.begin(), masks.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (uint64_t f : facets) {
        uint64_t m = cur[i] & f;
        if (!masks.count(m)) {
          masks.insert(m);
          grew = true;
        }
      }
  }
  for (uint64_t m : masks) {
    Face face;
    for (int j = 0; j < n; ++j)
      if (m & (uint64_t{1} << j)) face.ray_set.push_back(j);
    Vec expo = Vec::Zero(dim_);
    for (size_t i = 0; i < facets.size(); ++i)
      if ((m & facets[i]) == m) expo += dual_rays_[i];
    face.exposing = expo;
    std::vector<Vec> span_vecs;
    for (int j : face.ray_set) span_vecs.push_back(rays_[static_cast<size_t>(j)]);
    for (Eigen::Index j = 0; j < lineality_.cols(); ++j) span_vecs.push_back(lineality_.col(j));
    face.dim = static_cast<int>(orthonormal_span(span_vecs, dim_, eps).cols());
    lat->faces.push_back(std::move(face));
  }
  std::sort(lat->faces.begin(), lat->faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.ray_set < b.ray_set;
  });
  lattice_ = lat;
  return *lattice_;
}

Cone Cone::face_cone(const Face& f) const {
  std::vector<Vec> gens;
  for (int j : f.ray_set) gens.push_back(rays_[static_cast<size_t>(j)]);
  for (Eigen::Index j = 0; j < lineality_.cols(); ++j) {
    gens.push_back(lineality_.col(j));
    gens.push_back(-lineality_.col(j));
  }
  return Cone(std::move(gens), dim_, tol_);
}

std::optional<size_t> Cone::find_face(const std::vector<int>& ray_set) const {
  const FaceLattice& lat = face_lattice();
  for (size_t i = 0; i < lat.faces.size(); ++i)
    if (lat.faces[i].ray_set == ray_set) return i;
  return std::nullopt;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: dimension mismatch");
  std::vector<Vec> gens = a.dual_rays();
  for (const Vec& u : b.dual_rays()) gens.push_back(u);
  for (Eigen::Index j = 0; j < a.dual_lineality().cols(); ++j) {
    gens.push_back(a.dual_lineality().col(j));
    gens.push_back(-a.dual_lineality().col(j));
  }
  for (Eigen::Index j = 0; j < b.dual_lineality().cols(); ++j) {
    gens.push_back(b.dual_lineality().col(j));
    gens.push_back(-b.dual_lineality().col(j));
  }
  return Cone(std::move(gens), a.ambient_dim(), a.tol()).dual();
}

bool is_face_of(const Cone& face, const Cone& c) {
  const FaceLattice& lat = c.face_lattice();
  for (const Face& f : lat.faces) {
    if (f.dim != face.dim()) continue;
    if (c.face_cone(f).equals(face)) return true;
  }
  return false;
}

double cone_distance(const Cone& a, const Cone& b) {
  auto proj = [](const Cone& c) {
    Mat p = Mat::Zero(c.ambient_dim(), c.ambient_dim());
    if (c.lineality_basis().cols() > 0)
      p = c.lineality_basis() * c.lineality_basis().transpose();
    return p;
  };
  double d = (proj(a) - proj(b)).norm();
  const auto& ra = a.rays();
  const auto& rb = b.rays();
  if (ra.empty() != rb.empty()) return d + 2.0;
  if (ra.empty()) return d;
  auto one_sided = [](const std::vector<Vec>& p, const std::vector<Vec>& q) {
    double worst = 0.0;
    for (const Vec& x : p) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec& y : q) best = std::min(best, (x - y).norm());
      worst = std::max(worst, best);
    }
    return worst;
  };
  return d + std::max(one_sided(ra, rb), one_sided(rb, ra));
}

std::pair<Vec, Vec> decompose_over_face(const Cone& sigma, const Cone& tau, const Vec& w) {
  const double eps = sigma.tol().eps_geom;
  const double scale = std::max(1.0, w.norm());
  // w must lie in the dual of tau
  for (const Vec& g : tau.rays())
    if (w.dot(g) < -eps * scale)
      throw std::invalid_argument("decompose_over_face: w not in dual of tau");
  for (Eigen::Index j = 0; j < tau.lineality_basis().cols(); ++j)
    if (std::abs(w.dot(tau.lineality_basis().col(j))) > eps * scale)
      throw std::invalid_argument("decompose_over_face: w not in dual of tau");
  if (tau.equals(sigma)) return {w, Vec::Zero(w.size())};
  // exposing vector of tau as a face of sigma
  const FaceLattice& lat = sigma.face_lattice();
  const Face* match = nullptr;
  for (const Face& f : lat.faces) {
    if (f.dim != tau.dim()) continue;
    if (sigma.face_cone(f).equals(tau)) {
      match = &f;
      break;
    }
  }
  if (!match) throw std::invalid_argument("decompose_over_face: tau is not a face of sigma");
  const Vec& u0 = match->exposing;
  double s = 0.0;
  for (const Vec& g : sigma.rays()) {
    double p = u0.dot(g);
    if (p > eps) s = std::max(s, -w.dot(g) / p);
  }
  Vec l = s * u0;
  return {w + l, l};
}

}  // namespace toric
