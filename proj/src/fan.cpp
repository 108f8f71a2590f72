#include "toric/fan.hpp"

#include <random>
#include <stdexcept>

namespace toric {

Fan Fan::from_cones(std::vector<Cone> cones, Tolerance tol, bool validate) {
  tol.validate();
  if (cones.empty()) throw std::invalid_argument("Fan: at least one cone required");
  Fan fan;
  fan.dim_ = cones.front().ambient_dim();
  fan.tol_ = tol;
  for (const Cone& c : cones) {
    if (c.ambient_dim() != fan.dim_) throw std::invalid_argument("Fan: mixed ambient dimensions");
    bool dup = false;
    for (const Cone& have : fan.cones_)
      if (have.equals(c)) {
        dup = true;
        break;
      }
    if (!dup) fan.cones_.push_back(c);
  }
  // face closure
  for (size_t i = 0; i < fan.cones_.size(); ++i) {
    const FaceLattice& lat = fan.cones_[i].face_lattice();
    for (const Face& f : lat.faces) {
      Cone fc = fan.cones_[i].face_cone(f);
      bool dup = false;
      for (const Cone& have : fan.cones_)
        if (have.equals(fc)) {
          dup = true;
          break;
        }
      if (!dup) fan.cones_.push_back(std::move(fc));
    }
  }
  fan.lineality_ = fan.cones_.front().lineality_basis();
  int lin_dim = static_cast<int>(fan.lineality_.cols());
  fan.minimal_ = 0;
  for (size_t i = 0; i < fan.cones_.size(); ++i)
    if (fan.cones_[i].dim() < fan.cones_[fan.minimal_].dim()) fan.minimal_ = i;
  if (fan.cones_[fan.minimal_].dim() != lin_dim && validate)
    throw std::invalid_argument("Fan: minimal cone is not the lineality space");
  fan.lineality_ = fan.cones_[fan.minimal_].lineality_basis();
  fan.face_of_.assign(fan.cones_.size(), std::vector<bool>(fan.cones_.size(), false));
  for (size_t i = 0; i < fan.cones_.size(); ++i)
    for (size_t j = 0; j < fan.cones_.size(); ++j)
      fan.face_of_[i][j] = fan.cones_[j].contains_cone(fan.cones_[i]);
  if (validate) fan.validate();
  return fan;
}

void Fan::validate() const {
  // common lineality space
  auto projector = [](const Cone& c) -> Mat {
    if (c.lineality_basis().cols() == 0)
      return Mat::Zero(c.ambient_dim(), c.ambient_dim());
    return c.lineality_basis() * c.lineality_basis().transpose();
  };
  Mat p0 = projector(cones_.front());
  for (const Cone& c : cones_)
    if ((projector(c) - p0).norm() > 1e-6)
      throw std::invalid_argument("Fan: cones do not share a lineality space");
  // pairwise intersections are common faces
  for (size_t i = 0; i < cones_.size(); ++i)
    for (size_t j = i + 1; j < cones_.size(); ++j) {
      Cone meet = intersect(cones_[i], cones_[j]);
      if (!is_face_of(meet, cones_[i]) || !is_face_of(meet, cones_[j]))
        throw std::invalid_argument("Fan: cones intersect in a non-face");
    }
}

std::optional<size_t> Fan::minimal_containing_cone(const Vec& v) const {
  if (v.size() != dim_) throw std::invalid_argument("Fan: vector dimension mismatch");
  for (size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].contains_relint(v)) return i;
  return std::nullopt;
}

std::optional<size_t> Fan::find_cone(const Cone& c) const {
  for (size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].equals(c)) return i;
  return std::nullopt;
}

std::pair<Fan, std::vector<size_t>> Fan::star(size_t sigma) const {
  if (sigma >= cones_.size()) throw std::invalid_argument("Fan::star: unknown cone id");
  const Mat& span = cones_[sigma].span_basis();
  Fan out;
  out.dim_ = dim_;
  out.tol_ = tol_;
  std::vector<size_t> origin;
  for (size_t j = 0; j < cones_.size(); ++j) {
    if (!face_of_[sigma][j]) continue;
    std::vector<Vec> gens = cones_[j].rays();
    for (Eigen::Index k = 0; k < cones_[j].lineality_basis().cols(); ++k) {
      gens.push_back(cones_[j].lineality_basis().col(k));
      gens.push_back(-cones_[j].lineality_basis().col(k));
    }
    for (Eigen::Index k = 0; k < span.cols(); ++k) {
      gens.push_back(span.col(k));
      gens.push_back(-span.col(k));
    }
    Cone star_cone(std::move(gens), dim_, tol_);
    bool dup = false;
    for (const Cone& have : out.cones_)
      if (have.equals(star_cone)) {
        dup = true;
        break;
      }
    if (!dup) {
      out.cones_.push_back(std::move(star_cone));
      origin.push_back(j);
    }
  }
  out.lineality_ = span;
  out.minimal_ = 0;
  for (size_t i = 0; i < out.cones_.size(); ++i)
    if (out.cones_[i].dim() < out.cones_[out.minimal_].dim()) out.minimal_ = i;
  out.face_of_.assign(out.cones_.size(), std::vector<bool>(out.cones_.size(), false));
  for (size_t i = 0; i < out.cones_.size(); ++i)
    for (size_t j = 0; j < out.cones_.size(); ++j)
      out.face_of_[i][j] = out.cones_[j].contains_cone(out.cones_[i]);
  return {std::move(out), std::move(origin)};
}

std::optional<size_t> Fan::smallest_common_cone(size_t i, size_t j) const {
  std::vector<size_t> candidates;
  for (size_t k = 0; k < cones_.size(); ++k)
    if (face_of_[i][k] && face_of_[j][k]) candidates.push_back(k);
  for (size_t k : candidates) {
    bool minimal = true;
    for (size_t k2 : candidates)
      if (!face_of_[k][k2]) {
        minimal = false;
        break;
      }
    if (minimal) return k;
  }
  return std::nullopt;
}

bool Fan::is_complete() const {
  std::vector<size_t> full;
  for (size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].dim() == dim_) full.push_back(i);
  if (full.empty()) return false;
  // facet pairing: every facet of a full-dimensional cone is shared with
  // exactly one other full-dimensional cone lying on the opposite side
  for (size_t j : full) {
    const Cone& c = cones_[j];
    for (const Face& f : c.face_lattice().faces) {
      if (f.dim != dim_ - 1) continue;
      Cone fc = c.face_cone(f);
      Vec u = f.exposing;
      int partners = 0;
      for (size_t k : full) {
        if (k == j) continue;
        if (!cones_[k].contains_cone(fc)) continue;
        Vec s = cones_[k].interior_sample();
        if (u.dot(s) < -tol_.eps_geom) ++partners;
      }
      if (partners != 1) return false;
    }
  }
  // secondary certificate: randomized direction probing
  std::mt19937_64 rng(0x5eedu);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 64; ++trial) {
    Vec v(dim_);
    for (int k = 0; k < dim_; ++k) v(k) = gauss(rng);
    if (v.norm() < 1e-6) continue;
    v.normalize();
    bool covered = false;
    for (const Cone& c : cones_)
      if (c.contains(v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace toric
