#include "toric/affine_variety.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace toric {

namespace {

Mat effective_columns(const PointConfig& a, const std::vector<int>& labels) {
  Mat m(a.effective_dim(), static_cast<Eigen::Index>(labels.size()));
  for (size_t j = 0; j < labels.size(); ++j)
    m.col(static_cast<Eigen::Index>(j)) = a.effective_points()[static_cast<size_t>(labels[j])];
  return m;
}

std::vector<int> all_labels(const PointConfig& a) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
  return out;
}

}  // namespace

Vec phi(const PointConfig& a, const TorusElement& t) {
  if (t.v.size() != a.effective_dim())
    throw std::invalid_argument("phi: torus element dimension mismatch");
  Vec z(static_cast<Eigen::Index>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    z(static_cast<Eigen::Index>(i)) = std::exp(-a.effective_points()[i].dot(t.v));
  return z;
}

Mat relation_basis(const PointConfig& a) {
  return kernel_basis(effective_columns(a, all_labels(a)), a.tol().eps_geom);
}

std::vector<std::vector<int>> support_faces(const PointConfig& a) {
  return cone_point_faces(a.effective_points(), a.tol());
}

bool is_member(const PointConfig& a, const Vec& z) {
  if (z.size() != static_cast<Eigen::Index>(a.size()))
    throw std::invalid_argument("is_member: coordinate count mismatch");
  const double eps = a.tol().eps_geom;
  std::vector<int> supp;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (z(i) < -eps) return false;
    if (z(i) > eps) supp.push_back(static_cast<int>(i));
  }
  if (supp.empty()) return false;  // the all-zero point is not admitted
  std::vector<std::vector<int>> faces = support_faces(a);
  if (std::find(faces.begin(), faces.end(), supp) == faces.end()) return false;
  // relations of the face, as residuals on log coordinates
  std::vector<std::string> sub_labels;
  std::vector<Vec> sub_points;
  Vec logz(static_cast<Eigen::Index>(supp.size()));
  for (size_t j = 0; j < supp.size(); ++j) {
    sub_labels.push_back(a.labels()[static_cast<size_t>(supp[j])]);
    sub_points.push_back(a.point(static_cast<size_t>(supp[j])));
    logz(static_cast<Eigen::Index>(j)) = std::log(z(supp[j]));
  }
  PointConfig sub(sub_labels, sub_points, a.affine(), a.tol());
  Mat rel = relation_basis(sub);
  double scale = std::max(1.0, logz.norm());
  return (rel.transpose() * logz).lpNorm<Eigen::Infinity>() <= eps * 1e2 * scale;
}

std::vector<int> support_face(const PointConfig& a, const Vec& z) {
  if (!is_member(a, z)) throw std::invalid_argument("support_face: not a variety point");
  std::vector<int> supp;
  for (Eigen::Index i = 0; i < z.size(); ++i)
    if (z(i) > a.tol().eps_geom) supp.push_back(static_cast<int>(i));
  return supp;
}

Vec moment(const PointConfig& a, const Vec& z) {
  if (z.size() != static_cast<Eigen::Index>(a.size()))
    throw std::invalid_argument("moment: coordinate count mismatch");
  Vec u = Vec::Zero(a.ambient_dim());
  for (size_t i = 0; i < a.size(); ++i) u += z(static_cast<Eigen::Index>(i)) * a.point(i);
  return u;
}

BirchResult birch_inverse(const PointConfig& a, const Vec& w, const Vec& u) {
  if (w.size() != static_cast<Eigen::Index>(a.size()))
    throw std::invalid_argument("birch_inverse: weight count mismatch");
  if (u.size() != a.ambient_dim())
    throw std::invalid_argument("birch_inverse: target dimension mismatch");
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (!(w(i) > 0.0)) throw std::invalid_argument("birch_inverse: weights must be positive");
  const Tolerance& tol = a.tol();
  if (!in_convex_hull(a.points(), u, tol.eps_geom))
    throw std::invalid_argument("birch_inverse: target outside conv(A)");

  // minimal face of conv(A) containing the target (faces sorted by size)
  std::vector<std::vector<int>> faces = point_set_faces(a.points(), tol);
  std::vector<int> face;
  for (const std::vector<int>& f : faces) {
    std::vector<Vec> pts;
    for (int i : f) pts.push_back(a.point(static_cast<size_t>(i)));
    if (in_convex_hull(pts, u, tol.eps_geom)) {
      face = f;
      break;
    }
  }
  if (face.empty()) throw std::logic_error("birch_inverse: face location failed");

  const int ed = a.effective_dim();
  const Eigen::Index k = static_cast<Eigen::Index>(face.size());
  Mat ae = effective_columns(a, face);
  Vec ue(ed);
  if (a.affine()) {
    ue = u;
  } else {
    ue.head(a.ambient_dim()) = u;
    ue(a.ambient_dim()) = 1.0;
  }
  Vec logw(k);
  for (Eigen::Index j = 0; j < k; ++j) logw(j) = std::log(w(face[static_cast<size_t>(j)]));

  // optimize over the span of effective differences
  std::vector<Vec> diffs;
  for (Eigen::Index j = 1; j < k; ++j) diffs.push_back(ae.col(j) - ae.col(0));
  Mat basis = orthonormal_span(diffs, ed, tol.eps_geom);
  const Eigen::Index m = basis.cols();

  auto softmax = [&](const Vec& y, Vec& p, double& value) {
    Vec s = logw - ae.transpose() * (basis * y);
    double mx = s.maxCoeff();
    p = (s.array() - mx).exp();
    double total = p.sum();
    p /= total;
    value = mx + std::log(total) + ue.dot(basis * y);
  };

  // Initial point: match the target's barycentric weights in log space, so
  // that extreme weight spreads are cancelled before Newton starts.
  Vec y = Vec::Zero(m), p(k);
  if (m > 0) {
    Vec q;
    nnls(ae, ue, q, tol.eps_geom);
    double qmax = std::max(q.maxCoeff(), 1e-300);
    Vec rhs(k);
    for (Eigen::Index j = 0; j < k; ++j)
      rhs(j) = logw(j) - std::log(std::max(q(j), 1e-12 * qmax));
    Mat fit(k, m + 1);
    fit.leftCols(m) = ae.transpose() * basis;
    fit.col(m) = Vec::Ones(k);
    Vec sol = fit.colPivHouseholderQr().solve(rhs);
    y = sol.head(m);
    if (!y.allFinite()) y.setZero();
  }
  double f = 0.0;
  softmax(y, p, f);
  double diam = std::max(a.diameter(), 1.0);
  bool converged = false;
  // Trust-region Newton.  The potential turns piecewise linear once the
  // distribution concentrates, so pure line searches either overshoot into
  // underflow plateaus or stall on them; the radius control handles both.
  double radius = 1.0;
  Vec p_new(k);
  for (int iter = 0; iter < 500 && m > 0; ++iter) {
    Vec mean = ae * p;
    Vec grad = basis.transpose() * (ue - mean);
    if (grad.norm() <= tol.eps_opt * diam * 1e-1) {
      converged = true;
      break;
    }
    Mat cov = Mat::Zero(ed, ed);
    for (Eigen::Index j = 0; j < k; ++j) {
      Vec c = ae.col(j) - mean;
      cov += p(j) * c * c.transpose();
    }
    Mat h = basis.transpose() * cov * basis;
    double hfloor = 1e-14 * std::max(h.trace() / static_cast<double>(m), grad.norm());
    bool progressed = false;
    for (int attempt = 0; attempt < 80; ++attempt) {
      // damp until the step fits the radius
      double lam = hfloor;
      Vec step;
      for (int j = 0; j < 600; ++j) {
        Eigen::LDLT<Mat> ldlt(h + lam * Mat::Identity(m, m));
        step = (ldlt.info() == Eigen::Success) ? Vec(ldlt.solve(-grad)) : Vec(-grad);
        if (step.allFinite() && step.norm() <= radius) break;
        lam = std::max(lam * 10.0, 1e-300);
      }
      if (!step.allFinite() || step.dot(grad) >= 0.0) step = -radius / grad.norm() * grad;
      double predicted = -(grad.dot(step) + 0.5 * step.dot(h * step));
      double f_new;
      softmax(y + step, p_new, f_new);
      double actual = f - f_new;
      double slack = 1e-14 * (std::abs(f) + 1.0);
      if (predicted > 0.0 && predicted <= slack && actual >= -slack) {
        // the model improvement fell below double rounding: take the step
        // and settle for the residual it leaves
        y += step;
        p = p_new;
        f = f_new;
        break;
      }
      if (predicted > 0.0 && actual >= 0.01 * predicted) {
        y += step;
        p = p_new;
        f = f_new;
        if (actual >= 0.7 * predicted)
          radius = std::min(2.0 * std::max(radius, step.norm()), 1e4 * (1.0 + y.norm()));
        else if (actual < 0.25 * predicted)
          // shrink even after a poor accepted step, or the iteration can
          // zigzag down a piecewise-linear valley at a fixed radius
          radius = std::max(0.25 * step.norm(), 1e-15 * (1.0 + y.norm()));
        progressed = step.norm() > 1e-15 * (1.0 + y.norm());
        break;
      }
      radius = 0.25 * std::min(radius, step.norm());
      if (radius < 1e-15 * (1.0 + y.norm())) break;
    }
    if (!progressed) break;
  }
  // Endgame polish: pure Newton steps accepted while the gradient norm
  // contracts.  The gradient is computed directly from the distribution, so
  // this is not limited by rounding of the potential the way the
  // trust-region acceptance test is.
  for (int iter = 0; iter < 25 && m > 0 && !converged; ++iter) {
    Vec mean = ae * p;
    Vec grad = basis.transpose() * (ue - mean);
    if (grad.norm() <= tol.eps_opt * diam * 1e-1) {
      converged = true;
      break;
    }
    Mat cov = Mat::Zero(ed, ed);
    for (Eigen::Index j = 0; j < k; ++j) {
      Vec c = ae.col(j) - mean;
      cov += p(j) * c * c.transpose();
    }
    Mat h = basis.transpose() * cov * basis;
    double hfloor = 1e-14 * std::max(h.trace() / static_cast<double>(m), grad.norm());
    Eigen::LDLT<Mat> ldlt(h + hfloor * Mat::Identity(m, m));
    if (ldlt.info() != Eigen::Success) break;
    Vec step = ldlt.solve(-grad);
    if (!step.allFinite()) break;
    double f_new;
    softmax(y + step, p_new, f_new);
    Vec grad_new = basis.transpose() * (ue - ae * p_new);
    if (grad_new.norm() >= grad.norm()) break;
    y += step;
    p = p_new;
    f = f_new;
  }
  if (m == 0) converged = true;

  BirchResult out;
  out.z = Vec::Zero(static_cast<Eigen::Index>(a.size()));
  for (Eigen::Index j = 0; j < k; ++j) out.z(face[static_cast<size_t>(j)]) = p(j);
  out.v = basis * y;
  out.face = face;
  out.residual = (moment(a, out.z) - u).norm();
  // Rounding of the potential (size |f|) limits the reachable residual to
  // about diam * sqrt(eps_machine * |f|); only report failure beyond that.
  double attainable = diam * std::sqrt(2e-14 * (std::abs(f) + 1.0));
  if (!converged && out.residual > std::max(tol.eps_opt * diam, attainable)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", out.residual);
    throw std::runtime_error(std::string("birch_inverse: Newton did not converge (residual ") +
                             buf + ")");
  }
  return out;
}

PointCloud sample_complex(const PointConfig& a, const ToricComplex& cx, int n, uint64_t seed) {
  if (cx.weights.size() != static_cast<Eigen::Index>(a.size()))
    throw std::invalid_argument("sample_complex: weight count mismatch");
  PointCloud cloud;
  const std::vector<std::vector<int>>& facets = cx.subdivision.facets;
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    const std::vector<int>& facet = facets[fi];
    std::vector<std::string> sub_labels;
    std::vector<Vec> sub_points;
    Vec sub_w(static_cast<Eigen::Index>(facet.size()));
    for (size_t j = 0; j < facet.size(); ++j) {
      sub_labels.push_back(a.labels()[static_cast<size_t>(facet[j])]);
      sub_points.push_back(a.point(static_cast<size_t>(facet[j])));
      sub_w(static_cast<Eigen::Index>(j)) = cx.weights(facet[j]);
    }
    PointConfig sub(sub_labels, sub_points, a.affine(), a.tol());
    auto push = [&](const Vec& target) {
      BirchResult b = birch_inverse(sub, sub_w, target);
      Vec z = Vec::Zero(static_cast<Eigen::Index>(a.size()));
      for (size_t j = 0; j < facet.size(); ++j)
        z(facet[j]) = b.z(static_cast<Eigen::Index>(j));
      cloud.push_back(std::move(z));
    };
    // deterministic skeleton: barycenters of every face of the facet
    for (const std::vector<int>& f : point_set_faces(sub_points, a.tol())) {
      Vec bary = Vec::Zero(a.ambient_dim());
      for (int i : f) bary += sub_points[static_cast<size_t>(i)];
      push(bary / static_cast<double>(f.size()));
    }
    // uniform samples of conv(facet) by rejection in span coordinates
    if (n > 0) {
      std::vector<Vec> diffs;
      for (size_t j = 1; j < sub_points.size(); ++j) diffs.push_back(sub_points[j] - sub_points[0]);
      Mat basis = orthonormal_span(diffs, a.ambient_dim(), a.tol().eps_geom);
      const Eigen::Index m = basis.cols();
      Vec lo = Vec::Constant(m, 1e300), hi = Vec::Constant(m, -1e300);
      for (const Vec& p : sub_points) {
        Vec c = basis.transpose() * (p - sub_points[0]);
        lo = lo.cwiseMin(c);
        hi = hi.cwiseMax(c);
      }
      std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0xda3e39cb94b95bdbull * (fi + 1));
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      int accepted = 0;
      for (int guard = 0; accepted < n && guard < 10000 * n + 10000; ++guard) {
        Vec c(m);
        for (Eigen::Index j = 0; j < m; ++j) c(j) = lo(j) + (hi(j) - lo(j)) * unif(rng);
        Vec target = sub_points[0] + basis * c;
        if (!in_convex_hull(sub_points, target, a.tol().eps_geom)) continue;
        push(target);
        ++accepted;
      }
      if (accepted < n) throw std::runtime_error("sample_complex: rejection sampling starved");
    }
  }
  return cloud;
}

}  // namespace toric
