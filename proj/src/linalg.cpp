#include "toric/linalg.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace toric {

Mat columns(const std::vector<Vec>& vecs, int dim) {
  Mat m(dim, static_cast<Eigen::Index>(vecs.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j) = vecs[static_cast<size_t>(j)];
  return m;
}

Mat orthonormal_span(const std::vector<Vec>& vecs, int dim, double eps) {
  if (vecs.empty()) return Mat(dim, 0);
  Mat m = columns(vecs, dim);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU);
  double scale = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > eps * std::max(1.0, scale)) ++r;
  return svd.matrixU().leftCols(r);
}

Mat kernel_basis(const Mat& a, double eps) {
  if (a.cols() == 0) return Mat(0, 0);
  if (a.rows() == 0) return Mat::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  double scale = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > eps * std::max(1.0, scale)) ++r;
  return svd.matrixV().rightCols(a.cols() - r);
}

Mat orthogonal_complement(const Mat& basis, int dim) {
  if (basis.cols() == 0) return Mat::Identity(dim, dim);
  return kernel_basis(basis.transpose(), 1e-12);
}

Vec project_onto(const Mat& basis, const Vec& v) {
  if (basis.cols() == 0) return Vec::Zero(v.size());
  return basis * (basis.transpose() * v);
}

double nnls(const Mat& a, const Vec& b, Vec& x, double eps) {
  const Eigen::Index n = a.cols();
  x = Vec::Zero(n);
  if (n == 0) return b.norm();
  std::vector<bool> passive(static_cast<size_t>(n), false);
  Vec w = a.transpose() * b;
  const double tol = eps * std::max(1.0, b.norm()) * std::max(1.0, a.norm());
  const int max_outer = 3 * static_cast<int>(n) + 30;
  for (int outer = 0; outer < max_outer; ++outer) {
    Vec resid = b - a * x;
    if (resid.norm() <= tol) break;
    w = a.transpose() * resid;
    int best = -1;
    double best_w = tol;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!passive[static_cast<size_t>(j)] && w(j) > best_w) {
        best_w = w(j);
        best = static_cast<int>(j);
      }
    if (best < 0) break;
    passive[static_cast<size_t>(best)] = true;
    // Inner loop: solve unconstrained on the passive set, clip at zero.
    for (int inner = 0; inner < max_outer; ++inner) {
      std::vector<int> idx;
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<size_t>(j)]) idx.push_back(static_cast<int>(j));
      Mat ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
      for (size_t k = 0; k < idx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
      Vec z = ap.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
      bool all_pos = true;
      for (Eigen::Index k = 0; k < z.size(); ++k)
        if (z(k) <= 0.0) all_pos = false;
      if (all_pos) {
        x.setZero();
        for (size_t k = 0; k < idx.size(); ++k) x(idx[k]) = z(static_cast<Eigen::Index>(k));
        break;
      }
      double alpha = 1.0;
      for (size_t k = 0; k < idx.size(); ++k) {
        double zk = z(static_cast<Eigen::Index>(k));
        double xk = x(idx[k]);
        if (zk <= 0.0 && xk - zk > 0.0) alpha = std::min(alpha, xk / (xk - zk));
      }
      for (size_t k = 0; k < idx.size(); ++k) {
        double zk = z(static_cast<Eigen::Index>(k));
        x(idx[k]) += alpha * (zk - x(idx[k]));
        if (x(idx[k]) <= tol) {
          x(idx[k]) = 0.0;
          passive[static_cast<size_t>(idx[k])] = false;
        }
      }
    }
  }
  for (Eigen::Index j = 0; j < n; ++j)
    if (x(j) < 0.0) x(j) = 0.0;
  return (b - a * x).norm();
}

bool in_cone_of(const Mat& a, const Vec& b, double eps) {
  if (b.norm() <= eps) return true;
  if (a.cols() == 0) return false;
  Vec x;
  double r = nnls(a, b, x, eps * 1e-3);
  return r <= eps * std::max(1.0, b.norm());
}

bool in_convex_hull(const std::vector<Vec>& points, const Vec& u, double eps) {
  if (points.empty()) return false;
  const int d = static_cast<int>(u.size());
  double scale = 1.0;
  for (const Vec& p : points) scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
  Mat a(d + 1, static_cast<Eigen::Index>(points.size()));
  for (size_t j = 0; j < points.size(); ++j) {
    a.col(static_cast<Eigen::Index>(j)).head(d) = points[j] / scale;
    a(d, static_cast<Eigen::Index>(j)) = 1.0;
  }
  Vec b(d + 1);
  b.head(d) = u / scale;
  b(d) = 1.0;
  Vec x;
  double r = nnls(a, b, x, eps * 1e-3);
  return r <= eps * std::max(1.0, b.norm()) * 10.0;
}

int numeric_rank(const Mat& a, double eps) {
  if (a.cols() == 0 || a.rows() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  double scale = svd.singularValues()(0);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > eps * std::max(1.0, scale)) ++r;
  return r;
}

}  // namespace toric
