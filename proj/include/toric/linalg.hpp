#pragma once

#include <Eigen/Dense>
#include <vector>

#include "toric/tolerance.hpp"

namespace toric {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Orthonormal basis (columns) of the span of the given vectors.
Mat orthonormal_span(const std::vector<Vec>& vecs, int dim, double eps);

// Orthonormal basis (columns) of the kernel of A.
Mat kernel_basis(const Mat& a, double eps);

// Orthonormal basis of the orthogonal complement of span(basis) in R^dim.
// `basis` must have orthonormal columns (or be empty with zero columns).
Mat orthogonal_complement(const Mat& basis, int dim);

// Projection of v onto the column span of an orthonormal basis.
Vec project_onto(const Mat& basis, const Vec& v);

// Nonnegative least squares: minimize |A x - b| subject to x >= 0
// (Lawson-Hanson active set). Returns the residual norm; x is resized.
double nnls(const Mat& a, const Vec& b, Vec& x, double eps);

// Is b a nonnegative combination of the columns of A?
bool in_cone_of(const Mat& a, const Vec& b, double eps);

// Is u a convex combination of the given points?
bool in_convex_hull(const std::vector<Vec>& points, const Vec& u, double eps);

// Rank of the matrix with the given columns, via SVD thresholding.
int numeric_rank(const Mat& a, double eps);

Mat columns(const std::vector<Vec>& vecs, int dim);

}  // namespace toric
