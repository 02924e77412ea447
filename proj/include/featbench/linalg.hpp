#pragma once

#include "featbench/matrix.hpp"

namespace featbench {

/// Solves A·X = B for symmetric positive-definite A via Cholesky
/// factorization. A failed pivot triggers diagonal jitter escalation
/// (1e-12·trace(A)/n, doubled up to three times) before
/// NotPositiveDefinite is raised; regularized systems are SPD in exact
/// arithmetic, so jitter only ever absorbs roundoff. Inputs are not
/// modified. Throws NotSymmetric when A is asymmetric beyond 1e-8
/// relative tolerance.
Matrix cholesky_solve(const Matrix& a, const Matrix& b);

/// Entry (i,j) = squared Euclidean distance between row i of x and row j
/// of y, computed by direct differencing: entries are nonnegative and
/// exactly zero for identical rows.
Matrix pairwise_sq_dists(const Matrix& x, const Matrix& y);

}  // namespace featbench
