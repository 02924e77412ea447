#include "featbench/linalg.hpp"

#include <cmath>
#include <string>

#include "featbench/errors.hpp"

namespace featbench {

namespace {

// Lower-triangular factor of a + jitter·I, written into l. Returns false on
// a non-positive or non-finite pivot.
bool try_factor(const Matrix& a, double jitter, Matrix& l) {
    const std::size_t n = a.rows();
    l = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double* lj = l.row_ptr(j);
        double d = a(j, j) + jitter - dot(lj, lj, j);
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i)
            l(i, j) = (a(i, j) - dot(l.row_ptr(i), lj, j)) / ljj;
    }
    return true;
}

void check_symmetric(const Matrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const double x = a(i, j);
            const double y = a(j, i);
            if (std::abs(x - y) > 1e-8 * (1.0 + std::max(std::abs(x), std::abs(y))))
                throw NotSymmetric("cholesky_solve: A(" + std::to_string(i) + "," +
                                   std::to_string(j) + ") differs from its transpose entry");
        }
}

}  // namespace

Matrix cholesky_solve(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n)
        throw DimensionMismatch("cholesky_solve: A must be square and nonempty");
    if (b.rows() != n)
        throw DimensionMismatch("cholesky_solve: B row count must match A");
    check_symmetric(a);

    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
    double base_jitter = 1e-12 * std::abs(trace) / static_cast<double>(n);
    if (base_jitter == 0.0) base_jitter = 1e-12;

    Matrix l;
    bool ok = try_factor(a, 0.0, l);
    // jitter escalation: t, 2t, 4t, 8t
    for (int attempt = 0; !ok && attempt < 4; ++attempt)
        ok = try_factor(a, base_jitter * static_cast<double>(1 << attempt), l);
    if (!ok)
        throw NotPositiveDefinite(
            "cholesky_solve: non-positive pivot after jitter escalation; "
            "the kernel/regularization combination is ill-conditioned");

    // Forward then backward substitution over all right-hand sides at once.
    const std::size_t m = b.cols();
    Matrix x = b;
    for (std::size_t i = 0; i < n; ++i) {
        double* xi = x.row_ptr(i);
        for (std::size_t j = 0; j < i; ++j) {
            const double lij = l(i, j);
            const double* xj = x.row_ptr(j);
            for (std::size_t k = 0; k < m; ++k) xi[k] -= lij * xj[k];
        }
        const double inv = 1.0 / l(i, i);
        for (std::size_t k = 0; k < m; ++k) xi[k] *= inv;
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double* xi = x.row_ptr(ii);
        for (std::size_t j = ii + 1; j < n; ++j) {
            const double lji = l(j, ii);
            const double* xj = x.row_ptr(j);
            for (std::size_t k = 0; k < m; ++k) xi[k] -= lji * xj[k];
        }
        const double inv = 1.0 / l(ii, ii);
        for (std::size_t k = 0; k < m; ++k) xi[k] *= inv;
    }
    return x;
}

Matrix pairwise_sq_dists(const Matrix& x, const Matrix& y) {
    if (x.cols() != y.cols())
        throw DimensionMismatch("pairwise_sq_dists: column counts differ");
    const std::size_t d = x.cols();
    Matrix out(x.rows(), y.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const double* xi = x.row_ptr(i);
        for (std::size_t j = 0; j < y.rows(); ++j) {
            const double* yj = y.row_ptr(j);
            double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
            std::size_t k = 0;
            for (; k + 4 <= d; k += 4) {
                const double d0 = xi[k] - yj[k];
                const double d1 = xi[k + 1] - yj[k + 1];
                const double d2 = xi[k + 2] - yj[k + 2];
                const double d3 = xi[k + 3] - yj[k + 3];
                s0 += d0 * d0;
                s1 += d1 * d1;
                s2 += d2 * d2;
                s3 += d3 * d3;
            }
            double s = (s0 + s1) + (s2 + s3);
            for (; k < d; ++k) {
                const double dk = xi[k] - yj[k];
                s += dk * dk;
            }
            out(i, j) = s;
        }
    }
    return out;
}

}  // namespace featbench
