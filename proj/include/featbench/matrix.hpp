#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace featbench {

/// Dense row-major matrix of 64-bit reals. Values are immutable once a
/// matrix has been returned from a library operation; treat shared
/// instances as read-only across threads.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
    std::span<const double> row(std::size_t i) const { return {row_ptr(i), cols_}; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Dot product with a fixed four-lane accumulation order so results do not
/// depend on call site or thread count.
inline double dot(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    double s = (s0 + s1) + (s2 + s3);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

Matrix transposed(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);     // a(n×k) · b(k×m)
Matrix matmul_nt(const Matrix& a, const Matrix& b);  // a(n×k) · bᵀ, b is m×k
Matrix matmul_tn(const Matrix& a, const Matrix& b);  // aᵀ · b, a is k×n, b is k×m

/// a += s·I (a must be square).
void add_scaled_identity(Matrix& a, double s);

/// Copy of the selected rows, in the given order.
Matrix take_rows(const Matrix& m, std::span<const std::size_t> indices);

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
bool all_finite(const Matrix& m);

}  // namespace featbench
