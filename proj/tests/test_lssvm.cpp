#include <cmath>
#include <numeric>

#include "doctest.h"
#include "featbench/errors.hpp"
#include "featbench/lssvm.hpp"
#include "featbench/results.hpp"
#include "featbench/rng.hpp"
#include "oracles.hpp"

using namespace featbench;

namespace {

// Residual of the full (N+1)×(N+1) saddle system the solution claims to
// satisfy: first row −Yᵀα = 0, then Y·b + (Ω + I/C)·α = 1̄.
double saddle_residual(const Matrix& k, const std::vector<double>& y, double c,
                       const LssvmSolution& sol) {
    const std::size_t n = y.size();
    double worst = std::abs(
        -std::inner_product(y.begin(), y.end(), sol.alphas.begin(), 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        double row = y[i] * sol.bias;
        for (std::size_t j = 0; j < n; ++j)
            row += (y[i] * y[j] * k(i, j) + (i == j ? 1.0 / c : 0.0)) * sol.alphas[j];
        worst = std::max(worst, std::abs(row - 1.0));
    }
    return worst;
}

}  // namespace

TEST_CASE("lssvm symmetric two-point problem has zero bias") {
    const Matrix x = Matrix::from_rows({{-1.0}, {1.0}});
    const Matrix k = kernel_matrix(KernelSpec::linear(), x, x);
    const LssvmSolution sol = lssvm_solve(k, {-1.0, 1.0}, 10.0);
    CHECK(std::abs(sol.bias) < 1e-12);
    CHECK(saddle_residual(k, {-1.0, 1.0}, 10.0, sol) < 1e-8);
}

TEST_CASE("lssvm linear-system residual stays below 1e-8") {
    for (std::uint64_t trial = 0; trial < 8; ++trial) {
        RngStream rng(600 + trial, 0);
        const std::size_t n = 5 + rng.next_index(30);
        const Matrix x = uniform_matrix(rng.substream(0), n, 4, -2.0, 2.0);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = rng.next_double() < 0.5 ? -1.0 : 1.0;
        y[0] = 1.0;
        y[1] = -1.0;
        const double c = std::pow(10.0, rng.next_uniform(-1.0, 3.0));
        const Matrix k = kernel_matrix(KernelSpec::rbf(1.5), x, x);
        const LssvmSolution sol = lssvm_solve(k, y, c);
        CHECK(saddle_residual(k, y, c, sol) < 1e-8);

        double eq = 0.0;
        for (std::size_t i = 0; i < n; ++i) eq += sol.alphas[i] * y[i];
        CHECK(std::abs(eq) < 1e-8);
    }
}

TEST_CASE("lssvm KKT conditions recomputed from model outputs") {
    RngStream rng(61, 0);
    const std::size_t n = 20;
    const Matrix x = uniform_matrix(rng.substream(0), n, 3, -2.0, 2.0);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = i < n / 2 ? 1.0 : -1.0;
    const double c = 10.0;
    const Matrix k = kernel_matrix(KernelSpec::rbf(1.0), x, x);
    const LssvmSolution sol = lssvm_solve(k, y, c);

    // alpha_i = C·xi_i with xi recomputed from raw predictions.
    for (std::size_t i = 0; i < n; ++i) {
        double f = sol.bias;
        for (std::size_t j = 0; j < n; ++j) f += sol.alphas[j] * y[j] * k(i, j);
        const double xi = 1.0 - y[i] * f;
        CHECK(std::abs(sol.alphas[i] - c * xi) < 1e-6);
    }
}

TEST_CASE("lssvm multiclass fit and predict on separable blobs") {
    const Matrix centers = Matrix::from_rows({{0.0, 0.0}, {15.0, 0.0}, {0.0, 15.0}});
    auto [x, y] = oracles::make_blobs(centers, 10, 1.0, RngStream(62, 0));
    const TrainedLssvm model = lssvm_fit(x, y, KernelSpec::rbf(4.0), 100.0);
    CHECK(model.machines.size() == 3);
    CHECK(lssvm_predict(model, x) == y);

    // binary argmax agrees with the sign of the positive machine's score
    std::vector<std::size_t> two;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] <= 2) two.push_back(i);
    std::vector<int> y2;
    for (std::size_t i : two) y2.push_back(y[i]);
    const TrainedLssvm bin = lssvm_fit(take_rows(x, two), y2, KernelSpec::rbf(4.0), 100.0);
    const Matrix queries = uniform_matrix(RngStream(62, 1), 20, 2, -2.0, 17.0);
    const std::vector<double> f = lssvm_decision_values(bin, 0, queries);
    const std::vector<int> pred = lssvm_predict(bin, queries);
    for (std::size_t i = 0; i < pred.size(); ++i)
        CHECK(pred[i] == (f[i] > 0.0 ? 1 : 2));
}

TEST_CASE("lssvm prediction is deterministic for duplicate queries") {
    auto [x, y] = oracles::make_blobs(Matrix::from_rows({{0.0, 0.0}, {10.0, 10.0}}), 6, 1.0,
                                      RngStream(63, 0));
    const TrainedLssvm model = lssvm_fit(x, y, KernelSpec::rbf(3.0), 50.0);
    const Matrix q = Matrix::from_rows({{4.0, 6.0}, {4.0, 6.0}});
    const std::vector<int> pred = lssvm_predict(model, q);
    CHECK(pred[0] == pred[1]);
}

TEST_CASE("lssvm error paths") {
    const Matrix k = Matrix::identity(3);
    CHECK_THROWS_AS(lssvm_solve(k, {1.0, 1.0, 1.0}, 1.0), SingleClass);
    CHECK_THROWS_AS(lssvm_solve(k, {1.0, -1.0, 1.0}, -1.0), InvalidArgument);
    const Matrix x(4, 2, 0.5);
    CHECK_THROWS_AS(lssvm_fit(x, {1, 1, 1, 1}, KernelSpec::rbf(1.0), 1.0), SingleClass);
    auto [xb, yb] = oracles::make_blobs(Matrix::from_rows({{0.0}, {8.0}}), 4, 1.0,
                                        RngStream(64, 0));
    const TrainedLssvm model = lssvm_fit(xb, yb, KernelSpec::rbf(2.0), 10.0);
    CHECK_THROWS_AS(lssvm_predict(model, Matrix(2, 3, 0.0)), DimensionMismatch);
}

TEST_CASE("lssvm grid search picks a sane width on blob data") {
    const Matrix centers = Matrix::from_rows({{0.0, 0.0}, {12.0, 0.0}, {0.0, 12.0}});
    auto [x, y] = oracles::make_blobs(centers, 10, 1.0, RngStream(65, 0));
    LssvmGrid grid;
    grid.sigma_values = {0.01, 1.0, 5.0, 100.0};
    const auto [c, sigma] = lssvm_grid_search(x, y, KernelKind::Rbf, grid, RngStream(65, 1));
    // With blobs this far apart, a vanishing width memorizes nothing and a
    // huge one flattens the kernel; the CV pick must classify well.
    const TrainedLssvm model = lssvm_fit(x, y, KernelSpec::rbf(sigma), c);
    auto [tx, ty] = oracles::make_blobs(centers, 8, 1.0, RngStream(65, 2));
    CHECK(accuracy(lssvm_predict(model, tx), ty) >= 0.95);
}
