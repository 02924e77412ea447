#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "featbench/kernels.hpp"
#include "featbench/matrix.hpp"
#include "featbench/rng.hpp"

namespace featbench {

/// Solution of the least-squares SVM saddle system
///   [0  −Yᵀ          ] [b]   [0]
///   [Y   Ω + C⁻¹·I   ] [α] = [1̄],   Ω_kl = y_k y_l κ(x_k, x_l),
/// obtained by block elimination through two SPD solves against Ω + I/C.
struct LssvmSolution {
    std::vector<double> alphas;
    double bias = 0.0;
};

LssvmSolution lssvm_solve(const Matrix& k, const std::vector<double>& y, double c);

/// One machine per class, one-vs-rest.
struct LssvmBinary {
    int class_id = 0;
    std::vector<double> alphas;
    double bias = 0.0;
};

struct TrainedLssvm {
    std::vector<int> classes;
    KernelSpec spec;
    double c = 1.0;
    Matrix rows;
    std::vector<int> labels;
    std::vector<LssvmBinary> machines;
};

TrainedLssvm lssvm_fit(const Matrix& x, const std::vector<int>& labels,
                       const KernelSpec& spec, double c);

/// Argmax over the machines' real-valued decision scores, ties toward the
/// lowest class index.
std::vector<int> lssvm_predict(const TrainedLssvm& model, const Matrix& queries);

/// Per-query scores Σ α_i y_i κ(x_i, q) + b for one machine.
std::vector<double> lssvm_decision_values(const TrainedLssvm& model, std::size_t machine,
                                          const Matrix& queries);

struct LssvmGrid {
    std::vector<double> c_values = {1.0, 100.0, 10000.0};
    std::vector<double> sigma_values = {0.0001, 0.01, 1.0, 100.0};
    std::size_t folds = 5;
};

/// Stratified k-fold cross-validation over the (C, σ) grid; returns the
/// winning pair (σ is returned unchanged from the spec default for linear
/// kernels, whose grid is over C only). Ties resolve to the earliest grid
/// point in (C ascending, σ ascending) order.
std::pair<double, double> lssvm_grid_search(const Matrix& x, const std::vector<int>& labels,
                                            KernelKind kind, const LssvmGrid& grid,
                                            RngStream rng);

}  // namespace featbench
