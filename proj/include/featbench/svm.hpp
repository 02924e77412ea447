#pragma once

#include <cstddef>
#include <vector>

#include "featbench/kernels.hpp"
#include "featbench/matrix.hpp"
#include "featbench/smo.hpp"

namespace featbench {

/// One binary machine of the one-vs-one reduction. y is +1 for class_pos
/// rows and −1 for class_neg rows.
struct TrainedSvmBinary {
    int class_pos = 0;
    int class_neg = 0;
    std::vector<double> alphas;
    double bias = 0.0;
    std::vector<std::size_t> support;  // indices into rows with α > 0
    Matrix rows;
    std::vector<double> y;
    KernelSpec spec;
    double c = 1.0;
    bool converged = true;
};

/// One-vs-one multiclass SVM: c(c−1)/2 binary machines, majority vote with
/// ties broken toward the lowest class index.
struct TrainedSvmMulticlass {
    std::vector<int> classes;
    KernelSpec spec;
    double c = 1.0;
    std::vector<TrainedSvmBinary> machines;
};

TrainedSvmMulticlass svm_fit(const Matrix& x, const std::vector<int>& labels,
                             const KernelSpec& spec, double c,
                             const SmoOptions& options = {});

std::vector<int> svm_predict(const TrainedSvmMulticlass& model, const Matrix& queries);

/// Decision values Σ α_i y_i κ(x_i, q) + b for each query row.
std::vector<double> svm_decision_values(const TrainedSvmBinary& machine, const Matrix& queries);

}  // namespace featbench
