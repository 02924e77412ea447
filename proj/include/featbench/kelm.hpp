#pragma once

#include <vector>

#include "featbench/kernels.hpp"
#include "featbench/matrix.hpp"

namespace featbench {

/// Kernelized extreme learning machine: training reduces to one SPD solve
/// coeff = (Ω + I_N/C)⁻¹ T over the training Gram matrix Ω, and prediction
/// to κ(q, anchors)·coeff. No hidden-layer size or random weights appear.
struct TrainedKelm {
    Matrix anchors;  // training rows, kernel evaluation centers
    Matrix coeff;    // N×c
    KernelSpec spec;
    double c = 1.0;
    std::vector<int> classes;
};

TrainedKelm kelm_fit(const Matrix& x, const std::vector<int>& labels, const KernelSpec& spec,
                     double c);

Matrix kelm_scores(const TrainedKelm& model, const Matrix& queries);
std::vector<int> kelm_predict(const TrainedKelm& model, const Matrix& queries);

}  // namespace featbench
