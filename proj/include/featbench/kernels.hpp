#pragma once

#include "featbench/matrix.hpp"

namespace featbench {

enum class KernelKind { Linear, Rbf };

/// RBF width follows the convention κ(x, y) = exp(−‖x−y‖²/σ²): the
/// denominator is σ², not 2σ² and not a γ factor. Quoted σ values must be
/// interpreted accordingly; toolbox conventions differ.
struct KernelSpec {
    KernelKind kind = KernelKind::Rbf;
    double sigma = 1.0;  // ignored for Linear

    static KernelSpec linear() { return {KernelKind::Linear, 1.0}; }
    static KernelSpec rbf(double sigma) { return {KernelKind::Rbf, sigma}; }
};

/// Gram matrix of κ over rows of x and y: entry (i,j) = κ(x_i, y_j).
/// Linear: x_iᵀy_j. Rbf: exp(−‖x_i−y_j‖²/σ²) with tiny negative distances
/// clamped to zero so entries stay in (0, 1].
Matrix kernel_matrix(const KernelSpec& spec, const Matrix& x, const Matrix& y);

}  // namespace featbench
