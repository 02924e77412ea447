#include "featbench/kernels.hpp"

#include <cmath>

#include "featbench/errors.hpp"
#include "featbench/linalg.hpp"

namespace featbench {

Matrix kernel_matrix(const KernelSpec& spec, const Matrix& x, const Matrix& y) {
    if (x.cols() != y.cols())
        throw DimensionMismatch("kernel_matrix: feature dimensions differ");
    if (spec.kind == KernelKind::Linear) return matmul_nt(x, y);
    if (!(spec.sigma > 0.0))
        throw InvalidArgument("kernel_matrix: RBF sigma must be positive");
    Matrix k = pairwise_sq_dists(x, y);
    const double inv_s2 = 1.0 / (spec.sigma * spec.sigma);
    for (double& v : k.data()) v = std::exp(-(v < 0.0 ? 0.0 : v) * inv_s2);
    return k;
}

}  // namespace featbench
