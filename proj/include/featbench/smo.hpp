#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "featbench/matrix.hpp"

namespace featbench {

struct SmoOptions {
    // KKT tolerance on violating pairs. 1e-3 is the usual solver default but
    // can leave the dual objective a few 1e-3 short of optimal on small
    // problems; the tighter default costs next to nothing at the problem
    // sizes seen here.
    double tol = 1e-5;
    std::size_t max_updates_per_row = 10000;  // hard cap = 10000·N pair updates
    // Invoked after every pair update with the current iterate; defaults to
    // nothing. Used by feasibility audits.
    std::function<void(const std::vector<double>&)> on_update;
};

struct SmoResult {
    std::vector<double> alphas;
    double bias = 0.0;
    bool converged = false;  // false means the iteration cap was hit
    std::size_t pair_updates = 0;
};

/// Maximal-violating-pair SMO for the SVM dual:
///   max_α Σ_i α_i − ½ Σ_{i,j} y_i y_j α_i α_j K_ij
///   s.t.  Σ_i α_i y_i = 0,  0 ≤ α_i ≤ C.
/// K must be a symmetric PSD Gram matrix and y must contain both classes
/// (±1). The bias is averaged over free support vectors (0 < α < C) and
/// falls back to the midpoint of the feasible interval when none exist.
/// On hitting the iteration cap the best iterate is returned with
/// converged = false rather than throwing.
SmoResult smo_solve(const Matrix& k, const std::vector<double>& y, double c,
                    const SmoOptions& options = {});

/// Dual objective Σα − ½ Σ y_i y_j α_i α_j K_ij of an iterate.
double smo_dual_objective(const Matrix& k, const std::vector<double>& y,
                          const std::vector<double>& alphas);

}  // namespace featbench
