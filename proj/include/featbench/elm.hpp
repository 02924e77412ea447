#pragma once

#include <cstddef>
#include <vector>

#include "featbench/matrix.hpp"
#include "featbench/rng.hpp"

namespace featbench {

enum class Activation { Sigmoid };

/// Hidden-layer output matrix: entry (i,j) = h(w_jᵀx_i + b_j) with W read
/// column-wise (one neuron per column).
Matrix elm_hidden(const Matrix& x, const Matrix& input_weights,
                  const std::vector<double>& biases, Activation activation);

/// Regularized least-squares output weights, feature-space route:
/// β = (HᵀH + I_L/C)⁻¹ HᵀT. Preferred when N ≥ L.
Matrix ridge_solve_primal(const Matrix& h, const Matrix& t, double c);

/// Same solution through the sample-space route:
/// β = Hᵀ (HHᵀ + I_N/C)⁻¹ T. Preferred when N < L.
Matrix ridge_solve_dual(const Matrix& h, const Matrix& t, double c);

struct TrainedElm {
    Matrix input_weights;        // d×L
    std::vector<double> biases;  // L
    Matrix beta;                 // L×c
    Activation activation = Activation::Sigmoid;
    double c = 1.0;
    std::vector<int> classes;
};

/// Draws W uniform in [−1,1] and B uniform in [0,1) from the given stream,
/// then solves for β against the ±1 one-hot targets; the primal route is
/// used when N ≥ L, the dual route otherwise. Deterministic for a fixed
/// (seed, stream_id).
TrainedElm elm_fit(const Matrix& x, const std::vector<int>& labels, std::size_t hidden_count,
                   double c, RngStream rng);

Matrix elm_scores(const TrainedElm& model, const Matrix& queries);
std::vector<int> elm_predict(const TrainedElm& model, const Matrix& queries);

}  // namespace featbench
