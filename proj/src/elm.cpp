#include "featbench/elm.hpp"

#include <cmath>

#include "featbench/errors.hpp"
#include "featbench/labels.hpp"
#include "featbench/linalg.hpp"

namespace featbench {

Matrix elm_hidden(const Matrix& x, const Matrix& input_weights,
                  const std::vector<double>& biases, Activation activation) {
    if (x.cols() != input_weights.rows())
        throw DimensionMismatch("elm_hidden: feature dimension differs from weight rows");
    if (biases.size() != input_weights.cols())
        throw DimensionMismatch("elm_hidden: bias count differs from neuron count");
    Matrix h = matmul(x, input_weights);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        double* row = h.row_ptr(i);
        for (std::size_t j = 0; j < h.cols(); ++j) {
            const double z = row[j] + biases[j];
            switch (activation) {
                case Activation::Sigmoid:
                    row[j] = 1.0 / (1.0 + std::exp(-z));
                    break;
            }
        }
    }
    return h;
}

Matrix ridge_solve_primal(const Matrix& h, const Matrix& t, double c) {
    if (h.rows() != t.rows())
        throw DimensionMismatch("ridge_solve_primal: H and T row counts differ");
    if (!(c > 0.0)) throw InvalidArgument("ridge_solve_primal: C must be positive");
    Matrix gram = matmul_tn(h, h);  // L×L
    add_scaled_identity(gram, 1.0 / c);
    return cholesky_solve(gram, matmul_tn(h, t));
}

Matrix ridge_solve_dual(const Matrix& h, const Matrix& t, double c) {
    if (h.rows() != t.rows())
        throw DimensionMismatch("ridge_solve_dual: H and T row counts differ");
    if (!(c > 0.0)) throw InvalidArgument("ridge_solve_dual: C must be positive");
    Matrix gram = matmul_nt(h, h);  // N×N
    add_scaled_identity(gram, 1.0 / c);
    return matmul_tn(h, cholesky_solve(gram, t));
}

TrainedElm elm_fit(const Matrix& x, const std::vector<int>& labels, std::size_t hidden_count,
                   double c, RngStream rng) {
    if (labels.size() != x.rows())
        throw DimensionMismatch("elm_fit: label count differs from row count");
    if (hidden_count == 0) throw InvalidArgument("elm_fit: hidden count must be at least 1");
    const LabelEncoding enc = LabelEncoding::from_labels(labels);
    if (enc.class_count() < 2) throw SingleClass("elm_fit: at least two classes required");

    TrainedElm model;
    model.input_weights = uniform_matrix(rng.substream(0), x.cols(), hidden_count, -1.0, 1.0);
    const Matrix b = uniform_matrix(rng.substream(1), 1, hidden_count, 0.0, 1.0);
    model.biases.assign(b.data().begin(), b.data().end());
    model.activation = Activation::Sigmoid;
    model.c = c;
    model.classes = enc.classes;

    const Matrix h = elm_hidden(x, model.input_weights, model.biases, model.activation);
    model.beta = x.rows() >= hidden_count ? ridge_solve_primal(h, enc.targets, c)
                                          : ridge_solve_dual(h, enc.targets, c);
    return model;
}

Matrix elm_scores(const TrainedElm& model, const Matrix& queries) {
    if (queries.cols() != model.input_weights.rows())
        throw DimensionMismatch("elm_scores: query dimension differs from training data");
    return matmul(elm_hidden(queries, model.input_weights, model.biases, model.activation),
                  model.beta);
}

std::vector<int> elm_predict(const TrainedElm& model, const Matrix& queries) {
    return argmax_classes(elm_scores(model, queries), model.classes);
}

}  // namespace featbench
