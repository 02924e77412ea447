#include "featbench/kelm.hpp"

#include "featbench/errors.hpp"
#include "featbench/labels.hpp"
#include "featbench/linalg.hpp"

namespace featbench {

TrainedKelm kelm_fit(const Matrix& x, const std::vector<int>& labels, const KernelSpec& spec,
                     double c) {
    if (labels.size() != x.rows())
        throw DimensionMismatch("kelm_fit: label count differs from row count");
    if (!(c > 0.0)) throw InvalidArgument("kelm_fit: C must be positive");
    const LabelEncoding enc = LabelEncoding::from_labels(labels);
    if (enc.class_count() < 2) throw SingleClass("kelm_fit: at least two classes required");

    Matrix omega = kernel_matrix(spec, x, x);
    add_scaled_identity(omega, 1.0 / c);
    return {x, cholesky_solve(omega, enc.targets), spec, c, enc.classes};
}

Matrix kelm_scores(const TrainedKelm& model, const Matrix& queries) {
    if (queries.cols() != model.anchors.cols())
        throw DimensionMismatch("kelm_scores: query dimension differs from training data");
    return matmul(kernel_matrix(model.spec, queries, model.anchors), model.coeff);
}

std::vector<int> kelm_predict(const TrainedKelm& model, const Matrix& queries) {
    return argmax_classes(kelm_scores(model, queries), model.classes);
}

}  // namespace featbench
