#include "featbench/nn.hpp"

#include "featbench/errors.hpp"
#include "featbench/linalg.hpp"

namespace featbench {

TrainedNN nn_fit(const Matrix& x, const std::vector<int>& labels) {
    if (x.rows() == 0) throw EmptyDataset("nn_fit: no training rows");
    if (labels.size() != x.rows())
        throw DimensionMismatch("nn_fit: label count differs from row count");
    return {x, labels};
}

std::vector<int> nn_predict(const TrainedNN& model, const Matrix& queries) {
    if (queries.cols() != model.train_x.cols())
        throw DimensionMismatch("nn_predict: query dimension differs from training data");
    const Matrix d = pairwise_sq_dists(queries, model.train_x);
    std::vector<int> out(queries.rows());
    for (std::size_t i = 0; i < d.rows(); ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < d.cols(); ++j)
            if (d(i, j) < d(i, best)) best = j;
        out[i] = model.labels[best];
    }
    return out;
}

}  // namespace featbench
