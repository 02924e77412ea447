#pragma once

#include <vector>

#include "featbench/matrix.hpp"

namespace featbench {

/// 1-nearest-neighbor under Euclidean distance. No training beyond storing
/// the data verbatim.
struct TrainedNN {
    Matrix train_x;
    std::vector<int> labels;
};

TrainedNN nn_fit(const Matrix& x, const std::vector<int>& labels);

/// Label of the minimum-squared-distance training row per query; distance
/// ties go to the lowest training-row index.
std::vector<int> nn_predict(const TrainedNN& model, const Matrix& queries);

}  // namespace featbench
