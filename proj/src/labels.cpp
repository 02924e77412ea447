#include "featbench/labels.hpp"

#include <algorithm>
#include <string>

#include "featbench/errors.hpp"

namespace featbench {

std::vector<int> distinct_classes(const std::vector<int>& labels) {
    std::vector<int> classes = labels;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

LabelEncoding LabelEncoding::from_labels(const std::vector<int>& labels) {
    if (labels.empty()) throw EmptyDataset("LabelEncoding: no labels");
    LabelEncoding enc;
    enc.classes = distinct_classes(labels);
    enc.targets = Matrix(labels.size(), enc.classes.size(), -1.0);
    for (std::size_t i = 0; i < labels.size(); ++i)
        enc.targets(i, enc.index_of(labels[i])) = 1.0;
    return enc;
}

std::size_t LabelEncoding::index_of(int class_id) const {
    const auto it = std::lower_bound(classes.begin(), classes.end(), class_id);
    if (it == classes.end() || *it != class_id)
        throw InvalidArgument("LabelEncoding: unknown class id " + std::to_string(class_id));
    return static_cast<std::size_t>(it - classes.begin());
}

std::vector<int> argmax_classes(const Matrix& scores, const std::vector<int>& classes) {
    if (scores.cols() != classes.size())
        throw DimensionMismatch("argmax_classes: column count differs from class count");
    std::vector<int> out(scores.rows());
    for (std::size_t i = 0; i < scores.rows(); ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < scores.cols(); ++j)
            if (scores(i, j) > scores(i, best)) best = j;
        out[i] = classes[best];
    }
    return out;
}

}  // namespace featbench
