#pragma once

#include <cstddef>
#include <vector>

#include "featbench/matrix.hpp"

namespace featbench {

/// One-hot ±1 target encoding: row i has +1 in the column of sample i's
/// class and −1 everywhere else. Classes are kept sorted ascending, so
/// "lowest class index" tie rules coincide with numeric order.
struct LabelEncoding {
    std::vector<int> classes;  // sorted distinct class ids
    Matrix targets;            // N×c of ±1

    static LabelEncoding from_labels(const std::vector<int>& labels);

    std::size_t class_count() const { return classes.size(); }
    std::size_t index_of(int class_id) const;  // throws InvalidArgument if absent
};

/// Sorted distinct class ids.
std::vector<int> distinct_classes(const std::vector<int>& labels);

/// Per-row argmax over score columns mapped back to class ids; ties go to
/// the lowest class index.
std::vector<int> argmax_classes(const Matrix& scores, const std::vector<int>& classes);

}  // namespace featbench
