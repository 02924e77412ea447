#pragma once

#include <vector>

#include "featbench/dataset.hpp"
#include "featbench/rng.hpp"

namespace featbench {

struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

/// Uniform without-replacement draw of exactly n_per_class training rows
/// from each class; everything else lands in test. Both index lists come
/// back sorted ascending. Throws InsufficientClassSize naming the first
/// class with fewer than n_per_class members.
SplitIndices stratified_split(const FeatureDataset& dataset, std::size_t n_per_class,
                              RngStream rng);

}  // namespace featbench
