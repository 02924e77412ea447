#include "featbench/splits.hpp"

#include <algorithm>
#include <string>

#include "featbench/errors.hpp"
#include "featbench/labels.hpp"

namespace featbench {

SplitIndices stratified_split(const FeatureDataset& dataset, std::size_t n_per_class,
                              RngStream rng) {
    if (n_per_class == 0)
        throw InvalidArgument("stratified_split: n_per_class must be positive");
    SplitIndices out;
    for (int cls : distinct_classes(dataset.labels)) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < dataset.labels.size(); ++i)
            if (dataset.labels[i] == cls) idx.push_back(i);
        if (idx.size() < n_per_class)
            throw InsufficientClassSize("stratified_split: class " + std::to_string(cls) +
                                        " has " + std::to_string(idx.size()) +
                                        " samples, need " + std::to_string(n_per_class));
        for (std::size_t i = idx.size(); i-- > 1;)
            std::swap(idx[i], idx[rng.next_index(i + 1)]);
        out.train.insert(out.train.end(), idx.begin(), idx.begin() + n_per_class);
        out.test.insert(out.test.end(), idx.begin() + n_per_class, idx.end());
    }
    std::sort(out.train.begin(), out.train.end());
    std::sort(out.test.begin(), out.test.end());
    return out;
}

}  // namespace featbench
