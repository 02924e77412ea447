#pragma once

#include <optional>
#include <string>
#include <vector>

#include "featbench/matrix.hpp"

namespace featbench {

enum class Layer { F6, F7, Raw };

std::string_view layer_name(Layer layer);
std::optional<Layer> parse_layer(std::string_view name);

/// Data source. The four fixed domains cover the benchmark object dataset;
/// anything else is a named synthetic domain.
struct Domain {
    enum class Kind { Amazon, Dslr, Webcam, Caltech, Synthetic };
    Kind kind = Kind::Synthetic;
    std::string synth_name;

    static Domain synthetic(std::string name) {
        return {Kind::Synthetic, std::move(name)};
    }
    static std::optional<Domain> from_name(std::string_view name);

    /// Short task code: "A", "D", "W", "C", or the synthetic name.
    std::string code() const;
    std::string display_name() const;

    bool operator==(const Domain&) const = default;
};

/// Labeled feature matrix with domain and layer tags. Labels are 1-based
/// class ids; every class in 1..c must appear at least once for training
/// datasets.
struct FeatureDataset {
    std::string name;
    Domain domain;
    Layer layer = Layer::Raw;
    Matrix features;  // N×d
    std::vector<int> labels;

    std::size_t sample_count() const { return features.rows(); }
    std::size_t dim() const { return features.cols(); }

    /// Checks shape, finiteness, and the label contract; throws on
    /// violation.
    void validate() const;
};

/// Per-row L2 normalization; zero rows are left untouched.
Matrix l2_normalize_rows(const Matrix& m);

}  // namespace featbench
