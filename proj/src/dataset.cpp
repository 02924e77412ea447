#include "featbench/dataset.hpp"

#include <cctype>
#include <cmath>

#include "featbench/errors.hpp"
#include "featbench/labels.hpp"

namespace featbench {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::string_view layer_name(Layer layer) {
    switch (layer) {
        case Layer::F6: return "f6";
        case Layer::F7: return "f7";
        case Layer::Raw: return "raw";
    }
    return "?";
}

std::optional<Layer> parse_layer(std::string_view name) {
    const std::string lower = to_lower(name);
    if (lower == "f6") return Layer::F6;
    if (lower == "f7") return Layer::F7;
    if (lower == "raw") return Layer::Raw;
    return std::nullopt;
}

std::optional<Domain> Domain::from_name(std::string_view name) {
    const std::string lower = to_lower(name);
    if (lower == "amazon") return Domain{Kind::Amazon, {}};
    if (lower == "dslr") return Domain{Kind::Dslr, {}};
    if (lower == "webcam") return Domain{Kind::Webcam, {}};
    if (lower == "caltech") return Domain{Kind::Caltech, {}};
    return std::nullopt;
}

std::string Domain::code() const {
    switch (kind) {
        case Kind::Amazon: return "A";
        case Kind::Dslr: return "D";
        case Kind::Webcam: return "W";
        case Kind::Caltech: return "C";
        case Kind::Synthetic: return synth_name;
    }
    return "?";
}

std::string Domain::display_name() const {
    switch (kind) {
        case Kind::Amazon: return "Amazon";
        case Kind::Dslr: return "DSLR";
        case Kind::Webcam: return "Webcam";
        case Kind::Caltech: return "Caltech";
        case Kind::Synthetic: return synth_name;
    }
    return "?";
}

void FeatureDataset::validate() const {
    if (features.rows() == 0 || features.cols() == 0)
        throw EmptyDataset("dataset '" + name + "': no samples or zero dimension");
    if (labels.size() != features.rows())
        throw DimensionMismatch("dataset '" + name + "': label count differs from row count");
    if (!all_finite(features))
        throw InvalidArgument("dataset '" + name + "': non-finite feature value");
    int max_label = 0;
    for (int l : labels) {
        if (l < 1)
            throw UnknownLabel("dataset '" + name + "': label " + std::to_string(l) +
                               " is not a positive integer");
        max_label = std::max(max_label, l);
    }
    const std::vector<int> present = distinct_classes(labels);
    if (static_cast<int>(present.size()) != max_label)
        throw InvalidArgument("dataset '" + name + "': classes 1.." +
                              std::to_string(max_label) + " must all be present");
}

Matrix l2_normalize_rows(const Matrix& m) {
    Matrix out = m;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        double* row = out.row_ptr(i);
        const double norm = std::sqrt(dot(row, row, out.cols()));
        if (norm > 0.0)
            for (std::size_t j = 0; j < out.cols(); ++j) row[j] /= norm;
    }
    return out;
}

}  // namespace featbench
