#pragma once

#include <string>

#include "featbench/dataset.hpp"

namespace featbench {

/// DCF1 container, little-endian:
///   magic "DCF1" | N: u32 | d: u32 | labels: N × i32 | features: N·d × f32 row-major.
/// Features are stored as 32-bit floats and widened to 64-bit on load.
/// Byte output is deterministic for a given dataset.
FeatureDataset load_binary(const std::string& path);
void save_binary(const FeatureDataset& dataset, const std::string& path);

/// CSV: one sample per line, integer label first, then d comma-separated
/// decimal fields; CRLF line endings tolerated.
FeatureDataset load_csv(const std::string& path);
void save_csv(const FeatureDataset& dataset, const std::string& path);

/// Label-free CSV of d fields per line (prediction queries).
Matrix load_features_csv(const std::string& path);

FeatureDataset load_dataset(const std::string& path);  // picks loader by extension

/// Domain/layer tags recovered from a "<domain>_<layer>.<ext>" stem;
/// unrecognized stems become synthetic domains with layer raw.
struct FileTags {
    std::string name;
    Domain domain;
    Layer layer;
};
FileTags tags_from_filename(const std::string& path);

/// Canonical file name "<domain-or-name>_<layer>.dcf1" used by the
/// benchmark data directory layout.
std::string canonical_filename(const Domain& domain, Layer layer);

}  // namespace featbench
