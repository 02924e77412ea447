#include "featbench/dataio.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "featbench/errors.hpp"

namespace featbench {

namespace {

constexpr char kMagic[4] = {'D', 'C', 'F', '1'};

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    out.push_back(static_cast<unsigned char>(v & 0xFF));
    out.push_back(static_cast<unsigned char>((v >> 8) & 0xFF));
    out.push_back(static_cast<unsigned char>((v >> 16) & 0xFF));
    out.push_back(static_cast<unsigned char>((v >> 24) & 0xFF));
}

std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_field(std::string_view field, const std::string& path, std::size_t row,
                   std::size_t col) {
    const std::string_view t = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError(path + ": row " + std::to_string(row) + ", column " +
                         std::to_string(col) + ": not a number: '" + std::string(t) + "'");
    return value;
}

int parse_label(std::string_view field, const std::string& path, std::size_t row) {
    const std::string_view t = trim(field);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || value < 1)
        throw UnknownLabel(path + ": row " + std::to_string(row) +
                           ": label must be a positive integer, got '" + std::string(t) + "'");
    return static_cast<int>(value);
}

struct CsvContent {
    Matrix features;
    std::vector<int> labels;
};

CsvContent parse_csv(const std::string& path, bool with_labels) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");

    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    std::size_t width = 0;
    std::string line;
    std::size_t row_no = 0;
    while (std::getline(in, line)) {
        ++row_no;
        if (trim(line).empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        while (true) {
            const std::size_t comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        std::size_t first_feature = 0;
        if (with_labels) {
            if (fields.size() < 2)
                throw ParseError(path + ": row " + std::to_string(row_no) +
                                 ": expected a label and at least one feature");
            labels.push_back(parse_label(fields[0], path, row_no));
            first_feature = 1;
        }
        std::vector<double> values;
        values.reserve(fields.size() - first_feature);
        for (std::size_t f = first_feature; f < fields.size(); ++f)
            values.push_back(parse_field(fields[f], path, row_no, f + 1));
        if (width == 0) width = values.size();
        else if (values.size() != width)
            throw RaggedRows(path + ": row " + std::to_string(row_no) + " has " +
                             std::to_string(values.size()) + " features, expected " +
                             std::to_string(width));
        rows.push_back(std::move(values));
    }
    if (rows.empty()) throw EmptyDataset(path + ": no samples");

    CsvContent out;
    out.features = Matrix(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) out.features(i, j) = rows[i][j];
    out.labels = std::move(labels);
    return out;
}

}  // namespace

FileTags tags_from_filename(const std::string& path) {
    const std::string stem = std::filesystem::path(path).stem().string();
    const std::size_t underscore = stem.rfind('_');
    if (underscore != std::string::npos && underscore > 0) {
        const std::string domain_token = stem.substr(0, underscore);
        if (const auto layer = parse_layer(stem.substr(underscore + 1))) {
            const auto known = Domain::from_name(domain_token);
            return {stem, known ? *known : Domain::synthetic(domain_token), *layer};
        }
    }
    return {stem, Domain::synthetic(stem), Layer::Raw};
}

std::string canonical_filename(const Domain& domain, Layer layer) {
    std::string base = domain.kind == Domain::Kind::Synthetic
                           ? domain.synth_name
                           : domain.display_name();
    for (char& c : base) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return base + "_" + std::string(layer_name(layer)) + ".dcf1";
}

FeatureDataset load_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    if (bytes.size() < 12) throw TruncatedFile(path + ": shorter than the DCF1 header");
    if (!std::equal(kMagic, kMagic + 4, bytes.data()))
        throw BadMagic(path + ": not a DCF1 file");
    const std::uint64_t n = get_u32(bytes.data() + 4);
    const std::uint64_t d = get_u32(bytes.data() + 8);
    if (n == 0 || d == 0) throw EmptyDataset(path + ": header declares an empty dataset");
    const std::uint64_t expected = 12 + 4 * n + 4 * n * d;
    if (bytes.size() < expected)
        throw TruncatedFile(path + ": header declares " + std::to_string(expected) +
                            " bytes but the file has " + std::to_string(bytes.size()));
    if (bytes.size() > expected)
        throw CountMismatch(path + ": " + std::to_string(bytes.size() - expected) +
                            " trailing bytes after the declared payload");

    const FileTags tags = tags_from_filename(path);
    FeatureDataset ds;
    ds.name = tags.name;
    ds.domain = tags.domain;
    ds.layer = tags.layer;
    ds.labels.resize(n);
    const unsigned char* p = bytes.data() + 12;
    for (std::uint64_t i = 0; i < n; ++i, p += 4) {
        const std::int32_t label = static_cast<std::int32_t>(get_u32(p));
        if (label < 1)
            throw UnknownLabel(path + ": sample " + std::to_string(i + 1) +
                               ": label must be a positive integer");
        ds.labels[i] = label;
    }
    ds.features = Matrix(n, d);
    for (std::uint64_t i = 0; i < n * d; ++i, p += 4)
        ds.features.data()[i] = static_cast<double>(std::bit_cast<float>(get_u32(p)));
    ds.validate();
    return ds;
}

void save_binary(const FeatureDataset& dataset, const std::string& path) {
    dataset.validate();
    std::vector<unsigned char> bytes;
    bytes.reserve(12 + 4 * dataset.sample_count() * (1 + dataset.dim()));
    bytes.insert(bytes.end(), kMagic, kMagic + 4);
    put_u32(bytes, static_cast<std::uint32_t>(dataset.sample_count()));
    put_u32(bytes, static_cast<std::uint32_t>(dataset.dim()));
    for (int label : dataset.labels) put_u32(bytes, static_cast<std::uint32_t>(label));
    for (double v : dataset.features.data())
        put_u32(bytes, std::bit_cast<std::uint32_t>(static_cast<float>(v)));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create '" + path + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed for '" + path + "'");
}

FeatureDataset load_csv(const std::string& path) {
    CsvContent content = parse_csv(path, true);
    const FileTags tags = tags_from_filename(path);
    FeatureDataset ds{tags.name, tags.domain, tags.layer, std::move(content.features),
                      std::move(content.labels)};
    ds.validate();
    return ds;
}

void save_csv(const FeatureDataset& dataset, const std::string& path) {
    dataset.validate();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create '" + path + "'");
    char buf[64];
    for (std::size_t i = 0; i < dataset.sample_count(); ++i) {
        out << dataset.labels[i];
        for (std::size_t j = 0; j < dataset.dim(); ++j) {
            // %.9g round-trips the float32 payload exactly
            std::snprintf(buf, sizeof buf, "%.9g", dataset.features(i, j));
            out << ',' << buf;
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

Matrix load_features_csv(const std::string& path) {
    return parse_csv(path, false).features;
}

FeatureDataset load_dataset(const std::string& path) {
    const std::string ext = std::filesystem::path(path).extension().string();
    if (ext == ".dcf1") return load_binary(path);
    if (ext == ".csv") return load_csv(path);
    throw InvalidConfig("unsupported dataset extension '" + ext + "' for '" + path + "'");
}

}  // namespace featbench
