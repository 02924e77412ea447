#include "featbench/synthetic.hpp"

#include <cmath>
#include <string>

#include "featbench/errors.hpp"
#include "featbench/rng.hpp"

namespace featbench {

namespace {

constexpr double kCenterRadius = 6.0;  // class centers on a sphere of this norm

std::vector<double> unit_vector(RngStream& rng, std::size_t dim) {
    std::vector<double> v(dim);
    double norm_sq = 0.0;
    do {
        norm_sq = 0.0;
        for (double& x : v) {
            x = rng.next_gaussian();
            norm_sq += x * x;
        }
    } while (norm_sq == 0.0);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& x : v) x *= inv;
    return v;
}

}  // namespace

std::vector<FeatureDataset> generate_synthetic_domains(const SyntheticConfig& config) {
    if (config.domains < 1) throw InvalidConfig("synthetic: domains must be at least 1");
    if (config.classes < 1) throw InvalidConfig("synthetic: classes must be at least 1");
    if (config.dim < 1) throw InvalidConfig("synthetic: dim must be at least 1");
    if (config.per_class.size() != config.classes)
        throw InvalidConfig("synthetic: per_class must list one count per class");
    for (std::size_t c : config.per_class)
        if (c < 1) throw InvalidConfig("synthetic: per-class counts must be positive");
    if (config.shift_magnitude < 0.0)
        throw InvalidConfig("synthetic: shift_magnitude must be nonnegative");

    // Class centers shared by all domains.
    std::vector<std::vector<double>> centers(config.classes);
    {
        RngStream rng(config.seed, combine_stream_id({hash_bytes("synthetic-centers")}));
        for (auto& c : centers) {
            c = unit_vector(rng, config.dim);
            for (double& x : c) x *= kCenterRadius;
        }
    }

    std::size_t total = 0;
    for (std::size_t c : config.per_class) total += c;

    std::vector<FeatureDataset> out;
    out.reserve(config.domains);
    for (std::size_t dom = 0; dom < config.domains; ++dom) {
        std::vector<double> translation(config.dim, 0.0);
        std::vector<double> scale(config.dim, 1.0);
        if (dom > 0) {
            RngStream rng(config.seed,
                          combine_stream_id({hash_bytes("synthetic-domain"), dom}));
            translation = unit_vector(rng, config.dim);
            for (double& t : translation) t *= config.shift_magnitude;
            for (double& s : scale) s = rng.next_uniform(0.8, 1.2);
        }

        FeatureDataset ds;
        ds.name = "s" + std::to_string(dom);
        ds.domain = Domain::synthetic(ds.name);
        ds.layer = Layer::Raw;
        ds.features = Matrix(total, config.dim);
        ds.labels.reserve(total);

        std::size_t row = 0;
        for (std::size_t cls = 0; cls < config.classes; ++cls) {
            RngStream rng(config.seed,
                          combine_stream_id({hash_bytes("synthetic-samples"), dom, cls}));
            for (std::size_t s = 0; s < config.per_class[cls]; ++s, ++row) {
                double* x = ds.features.row_ptr(row);
                for (std::size_t k = 0; k < config.dim; ++k)
                    x[k] = scale[k] * centers[cls][k] + translation[k] + rng.next_gaussian();
                ds.labels.push_back(static_cast<int>(cls) + 1);
            }
        }
        ds.validate();
        out.push_back(std::move(ds));
    }
    return out;
}

}  // namespace featbench
