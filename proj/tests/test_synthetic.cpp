#include <cmath>

#include "doctest.h"
#include "featbench/errors.hpp"
#include "featbench/synthetic.hpp"

using namespace featbench;

namespace {

SyntheticConfig desk_config(double shift, std::uint64_t seed) {
    SyntheticConfig config;
    config.domains = 4;
    config.classes = 10;
    config.dim = 64;
    config.per_class.assign(10, 30);
    config.shift_magnitude = shift;
    config.seed = seed;
    return config;
}

std::vector<double> class_mean(const FeatureDataset& ds, int cls) {
    std::vector<double> mean(ds.dim(), 0.0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < ds.sample_count(); ++i)
        if (ds.labels[i] == cls) {
            for (std::size_t j = 0; j < ds.dim(); ++j) mean[j] += ds.features(i, j);
            ++count;
        }
    for (double& v : mean) v /= static_cast<double>(count);
    return mean;
}

double norm_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("synthetic corpus shape matches the four-domain pattern") {
    const auto domains = generate_synthetic_domains(desk_config(3.0, 5));
    REQUIRE(domains.size() == 4);
    for (const FeatureDataset& ds : domains) {
        CHECK(ds.sample_count() == 300);
        CHECK(ds.dim() == 64);
        CHECK(ds.layer == Layer::Raw);
        for (int cls = 1; cls <= 10; ++cls) {
            std::size_t count = 0;
            for (int l : ds.labels) count += l == cls;
            CHECK(count == 30);
        }
    }
    CHECK(domains[0].name == "s0");
    CHECK(domains[3].domain.code() == "s3");
}

TEST_CASE("synthetic generation is deterministic under (config, seed)") {
    const auto a = generate_synthetic_domains(desk_config(2.0, 9));
    const auto b = generate_synthetic_domains(desk_config(2.0, 9));
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].features == b[i].features);
        CHECK(a[i].labels == b[i].labels);
    }
    const auto c = generate_synthetic_domains(desk_config(2.0, 10));
    CHECK_FALSE(a[0].features == c[0].features);
}

TEST_CASE("zero shift keeps domains in the same family") {
    const auto domains = generate_synthetic_domains(desk_config(0.0, 3));
    // per-class means stay near each other across domains, far from other
    // classes
    for (int cls : {1, 4, 9}) {
        const auto m0 = class_mean(domains[0], cls);
        const auto m1 = class_mean(domains[1], cls);
        CHECK(norm_diff(m0, m1) < 3.0);
        const auto other = class_mean(domains[1], cls % 10 + 1);
        CHECK(norm_diff(m0, other) > 5.0);
    }
}

TEST_CASE("translation magnitude shows up in the domain mean") {
    SyntheticConfig config = desk_config(5.0, 12);
    const auto domains = generate_synthetic_domains(config);
    std::vector<double> g0(config.dim, 0.0), g1(config.dim, 0.0);
    for (std::size_t i = 0; i < domains[0].sample_count(); ++i)
        for (std::size_t j = 0; j < config.dim; ++j) {
            g0[j] += domains[0].features(i, j);
            g1[j] += domains[1].features(i, j);
        }
    for (std::size_t j = 0; j < config.dim; ++j) {
        g0[j] /= static_cast<double>(domains[0].sample_count());
        g1[j] /= static_cast<double>(domains[1].sample_count());
    }
    const double shift = norm_diff(g0, g1);
    CHECK(shift > 3.0);
    CHECK(shift < 7.5);
}

TEST_CASE("synthetic config validation") {
    SyntheticConfig config = desk_config(1.0, 0);
    config.per_class.assign(3, 30);  // wrong length
    CHECK_THROWS_AS(generate_synthetic_domains(config), InvalidConfig);

    config = desk_config(-1.0, 0);
    CHECK_THROWS_AS(generate_synthetic_domains(config), InvalidConfig);

    config = desk_config(1.0, 0);
    config.dim = 0;
    CHECK_THROWS_AS(generate_synthetic_domains(config), InvalidConfig);
}
