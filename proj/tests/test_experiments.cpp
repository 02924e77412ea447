#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "featbench/errors.hpp"
#include "featbench/experiments.hpp"
#include "featbench/synthetic.hpp"

using namespace featbench;

namespace {

std::vector<FeatureDataset> desk_corpus(double shift, std::uint64_t seed,
                                        std::size_t per_class = 12, std::size_t classes = 4,
                                        std::size_t dim = 8) {
    SyntheticConfig config;
    config.domains = 4;
    config.classes = classes;
    config.dim = dim;
    config.per_class.assign(classes, per_class);
    config.shift_magnitude = shift;
    config.seed = seed;
    return generate_synthetic_domains(config);
}

MethodParams desk_params() {
    MethodParams params;
    params.svm_sigma = 6.0;
    params.kelm_sigma = 6.0;
    params.elm_hidden = 60;
    params.lssvm_c = 100.0;
    params.lssvm_sigma = 6.0;  // pin LSSVM so desk runs skip the grid search
    return params;
}

FeatureDataset tiny_domain(Domain domain, Layer layer) {
    FeatureDataset ds;
    ds.name = domain.display_name();
    ds.domain = domain;
    ds.layer = layer;
    ds.features = Matrix(18, 2, 0.0);
    for (std::size_t i = 0; i < 18; ++i) {
        ds.features(i, 0) = static_cast<double>(i);
        ds.labels.push_back(static_cast<int>(i % 2) + 1);
    }
    return ds;
}

}  // namespace

TEST_CASE("stratified_split draws exact per-class counts") {
    FeatureDataset ds;
    ds.name = "amazon-sized";
    ds.domain = Domain{Domain::Kind::Amazon, {}};
    const std::size_t per_class = 95;  // 10 classes ≈ Amazon scale
    ds.features = Matrix(per_class * 10, 3, 1.0);
    for (std::size_t c = 0; c < 10; ++c)
        for (std::size_t i = 0; i < per_class; ++i)
            ds.labels.push_back(static_cast<int>(c) + 1);

    const SplitIndices split = stratified_split(ds, 20, RngStream(1, 2));
    CHECK(split.train.size() == 200);  // 10 classes × 20
    CHECK(split.test.size() == ds.sample_count() - 200);

    // disjoint and covering
    std::set<std::size_t> seen(split.train.begin(), split.train.end());
    for (std::size_t i : split.test) CHECK(seen.insert(i).second);
    CHECK(seen.size() == ds.sample_count());

    // per-class counts exact
    std::map<int, int> counts;
    for (std::size_t i : split.train) counts[ds.labels[i]]++;
    for (const auto& [cls, n] : counts) CHECK(n == 20);
}

TEST_CASE("stratified_split determinism and boundary") {
    FeatureDataset ds = tiny_domain(Domain::synthetic("x"), Layer::Raw);
    const SplitIndices a = stratified_split(ds, 4, RngStream(5, 77));
    const SplitIndices b = stratified_split(ds, 4, RngStream(5, 77));
    CHECK(a.train == b.train);
    CHECK(a.test == b.test);
    const SplitIndices c = stratified_split(ds, 4, RngStream(5, 78));
    CHECK(a.train != c.train);

    // n_per_class equal to the class size leaves an empty test side
    const SplitIndices full = stratified_split(ds, 9, RngStream(5, 79));
    CHECK(full.test.empty());

    CHECK_THROWS_WITH_AS(stratified_split(ds, 10, RngStream(5, 80)),
                         doctest::Contains("class 1"), InsufficientClassSize);
}

TEST_CASE("accuracy arithmetic and errors") {
    CHECK(accuracy({1, 2, 3}, {1, 2, 3}) == 1.0);
    CHECK(accuracy({1, 2}, {2, 1}) == 0.0);
    CHECK(accuracy({1, 2, 3, 4}, {1, 2, 3, 9}) == 0.75);
    CHECK_THROWS_AS(accuracy({1}, {1, 2}), LengthMismatch);
    CHECK_THROWS_AS(accuracy({}, {}), EmptyInput);
}

TEST_CASE("aggregate mean and population std") {
    const ResultCell single = aggregate({0.9});
    CHECK(single.mean == 0.9);
    CHECK(single.stddev == 0.0);
    CHECK(single.runs == 1);

    const ResultCell two = aggregate({0.8, 1.0});
    CHECK(two.mean == doctest::Approx(0.9));
    CHECK(two.stddev == doctest::Approx(0.1));

    const ResultCell flat = aggregate(std::vector<double>(20, 0.65));
    CHECK(flat.stddev == 0.0);
    CHECK(flat.runs == 20);

    CHECK_THROWS_AS(aggregate({}), EmptyInput);
    CHECK_THROWS_AS(aggregate({1.5}), InvalidArgument);
}

TEST_CASE("render_table formatting") {
    ResultTable table;
    table.columns = {"A->D", "C->D"};
    ResultRow row{Method::Kelm, Layer::F6, {}};
    ResultCell good;
    good.mean = 0.937;
    good.stddev = 0.001;
    good.runs = 20;
    ResultCell bad;
    bad.failed = true;
    bad.error = "boom";
    row.cells = {good, bad};
    table.rows.push_back(row);

    const std::string tsv = render_table(table, TableStyle::Tsv);
    CHECK(tsv == "method\tlayer\tA->D\tC->D\nKELM\tf6\t93.7±0.1\t—\n");
    CHECK(render_table(table, TableStyle::Tsv) == tsv);  // deterministic

    const std::string md = render_table(table, TableStyle::Markdown);
    CHECK(md.find("| KELM | f6 | 93.7±0.1 | — |") != std::string::npos);

    CHECK(render_diagnostics(table).find("boom") != std::string::npos);
    CHECK(table.has_failures());
}

TEST_CASE("render_chart emits one bar per (row, column) and is deterministic") {
    ResultTable table;
    for (int i = 0; i < 12; ++i) table.columns.push_back("t" + std::to_string(i));
    for (Method m : kAllMethods) {
        ResultRow row{m, Layer::Raw, {}};
        for (int i = 0; i < 12; ++i) {
            ResultCell cell;
            cell.mean = 0.5 + 0.03 * i;
            cell.runs = 20;
            row.cells.push_back(cell);
        }
        table.rows.push_back(row);
    }
    const std::string svg = render_chart_svg(table);
    std::size_t rects = 0;
    for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
         pos = svg.find("<rect", pos + 1))
        ++rects;
    // 12×5 bars + background + 5 legend swatches
    CHECK(rects == 12 * 5 + 1 + 5);
    CHECK(render_chart_svg(table) == svg);
}

TEST_CASE("make_tasks ordering for object domains and synthetic sets") {
    std::vector<FeatureDataset> object;
    for (auto kind : {Domain::Kind::Webcam, Domain::Kind::Amazon, Domain::Kind::Caltech,
                      Domain::Kind::Dslr})
        object.push_back(tiny_domain(Domain{kind, {}}, Layer::F6));

    const auto single = make_tasks(Setting::SingleDomain, object);
    REQUIRE(single.size() == 4);
    CHECK(single[0].key == "Amazon");
    CHECK(single[1].key == "DSLR");
    CHECK(single[2].key == "Webcam");
    CHECK(single[3].key == "Caltech");

    const auto cross = make_tasks(Setting::CrossSourceOnly, object);
    REQUIRE(cross.size() == 12);
    const std::vector<std::string> expected{"A->D", "C->D", "W->D", "A->C", "W->C", "D->C",
                                            "D->A", "W->A", "C->A", "C->W", "D->W", "A->W"};
    for (std::size_t i = 0; i < 12; ++i) CHECK(cross[i].key == expected[i]);
    for (const TaskSpec& t : cross) {
        CHECK(object[t.source].domain.code() == t.key.substr(0, 1));
        CHECK(object[t.target].domain.code() == t.key.substr(3, 1));
    }

    const auto corpus = desk_corpus(0.0, 1);
    const auto synth = make_tasks(Setting::CrossSourceTarget, corpus);
    REQUIRE(synth.size() == 12);
    CHECK(synth[0].key == "s0->s1");
    CHECK(synth[11].key == "s3->s2");
}

TEST_CASE("split plans are deterministic and setting-3 target share is 3 per class") {
    const auto corpus = desk_corpus(2.0, 4);
    ExperimentConfig config;
    config.setting = Setting::CrossSourceTarget;
    config.seed = 11;
    const auto tasks = make_tasks(config.setting, corpus);

    for (std::size_t s = 0; s < 5; ++s) {
        const SplitPlan plan = make_split_plan(config, corpus, tasks[0], s);
        const SplitPlan again = make_split_plan(config, corpus, tasks[0], s);
        CHECK(plan.source_train == again.source_train);
        CHECK(plan.target_train == again.target_train);
        CHECK(plan.test == again.test);

        // 8 source rows per class, 3 target rows per class, disjoint test
        CHECK(plan.source_train.size() == 8 * 4);
        std::map<int, int> target_counts;
        const FeatureDataset& target = corpus[tasks[0].target];
        for (std::size_t idx : plan.target_train) target_counts[target.labels[idx]]++;
        REQUIRE(target_counts.size() == 4);
        for (const auto& [cls, n] : target_counts) CHECK(n == 3);
        CHECK(plan.test.size() == target.sample_count() - 12);
        for (std::size_t idx : plan.target_train)
            CHECK(std::find(plan.test.begin(), plan.test.end(), idx) == plan.test.end());
    }
}

TEST_CASE("run_experiment shape, determinism, and thread independence") {
    const auto corpus = desk_corpus(1.0, 21);
    ExperimentConfig config;
    config.setting = Setting::CrossSourceOnly;
    config.methods = {Method::Nn, Method::Kelm};
    config.splits = 3;
    config.seed = 77;
    config.params = desk_params();
    config.threads = 1;

    const ResultTable t1 = run_experiment(config, corpus);
    CHECK(t1.columns.size() == 12);
    CHECK(t1.rows.size() == 2);
    CHECK_FALSE(t1.has_failures());
    for (const ResultRow& row : t1.rows)
        for (const ResultCell& cell : row.cells) CHECK(cell.runs == 3);

    const ResultTable t2 = run_experiment(config, corpus);
    CHECK(render_table(t1, TableStyle::Tsv) == render_table(t2, TableStyle::Tsv));

    config.threads = 4;
    const ResultTable t4 = run_experiment(config, corpus);
    CHECK(render_table(t1, TableStyle::Tsv) == render_table(t4, TableStyle::Tsv));
}

TEST_CASE("setting 1 requires a leftover test sample per class") {
    // 8 per class is exactly the training draw for non-Amazon domains: no
    // test data remains, so every cell fails and the grid keeps going.
    const auto corpus = desk_corpus(0.0, 5, 8);
    ExperimentConfig config;
    config.setting = Setting::SingleDomain;
    config.methods = {Method::Nn};
    config.splits = 2;
    config.params = desk_params();

    const ResultTable table = run_experiment(config, corpus);
    CHECK(table.columns.size() == 4);
    CHECK(table.has_failures());
    const std::string diag = render_diagnostics(table);
    CHECK(diag.find("class") != std::string::npos);
    const std::string rendered = render_table(table, TableStyle::Tsv);
    CHECK(rendered.find("—") != std::string::npos);
}

TEST_CASE("zero-shift control: cross-domain tracks single-domain accuracy") {
    const auto corpus = desk_corpus(0.0, 31, 16, 4, 12);
    ExperimentConfig config;
    config.methods = {Method::Nn, Method::Kelm};
    config.splits = 8;
    config.seed = 3;
    config.params = desk_params();
    config.threads = 4;

    config.setting = Setting::SingleDomain;
    const ResultTable s1 = run_experiment(config, corpus);
    config.setting = Setting::CrossSourceOnly;
    const ResultTable s2 = run_experiment(config, corpus);

    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
        double mean1 = 0.0, var1 = 0.0;
        for (const ResultCell& cell : s1.rows[mi].cells) {
            mean1 += cell.mean;
            var1 += cell.stddev * cell.stddev;
        }
        mean1 /= static_cast<double>(s1.columns.size());
        double mean2 = 0.0, var2 = 0.0;
        for (const ResultCell& cell : s2.rows[mi].cells) {
            mean2 += cell.mean;
            var2 += cell.stddev * cell.stddev;
        }
        mean2 /= static_cast<double>(s2.columns.size());
        const double pooled = std::sqrt(
            (var1 / s1.columns.size() + var2 / s2.columns.size()) / 2.0);
        CHECK(std::abs(mean1 - mean2) <= 2.0 * pooled + 1e-12);
    }
}

TEST_CASE("zero-shift single-domain grid is easy for every method") {
    const auto corpus = desk_corpus(0.0, 41, 12, 3, 24);
    ExperimentConfig config;
    config.setting = Setting::SingleDomain;
    config.splits = 5;
    config.seed = 8;
    config.params = desk_params();
    config.threads = 4;

    const ResultTable table = run_experiment(config, corpus);
    REQUIRE_FALSE(table.has_failures());
    for (const ResultRow& row : table.rows)
        for (const ResultCell& cell : row.cells) CHECK(cell.mean >= 0.99);
}

TEST_CASE("source-only accuracy is monotone non-increasing in the shift") {
    ExperimentConfig config;
    config.setting = Setting::CrossSourceOnly;
    config.methods = {Method::Nn};
    config.splits = 20;
    config.seed = 13;
    config.threads = 4;

    double previous = 1.1;
    for (double shift : {0.0, 2.0, 5.0}) {
        const ResultTable table = run_experiment(config, desk_corpus(shift, 99, 12, 5, 16));
        double mean = 0.0;
        for (const ResultCell& cell : table.rows[0].cells) mean += cell.mean;
        mean /= static_cast<double>(table.columns.size());
        CHECK(mean <= previous + 1e-12);
        previous = mean;
    }
}

TEST_CASE("non-trivial cells have strictly positive split spread") {
    ExperimentConfig config;
    config.setting = Setting::CrossSourceOnly;
    config.methods = {Method::Nn, Method::Kelm};
    config.splits = 20;
    config.seed = 19;
    config.params = desk_params();
    config.threads = 4;

    const ResultTable table = run_experiment(config, desk_corpus(4.0, 55, 12, 5, 16));
    std::size_t checked = 0;
    for (const ResultRow& row : table.rows)
        for (const ResultCell& cell : row.cells)
            if (!cell.failed && cell.mean < 0.995 && cell.mean > 0.05) {
                CHECK(cell.stddev > 0.0);
                ++checked;
            }
    CHECK(checked > 0);  // the corpus is shifted enough to make cells non-trivial
}

TEST_CASE("experiment config validation") {
    const auto corpus = desk_corpus(0.0, 6);
    ExperimentConfig config;
    config.methods = {};
    CHECK_THROWS_AS(run_experiment(config, corpus), InvalidConfig);

    config = ExperimentConfig{};
    config.splits = 0;
    CHECK_THROWS_AS(run_experiment(config, corpus), InvalidConfig);

    config = ExperimentConfig{};
    config.setting = Setting::CrossSourceOnly;
    CHECK_THROWS_AS(run_experiment(config, {corpus[0]}), InvalidConfig);

    config = ExperimentConfig{};
    config.layer = Layer::F6;  // corpus is raw
    CHECK_THROWS_AS(run_experiment(config, corpus), InvalidConfig);
}
