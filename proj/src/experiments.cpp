#include "featbench/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <thread>

#include "featbench/errors.hpp"
#include "featbench/labels.hpp"

namespace featbench {

namespace {

int domain_rank(const Domain& d) {
    switch (d.kind) {
        case Domain::Kind::Amazon: return 0;
        case Domain::Kind::Dslr: return 1;
        case Domain::Kind::Webcam: return 2;
        case Domain::Kind::Caltech: return 3;
        case Domain::Kind::Synthetic: return 4;
    }
    return 4;
}

bool dataset_order(const FeatureDataset& a, const FeatureDataset& b) {
    const int ra = domain_rank(a.domain), rb = domain_rank(b.domain);
    if (ra != rb) return ra < rb;
    return a.domain.code() < b.domain.code();
}

// Published cross-domain column order for the four object domains.
constexpr const char* kObjectPairOrder[] = {"A->D", "C->D", "W->D", "A->C", "W->C", "D->C",
                                            "D->A", "W->A", "C->A", "C->W", "D->W", "A->W"};

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers =
        std::min<std::size_t>(count, threads < 1 ? 1 : static_cast<std::size_t>(threads));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
        });
    for (std::thread& t : pool) t.join();
}

void validate_datasets(const ExperimentConfig& config,
                       const std::vector<FeatureDataset>& datasets) {
    const std::size_t needed = config.setting == Setting::SingleDomain ? 1 : 2;
    if (datasets.size() < needed)
        throw InvalidConfig("experiment: needs at least " + std::to_string(needed) +
                            " domain datasets");
    if (config.splits < 1) throw InvalidConfig("experiment: splits must be at least 1");
    if (config.methods.empty()) throw InvalidConfig("experiment: no methods selected");
    for (const FeatureDataset& ds : datasets) {
        ds.validate();
        if (ds.layer != config.layer)
            throw InvalidConfig("experiment: dataset '" + ds.name + "' has layer " +
                                std::string(layer_name(ds.layer)) + ", expected " +
                                std::string(layer_name(config.layer)));
        if (ds.dim() != datasets.front().dim())
            throw InvalidConfig("experiment: dataset '" + ds.name +
                                "' feature dimension differs");
    }
    for (std::size_t i = 0; i < datasets.size(); ++i)
        for (std::size_t j = i + 1; j < datasets.size(); ++j)
            if (datasets[i].domain.code() == datasets[j].domain.code())
                throw InvalidConfig("experiment: duplicate domain '" +
                                    datasets[i].domain.code() + "'");
}

}  // namespace

std::size_t default_train_per_class(const Domain& domain) {
    return domain.kind == Domain::Kind::Amazon ? 20 : 8;
}

std::size_t ExperimentConfig::resolve_train_per_class(const Domain& domain) const {
    const auto it = train_per_class.find(domain.code());
    return it != train_per_class.end() ? it->second : default_train_per_class(domain);
}

std::vector<TaskSpec> make_tasks(Setting setting, const std::vector<FeatureDataset>& datasets) {
    std::vector<std::size_t> order(datasets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return dataset_order(datasets[a], datasets[b]);
    });

    std::vector<TaskSpec> tasks;
    if (setting == Setting::SingleDomain) {
        for (std::size_t i : order)
            tasks.push_back({datasets[i].domain.display_name(), i, i});
        return tasks;
    }

    std::map<std::string, std::size_t> by_code;
    for (std::size_t i = 0; i < datasets.size(); ++i) by_code[datasets[i].domain.code()] = i;
    const bool object_set = datasets.size() == 4 &&
                            by_code.count("A") && by_code.count("D") && by_code.count("W") &&
                            by_code.count("C");
    if (object_set) {
        for (const char* key : kObjectPairOrder) {
            const std::string k(key);
            tasks.push_back({k, by_code.at(k.substr(0, 1)), by_code.at(k.substr(3, 1))});
        }
        return tasks;
    }
    for (std::size_t s : order)
        for (std::size_t t : order)
            if (s != t)
                tasks.push_back(
                    {datasets[s].domain.code() + "->" + datasets[t].domain.code(), s, t});
    return tasks;
}

SplitPlan make_split_plan(const ExperimentConfig& config,
                          const std::vector<FeatureDataset>& datasets, const TaskSpec& task,
                          std::size_t split_index) {
    // One stream per (setting, task, split): every method sees the same
    // train/test partition, so comparisons are paired.
    const std::uint64_t sid =
        combine_stream_id({hash_bytes("split"), static_cast<std::uint64_t>(config.setting),
                           hash_bytes(task.key), split_index});
    RngStream rng(config.seed, sid);

    const FeatureDataset& source = datasets[task.source];
    const std::size_t n_train = config.resolve_train_per_class(source.domain);
    SplitPlan plan;

    if (config.setting == Setting::SingleDomain) {
        for (int cls : distinct_classes(source.labels)) {
            std::size_t count = 0;
            for (int l : source.labels)
                if (l == cls) ++count;
            if (count < n_train + 1)
                throw InsufficientClassSize(
                    "setting 1 on '" + source.name + "': class " + std::to_string(cls) +
                    " has " + std::to_string(count) + " samples, need " +
                    std::to_string(n_train + 1) + " to leave test data");
        }
        SplitIndices split = stratified_split(source, n_train, rng);
        plan.source_train = std::move(split.train);
        plan.test = std::move(split.test);
        return plan;
    }

    const FeatureDataset& target = datasets[task.target];
    plan.source_train = stratified_split(source, n_train, rng.substream(1)).train;
    if (config.setting == Setting::CrossSourceOnly) {
        plan.test.resize(target.sample_count());
        std::iota(plan.test.begin(), plan.test.end(), 0);
        return plan;
    }

    // Source and target: few labeled target rows join the training set and
    // the rest of the target is the test set.
    SplitIndices tgt = stratified_split(target, config.target_per_class, rng.substream(2));
    plan.target_train = std::move(tgt.train);
    plan.test = std::move(tgt.test);
    return plan;
}

namespace {

void run_one(std::size_t index, const ExperimentConfig& config,
             const std::vector<FeatureDataset>& datasets, const std::vector<TaskSpec>& tasks,
             std::vector<double>& accs, std::vector<std::string>& errors) {
    const std::size_t per_method = tasks.size() * config.splits;
    const std::size_t mi = index / per_method;
    const std::size_t ti = (index % per_method) / config.splits;
    const std::size_t si = index % config.splits;
    const Method method = config.methods[mi];
    const TaskSpec& task = tasks[ti];

    try {
        const SplitPlan plan = make_split_plan(config, datasets, task, si);
        const FeatureDataset& source = datasets[task.source];
        const FeatureDataset& target = datasets[task.target];

        const std::size_t n_rows = plan.source_train.size() + plan.target_train.size();
        Matrix train(n_rows, source.dim());
        std::vector<int> train_labels;
        train_labels.reserve(n_rows);
        std::size_t r = 0;
        for (std::size_t idx : plan.source_train) {
            std::copy_n(source.features.row_ptr(idx), source.dim(), train.row_ptr(r++));
            train_labels.push_back(source.labels[idx]);
        }
        for (std::size_t idx : plan.target_train) {
            std::copy_n(target.features.row_ptr(idx), target.dim(), train.row_ptr(r++));
            train_labels.push_back(target.labels[idx]);
        }
        const Matrix test = take_rows(target.features, plan.test);
        std::vector<int> test_labels;
        test_labels.reserve(plan.test.size());
        for (std::size_t idx : plan.test) test_labels.push_back(target.labels[idx]);

        const std::uint64_t model_sid = combine_stream_id(
            {hash_bytes("model"), static_cast<std::uint64_t>(config.setting),
             hash_bytes(task.key), si, static_cast<std::uint64_t>(method)});
        const AnyModel model = fit_classifier(method, train, train_labels, config.params,
                                              RngStream(config.seed, model_sid));
        accs[index] = accuracy(predict_classifier(model, test), test_labels);
        errors[index].clear();
    } catch (const std::exception& e) {
        errors[index] = e.what();
    }
}

}  // namespace

ResultTable run_experiment(const ExperimentConfig& config,
                           const std::vector<FeatureDataset>& raw_datasets) {
    validate_datasets(config, raw_datasets);
    std::vector<FeatureDataset> datasets = raw_datasets;
    if (config.normalize)
        for (FeatureDataset& ds : datasets) ds.features = l2_normalize_rows(ds.features);

    const std::vector<TaskSpec> tasks = make_tasks(config.setting, datasets);
    const std::size_t items = config.methods.size() * tasks.size() * config.splits;
    std::vector<double> accs(items, 0.0);
    std::vector<std::string> errors(items, "pending");

    parallel_for(items, config.threads, [&](std::size_t i) {
        run_one(i, config, datasets, tasks, accs, errors);
    });

    ResultTable table;
    for (const TaskSpec& task : tasks) table.columns.push_back(task.key);
    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
        ResultRow row{config.methods[mi], config.layer, {}};
        for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
            std::vector<double> split_accs;
            ResultCell cell;
            for (std::size_t si = 0; si < config.splits; ++si) {
                const std::size_t idx =
                    (mi * tasks.size() + ti) * config.splits + si;
                if (errors[idx].empty()) {
                    split_accs.push_back(accs[idx]);
                } else if (!cell.failed) {
                    cell.failed = true;
                    cell.error = errors[idx];
                }
            }
            if (!cell.failed) cell = aggregate(split_accs);
            row.cells.push_back(std::move(cell));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

ResultTable run_single_domain(const ExperimentConfig& config,
                              const std::vector<FeatureDataset>& datasets) {
    ExperimentConfig c = config;
    c.setting = Setting::SingleDomain;
    return run_experiment(c, datasets);
}

ResultTable run_cross_source_only(const ExperimentConfig& config,
                                  const std::vector<FeatureDataset>& datasets) {
    ExperimentConfig c = config;
    c.setting = Setting::CrossSourceOnly;
    return run_experiment(c, datasets);
}

ResultTable run_cross_source_target(const ExperimentConfig& config,
                                    const std::vector<FeatureDataset>& datasets) {
    ExperimentConfig c = config;
    c.setting = Setting::CrossSourceTarget;
    return run_experiment(c, datasets);
}

}  // namespace featbench
