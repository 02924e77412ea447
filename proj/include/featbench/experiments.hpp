#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "featbench/classifier.hpp"
#include "featbench/dataset.hpp"
#include "featbench/results.hpp"
#include "featbench/splits.hpp"

namespace featbench {

enum class Setting { SingleDomain = 1, CrossSourceOnly = 2, CrossSourceTarget = 3 };

/// Training rows drawn per class when a domain serves as the (single or
/// source) training domain: 20 for Amazon, 8 otherwise.
std::size_t default_train_per_class(const Domain& domain);

struct ExperimentConfig {
    Setting setting = Setting::SingleDomain;
    std::vector<Method> methods{kAllMethods, kAllMethods + 5};
    Layer layer = Layer::Raw;
    std::size_t splits = 20;
    std::uint64_t seed = 0;
    // per-domain n_s/c overrides keyed by domain code; defaults apply
    // otherwise (Amazon 20, everything else 8)
    std::map<std::string, std::size_t> train_per_class;
    std::size_t target_per_class = 3;  // labeled target rows per class, setting 3
    MethodParams params;
    bool normalize = false;  // per-row L2 normalization of features
    int threads = 1;

    std::size_t resolve_train_per_class(const Domain& domain) const;
};

/// One table column: a domain (setting 1) or an ordered source→target pair
/// (settings 2 and 3). Indices refer into the dataset list.
struct TaskSpec {
    std::string key;
    std::size_t source = 0;
    std::size_t target = 0;  // == source for setting 1
};

/// Canonical column order: the four object domains follow the published
/// table layout; synthetic domains sort lexicographically.
std::vector<TaskSpec> make_tasks(Setting setting, const std::vector<FeatureDataset>& datasets);

/// Row selection for one (task, split): the same plan is produced for every
/// method, so paired comparisons see identical splits.
struct SplitPlan {
    std::vector<std::size_t> source_train;  // rows of the source dataset
    std::vector<std::size_t> target_train;  // rows of the target dataset (setting 3)
    std::vector<std::size_t> test;          // rows of the test dataset
};

SplitPlan make_split_plan(const ExperimentConfig& config,
                          const std::vector<FeatureDataset>& datasets, const TaskSpec& task,
                          std::size_t split_index);

ResultTable run_single_domain(const ExperimentConfig& config,
                              const std::vector<FeatureDataset>& datasets);
ResultTable run_cross_source_only(const ExperimentConfig& config,
                                  const std::vector<FeatureDataset>& datasets);
ResultTable run_cross_source_target(const ExperimentConfig& config,
                                    const std::vector<FeatureDataset>& datasets);

/// Dispatches on config.setting.
ResultTable run_experiment(const ExperimentConfig& config,
                           const std::vector<FeatureDataset>& datasets);

}  // namespace featbench
