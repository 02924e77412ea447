#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "featbench/elm.hpp"
#include "featbench/kelm.hpp"
#include "featbench/lssvm.hpp"
#include "featbench/nn.hpp"
#include "featbench/svm.hpp"

namespace featbench {

enum class Method { Nn, Svm, Lssvm, Elm, Kelm };

inline constexpr Method kAllMethods[] = {Method::Nn, Method::Svm, Method::Lssvm, Method::Elm,
                                         Method::Kelm};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Per-method hyperparameters. Defaults: SVM C=1000, σ=1; ELM C=100,
/// L=5000; KELM C=100, σ=0.01; LSSVM cross-validated over its grid unless
/// both lssvm_c and lssvm_sigma are pinned. All kernels default to RBF.
struct MethodParams {
    double svm_c = 1000.0;
    double svm_sigma = 1.0;
    KernelKind svm_kernel = KernelKind::Rbf;

    std::optional<double> lssvm_c;
    std::optional<double> lssvm_sigma;
    KernelKind lssvm_kernel = KernelKind::Rbf;
    LssvmGrid lssvm_grid;

    double elm_c = 100.0;
    std::size_t elm_hidden = 5000;

    double kelm_c = 100.0;
    double kelm_sigma = 0.01;
    KernelKind kelm_kernel = KernelKind::Rbf;
};

using AnyModel = std::variant<TrainedNN, TrainedSvmMulticlass, TrainedLssvm, TrainedElm,
                              TrainedKelm>;

/// model_rng feeds the ELM weight draw and the LSSVM fold shuffle; the
/// other methods are deterministic in their inputs and ignore it.
AnyModel fit_classifier(Method method, const Matrix& x, const std::vector<int>& labels,
                        const MethodParams& params, RngStream model_rng);

std::vector<int> predict_classifier(const AnyModel& model, const Matrix& queries);

}  // namespace featbench
