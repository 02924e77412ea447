#include "featbench/classifier.hpp"

#include <cctype>
#include <tuple>

#include "featbench/errors.hpp"

namespace featbench {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Nn: return "NN";
        case Method::Svm: return "SVM";
        case Method::Lssvm: return "LSSVM";
        case Method::Elm: return "ELM";
        case Method::Kelm: return "KELM";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    std::string lower(name);
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "nn") return Method::Nn;
    if (lower == "svm") return Method::Svm;
    if (lower == "lssvm") return Method::Lssvm;
    if (lower == "elm") return Method::Elm;
    if (lower == "kelm") return Method::Kelm;
    return std::nullopt;
}

AnyModel fit_classifier(Method method, const Matrix& x, const std::vector<int>& labels,
                        const MethodParams& params, RngStream model_rng) {
    switch (method) {
        case Method::Nn:
            return nn_fit(x, labels);
        case Method::Svm:
            return svm_fit(x, labels, {params.svm_kernel, params.svm_sigma}, params.svm_c);
        case Method::Lssvm: {
            double c, sigma;
            if (params.lssvm_c && params.lssvm_sigma) {
                c = *params.lssvm_c;
                sigma = *params.lssvm_sigma;
            } else {
                std::tie(c, sigma) = lssvm_grid_search(x, labels, params.lssvm_kernel,
                                                       params.lssvm_grid, model_rng);
                if (params.lssvm_c) c = *params.lssvm_c;
                if (params.lssvm_sigma) sigma = *params.lssvm_sigma;
            }
            return lssvm_fit(x, labels, {params.lssvm_kernel, sigma}, c);
        }
        case Method::Elm:
            return elm_fit(x, labels, params.elm_hidden, params.elm_c, model_rng);
        case Method::Kelm:
            return kelm_fit(x, labels, {params.kelm_kernel, params.kelm_sigma}, params.kelm_c);
    }
    throw InvalidArgument("fit_classifier: unknown method");
}

std::vector<int> predict_classifier(const AnyModel& model, const Matrix& queries) {
    return std::visit(
        [&](const auto& m) -> std::vector<int> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, TrainedNN>) return nn_predict(m, queries);
            else if constexpr (std::is_same_v<T, TrainedSvmMulticlass>) return svm_predict(m, queries);
            else if constexpr (std::is_same_v<T, TrainedLssvm>) return lssvm_predict(m, queries);
            else if constexpr (std::is_same_v<T, TrainedElm>) return elm_predict(m, queries);
            else return kelm_predict(m, queries);
        },
        model);
}

}  // namespace featbench
