#include "featbench/svm.hpp"

#include <string>

#include "featbench/errors.hpp"
#include "featbench/labels.hpp"

namespace featbench {

TrainedSvmMulticlass svm_fit(const Matrix& x, const std::vector<int>& labels,
                             const KernelSpec& spec, double c,
                             const SmoOptions& options) {
    if (labels.size() != x.rows())
        throw DimensionMismatch("svm_fit: label count differs from row count");
    const std::vector<int> classes = distinct_classes(labels);
    if (classes.size() < 2) throw SingleClass("svm_fit: at least two classes required");

    TrainedSvmMulticlass model{classes, spec, c, {}};
    model.machines.reserve(classes.size() * (classes.size() - 1) / 2);
    for (std::size_t a = 0; a < classes.size(); ++a) {
        for (std::size_t b = a + 1; b < classes.size(); ++b) {
            TrainedSvmBinary machine;
            machine.class_pos = classes[a];
            machine.class_neg = classes[b];
            machine.spec = spec;
            machine.c = c;
            std::vector<std::size_t> idx;
            for (std::size_t r = 0; r < labels.size(); ++r)
                if (labels[r] == machine.class_pos || labels[r] == machine.class_neg)
                    idx.push_back(r);
            machine.rows = take_rows(x, idx);
            machine.y.reserve(idx.size());
            for (std::size_t r : idx)
                machine.y.push_back(labels[r] == machine.class_pos ? 1.0 : -1.0);

            const Matrix k = kernel_matrix(spec, machine.rows, machine.rows);
            const std::string tag = "svm pair (" + std::to_string(machine.class_pos) + "," +
                                    std::to_string(machine.class_neg) + "): ";
            try {
                SmoResult res = smo_solve(k, machine.y, c, options);
                machine.alphas = std::move(res.alphas);
                machine.bias = res.bias;
                machine.converged = res.converged;
            } catch (const SingleClass& e) {
                throw SingleClass(tag + e.what());
            } catch (const InvalidArgument& e) {
                throw InvalidArgument(tag + e.what());
            }
            for (std::size_t r = 0; r < machine.alphas.size(); ++r)
                if (machine.alphas[r] > 0.0) machine.support.push_back(r);
            model.machines.push_back(std::move(machine));
        }
    }
    return model;
}

std::vector<double> svm_decision_values(const TrainedSvmBinary& machine, const Matrix& queries) {
    const Matrix sv = take_rows(machine.rows, machine.support);
    const Matrix k = kernel_matrix(machine.spec, queries, sv);  // m × |SV|
    std::vector<double> values(queries.rows(), machine.bias);
    for (std::size_t i = 0; i < queries.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t s = 0; s < machine.support.size(); ++s) {
            const std::size_t r = machine.support[s];
            acc += machine.alphas[r] * machine.y[r] * k(i, s);
        }
        values[i] += acc;
    }
    return values;
}

std::vector<int> svm_predict(const TrainedSvmMulticlass& model, const Matrix& queries) {
    if (model.machines.empty()) throw InvalidArgument("svm_predict: model has no machines");
    if (queries.cols() != model.machines.front().rows.cols())
        throw DimensionMismatch("svm_predict: query dimension differs from training data");

    // Majority vote over pairwise machines; sign zero counts for the
    // positive (lower-index) class.
    Matrix votes(queries.rows(), model.classes.size());
    LabelEncoding enc;  // index lookup over the model's class list
    enc.classes = model.classes;
    for (const TrainedSvmBinary& machine : model.machines) {
        const std::vector<double> f = svm_decision_values(machine, queries);
        const std::size_t pos = enc.index_of(machine.class_pos);
        const std::size_t neg = enc.index_of(machine.class_neg);
        for (std::size_t i = 0; i < f.size(); ++i)
            votes(i, f[i] >= 0.0 ? pos : neg) += 1.0;
    }
    return argmax_classes(votes, model.classes);
}

}  // namespace featbench
