#include "featbench/lssvm.hpp"

#include <algorithm>
#include <cmath>

#include "featbench/errors.hpp"
#include "featbench/labels.hpp"
#include "featbench/linalg.hpp"

namespace featbench {

namespace {

void validate_binary_labels(const std::vector<double>& y) {
    bool has_pos = false, has_neg = false;
    for (double v : y) {
        if (v == 1.0) has_pos = true;
        else if (v == -1.0) has_neg = true;
        else throw InvalidArgument("lssvm_solve: labels must be exactly +1 or -1");
    }
    if (!has_pos || !has_neg) throw SingleClass("lssvm_solve: both classes must be present");
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    return out;
}

std::vector<std::vector<std::size_t>> stratified_folds(const std::vector<int>& labels,
                                                       std::size_t folds, RngStream rng) {
    std::vector<std::vector<std::size_t>> out(folds);
    for (int cls : distinct_classes(labels)) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == cls) idx.push_back(i);
        for (std::size_t i = idx.size(); i-- > 1;)
            std::swap(idx[i], idx[rng.next_index(i + 1)]);
        for (std::size_t i = 0; i < idx.size(); ++i) out[i % folds].push_back(idx[i]);
    }
    for (auto& fold : out) std::sort(fold.begin(), fold.end());
    return out;
}

}  // namespace

LssvmSolution lssvm_solve(const Matrix& k, const std::vector<double>& y, double c) {
    const std::size_t n = k.rows();
    if (k.cols() != n || y.size() != n || n == 0)
        throw DimensionMismatch("lssvm_solve: K must be square with one label per row");
    if (!(c > 0.0)) throw InvalidArgument("lssvm_solve: C must be positive");
    validate_binary_labels(y);

    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = y[i] * y[j] * k(i, j);
    add_scaled_identity(a, 1.0 / c);

    // Eliminate b: with A = Ω + I/C, solve A·ν = 1̄ and A·μ = Y, then
    // b = Yᵀν / Yᵀμ and α = ν − b·μ, which restores Yᵀα = 0.
    Matrix rhs(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        rhs(i, 0) = 1.0;
        rhs(i, 1) = y[i];
    }
    const Matrix sol = cholesky_solve(a, rhs);
    double yt_nu = 0.0, yt_mu = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        yt_nu += y[i] * sol(i, 0);
        yt_mu += y[i] * sol(i, 1);
    }
    LssvmSolution out;
    out.bias = yt_nu / yt_mu;
    out.alphas.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.alphas[i] = sol(i, 0) - out.bias * sol(i, 1);
    return out;
}

TrainedLssvm lssvm_fit(const Matrix& x, const std::vector<int>& labels,
                       const KernelSpec& spec, double c) {
    if (labels.size() != x.rows())
        throw DimensionMismatch("lssvm_fit: label count differs from row count");
    const std::vector<int> classes = distinct_classes(labels);
    if (classes.size() < 2) throw SingleClass("lssvm_fit: at least two classes required");

    TrainedLssvm model{classes, spec, c, x, labels, {}};
    const Matrix k = kernel_matrix(spec, x, x);
    std::vector<double> y(labels.size());
    for (int cls : classes) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            y[i] = labels[i] == cls ? 1.0 : -1.0;
        LssvmSolution sol = lssvm_solve(k, y, c);
        model.machines.push_back({cls, std::move(sol.alphas), sol.bias});
    }
    return model;
}

std::vector<double> lssvm_decision_values(const TrainedLssvm& model, std::size_t machine,
                                          const Matrix& queries) {
    const LssvmBinary& m = model.machines[machine];
    const Matrix k = kernel_matrix(model.spec, queries, model.rows);
    std::vector<double> values(queries.rows(), m.bias);
    for (std::size_t i = 0; i < queries.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < model.rows.rows(); ++j) {
            const double yj = model.labels[j] == m.class_id ? 1.0 : -1.0;
            acc += m.alphas[j] * yj * k(i, j);
        }
        values[i] += acc;
    }
    return values;
}

std::vector<int> lssvm_predict(const TrainedLssvm& model, const Matrix& queries) {
    if (queries.cols() != model.rows.cols())
        throw DimensionMismatch("lssvm_predict: query dimension differs from training data");
    const Matrix k = kernel_matrix(model.spec, queries, model.rows);
    Matrix scores(queries.rows(), model.classes.size());
    for (std::size_t mi = 0; mi < model.machines.size(); ++mi) {
        const LssvmBinary& m = model.machines[mi];
        for (std::size_t i = 0; i < queries.rows(); ++i) {
            double acc = m.bias;
            for (std::size_t j = 0; j < model.rows.rows(); ++j) {
                const double yj = model.labels[j] == m.class_id ? 1.0 : -1.0;
                acc += m.alphas[j] * yj * k(i, j);
            }
            scores(i, mi) = acc;
        }
    }
    return argmax_classes(scores, model.classes);
}

std::pair<double, double> lssvm_grid_search(const Matrix& x, const std::vector<int>& labels,
                                            KernelKind kind, const LssvmGrid& grid,
                                            RngStream rng) {
    if (labels.size() != x.rows())
        throw DimensionMismatch("lssvm_grid_search: label count differs from row count");
    const std::vector<int> classes = distinct_classes(labels);
    if (classes.size() < 2) throw SingleClass("lssvm_grid_search: at least two classes required");
    std::size_t min_class = labels.size();
    for (int cls : classes) {
        std::size_t n = 0;
        for (int l : labels)
            if (l == cls) ++n;
        min_class = std::min(min_class, n);
    }
    const std::size_t folds = std::min(grid.folds, min_class);
    if (folds < 2) return {100.0, 1.0};  // too few samples to validate; mid-grid default

    const std::vector<double> sigmas =
        kind == KernelKind::Rbf ? grid.sigma_values : std::vector<double>{1.0};
    const auto fold_idx = stratified_folds(labels, folds, rng);
    const Matrix base = kind == KernelKind::Rbf ? pairwise_sq_dists(x, x) : matmul_nt(x, x);

    std::vector<std::vector<std::size_t>> correct(
        grid.c_values.size(), std::vector<std::size_t>(sigmas.size(), 0));

    for (std::size_t si = 0; si < sigmas.size(); ++si) {
        Matrix k = base;
        if (kind == KernelKind::Rbf) {
            const double inv_s2 = 1.0 / (sigmas[si] * sigmas[si]);
            for (double& v : k.data()) v = std::exp(-(v < 0.0 ? 0.0 : v) * inv_s2);
        }
        for (std::size_t f = 0; f < folds; ++f) {
            const std::vector<std::size_t>& val = fold_idx[f];
            std::vector<std::size_t> train;
            for (std::size_t g = 0; g < folds; ++g)
                if (g != f) train.insert(train.end(), fold_idx[g].begin(), fold_idx[g].end());
            std::sort(train.begin(), train.end());

            const Matrix k_tt = submatrix(k, train, train);
            const Matrix k_vt = submatrix(k, val, train);
            std::vector<int> train_labels(train.size());
            for (std::size_t i = 0; i < train.size(); ++i) train_labels[i] = labels[train[i]];
            const std::vector<int> fold_classes = distinct_classes(train_labels);
            if (fold_classes.size() < 2) continue;

            for (std::size_t ci = 0; ci < grid.c_values.size(); ++ci) {
                Matrix scores(val.size(), fold_classes.size());
                std::vector<double> y(train.size());
                for (std::size_t mc = 0; mc < fold_classes.size(); ++mc) {
                    for (std::size_t i = 0; i < train.size(); ++i)
                        y[i] = train_labels[i] == fold_classes[mc] ? 1.0 : -1.0;
                    const LssvmSolution sol = lssvm_solve(k_tt, y, grid.c_values[ci]);
                    for (std::size_t v = 0; v < val.size(); ++v) {
                        double acc = sol.bias;
                        for (std::size_t j = 0; j < train.size(); ++j)
                            acc += sol.alphas[j] * y[j] * k_vt(v, j);
                        scores(v, mc) = acc;
                    }
                }
                const std::vector<int> pred = argmax_classes(scores, fold_classes);
                for (std::size_t v = 0; v < val.size(); ++v)
                    if (pred[v] == labels[val[v]]) ++correct[ci][si];
            }
        }
    }

    std::size_t best_c = 0, best_s = 0, best = 0;
    bool first = true;
    for (std::size_t ci = 0; ci < grid.c_values.size(); ++ci)
        for (std::size_t si = 0; si < sigmas.size(); ++si)
            if (first || correct[ci][si] > best) {
                best = correct[ci][si];
                best_c = ci;
                best_s = si;
                first = false;
            }
    return {grid.c_values[best_c], sigmas[best_s]};
}

}  // namespace featbench
