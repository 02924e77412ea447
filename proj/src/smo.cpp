#include "featbench/smo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "featbench/errors.hpp"

namespace featbench {

namespace {

constexpr double kTau = 1e-12;  // stand-in curvature for flat pair directions

// In I_up the dual variable can move "up" along the equality constraint,
// in I_low it can move "down".
bool in_up(double y, double a, double c) { return (y > 0.0 && a < c) || (y < 0.0 && a > 0.0); }
bool in_low(double y, double a, double c) { return (y < 0.0 && a < c) || (y > 0.0 && a > 0.0); }

}  // namespace

double smo_dual_objective(const Matrix& k, const std::vector<double>& y,
                          const std::vector<double>& alphas) {
    const std::size_t n = alphas.size();
    double quad = 0.0, lin = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        lin += alphas[i];
        for (std::size_t j = 0; j < n; ++j)
            quad += y[i] * y[j] * alphas[i] * alphas[j] * k(i, j);
    }
    return lin - 0.5 * quad;
}

SmoResult smo_solve(const Matrix& k, const std::vector<double>& y, double c,
                    const SmoOptions& options) {
    const std::size_t n = k.rows();
    if (k.cols() != n || y.size() != n || n == 0)
        throw DimensionMismatch("smo_solve: K must be square with one label per row");
    if (!(c > 0.0)) throw InvalidArgument("smo_solve: C must be positive");
    bool has_pos = false, has_neg = false;
    for (double v : y) {
        if (v == 1.0) has_pos = true;
        else if (v == -1.0) has_neg = true;
        else throw InvalidArgument("smo_solve: labels must be exactly +1 or -1");
    }
    if (!has_pos || !has_neg) throw SingleClass("smo_solve: both classes must be present");

    // Minimization form: f(α) = ½αᵀQα − 1ᵀα with Q_ij = y_i y_j K_ij.
    // grad_i = y_i·u_i − 1 where u_i = Σ_j α_j y_j K_ij, so −y_i·grad_i = y_i − u_i.
    std::vector<double> alphas(n, 0.0);
    std::vector<double> grad(n, -1.0);
    const std::size_t max_updates = options.max_updates_per_row * n;
    std::size_t updates = 0;
    bool converged = false;

    while (updates < max_updates) {
        // Maximal violating pair.
        double m_up = -std::numeric_limits<double>::infinity();
        double m_low = std::numeric_limits<double>::infinity();
        std::size_t i = n, j = n;
        for (std::size_t t = 0; t < n; ++t) {
            const double v = -y[t] * grad[t];
            if (in_up(y[t], alphas[t], c) && v > m_up) {
                m_up = v;
                i = t;
            }
            if (in_low(y[t], alphas[t], c) && v < m_low) {
                m_low = v;
                j = t;
            }
        }
        if (i == n || j == n || m_up - m_low <= options.tol) {
            converged = true;
            break;
        }

        const double old_ai = alphas[i], old_aj = alphas[j];
        if (y[i] != y[j]) {
            double quad = k(i, i) + k(j, j) + 2.0 * k(i, j) * y[i] * y[j];
            if (quad <= 0.0) quad = kTau;
            const double delta = (-grad[i] - grad[j]) / quad;
            const double diff = alphas[i] - alphas[j];
            alphas[i] += delta;
            alphas[j] += delta;
            if (diff > 0.0) {
                if (alphas[j] < 0.0) { alphas[j] = 0.0; alphas[i] = diff; }
            } else {
                if (alphas[i] < 0.0) { alphas[i] = 0.0; alphas[j] = -diff; }
            }
            if (diff > 0.0) {
                if (alphas[i] > c) { alphas[i] = c; alphas[j] = c - diff; }
            } else {
                if (alphas[j] > c) { alphas[j] = c; alphas[i] = c + diff; }
            }
        } else {
            double quad = k(i, i) + k(j, j) - 2.0 * k(i, j);
            if (quad <= 0.0) quad = kTau;
            const double delta = (grad[i] - grad[j]) / quad;
            const double sum = alphas[i] + alphas[j];
            alphas[i] -= delta;
            alphas[j] += delta;
            if (sum > c) {
                if (alphas[i] > c) { alphas[i] = c; alphas[j] = sum - c; }
            } else {
                if (alphas[j] < 0.0) { alphas[j] = 0.0; alphas[i] = sum; }
            }
            if (sum > c) {
                if (alphas[j] > c) { alphas[j] = c; alphas[i] = sum - c; }
            } else {
                if (alphas[i] < 0.0) { alphas[i] = 0.0; alphas[j] = sum; }
            }
        }
        alphas[i] = std::clamp(alphas[i], 0.0, c);
        alphas[j] = std::clamp(alphas[j], 0.0, c);

        const double dai = alphas[i] - old_ai;
        const double daj = alphas[j] - old_aj;
        for (std::size_t t = 0; t < n; ++t)
            grad[t] += y[t] * (y[i] * k(i, t) * dai + y[j] * k(j, t) * daj);
        ++updates;

        // Refresh the gradient periodically; the incremental form drifts by
        // roundoff over long runs.
        if (updates % 1024 == 0) {
            for (std::size_t t = 0; t < n; ++t) {
                double u = 0.0;
                for (std::size_t s = 0; s < n; ++s) u += alphas[s] * y[s] * k(s, t);
                grad[t] = y[t] * u - 1.0;
            }
        }
        if (options.on_update) options.on_update(alphas);
    }

    // Final exact gradient for the bias.
    for (std::size_t t = 0; t < n; ++t) {
        double u = 0.0;
        for (std::size_t s = 0; s < n; ++s) u += alphas[s] * y[s] * k(s, t);
        grad[t] = y[t] * u - 1.0;
    }
    double free_sum = 0.0;
    std::size_t free_count = 0;
    double m_up = -std::numeric_limits<double>::infinity();
    double m_low = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
        const double v = -y[t] * grad[t];
        if (alphas[t] > 0.0 && alphas[t] < c) {
            free_sum += v;
            ++free_count;
        }
        if (in_up(y[t], alphas[t], c)) m_up = std::max(m_up, v);
        if (in_low(y[t], alphas[t], c)) m_low = std::min(m_low, v);
    }
    const double bias = free_count > 0 ? free_sum / static_cast<double>(free_count)
                                       : 0.5 * (m_up + m_low);

    return {std::move(alphas), bias, converged, updates};
}

}  // namespace featbench
