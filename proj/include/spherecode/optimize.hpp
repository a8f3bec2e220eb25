/**
 * @file optimize.hpp
 * @brief Projected gradient descent with momentum on the product of unit
 *        spheres, under two relaxations of the min-max separation problem.
 *
 * The average relaxation minimises the mean over rows of the per-row maximum
 * of M = C C^T - 2I; the log-sum-exp relaxation minimises the smooth max
 * (1/t) log sum_{i != j} exp(t <c_i, c_j>) with a per-epoch temperature
 * schedule. Gradients are full-batch and deterministic; the best iterate by
 * exact max cosine is returned.
 */

#ifndef SPHERECODE_OPTIMIZE_HPP
#define SPHERECODE_OPTIMIZE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spherecode/codebook.hpp"

namespace spherecode {

enum class LossKind { LSE, AVG };

struct OptimizerConfig {
    LossKind loss = LossKind::LSE;
    int epochs = 1000;
    double learning_rate = 0.1;
    double momentum = 0.9;
    double t_start = 1.0;
    std::optional<double> t_end;  // defaults to K at run time
    std::uint64_t seed = 0;
    bool tangent_projection = false;  // project gradients to the tangent space first

    void validate() const {
        if (epochs < 1) throw std::invalid_argument("OptimizerConfig: epochs must be >= 1");
        if (!(learning_rate > 0.0)) throw std::invalid_argument("OptimizerConfig: learning rate must be > 0");
        if (momentum < 0.0 || momentum >= 1.0)
            throw std::invalid_argument("OptimizerConfig: momentum must be in [0, 1)");
        if (!(t_start > 0.0)) throw std::invalid_argument("OptimizerConfig: temperature must be > 0");
        if (t_end && !(*t_end > 0.0)) throw std::invalid_argument("OptimizerConfig: temperature must be > 0");
    }
};

struct TracePoint {
    double loss_value = 0.0;
    double max_cosine = 0.0;   // exact, recomputed from the Gram matrix
    double temperature = 0.0;  // 0 for the AVG loss
};

/// Per-epoch history; points[e] is the iterate after e epochs (points[0] is
/// the initialization), so a run of E epochs logs E+1 points.
struct OptimizerTrace {
    std::vector<TracePoint> points;
};

struct LossEval {
    double value = 0.0;
    Eigen::MatrixXd gradient;
};

namespace detail {

inline double max_offdiagonal_cosine(const Eigen::MatrixXd& C) {
    const Eigen::MatrixXd gram = C * C.transpose();
    double best = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < gram.rows(); ++i)
        for (Eigen::Index j = i + 1; j < gram.cols(); ++j) best = std::max(best, gram(i, j));
    return best;
}

}  // namespace detail

/// Mean over rows of the row maximum of M = C C^T - 2I, with the exact
/// subgradient of the selected entries (lowest index wins ties). The -2I
/// shift keeps the diagonal below every attainable cosine for unit rows.
inline LossEval loss_avg(const Eigen::MatrixXd& C) {
    const Eigen::Index K = C.rows();
    if (K < 2) throw std::invalid_argument("loss_avg: need at least two rows");
    Eigen::MatrixXd M = C * C.transpose();
    M.diagonal().array() -= 2.0;

    LossEval out;
    out.gradient = Eigen::MatrixXd::Zero(K, C.cols());
    double value = 0.0;
    const double inv_k = 1.0 / static_cast<double>(K);
    for (Eigen::Index i = 0; i < K; ++i) {
        Eigen::Index arg = 0;
        double best = M(i, 0);
        for (Eigen::Index j = 1; j < K; ++j)
            if (M(i, j) > best) {
                best = M(i, j);
                arg = j;
            }
        value += best * inv_k;
        if (arg == i) {
            // diagonal entry ||c_i||^2 - 2 selected (degenerate tie case)
            out.gradient.row(i) += 2.0 * inv_k * C.row(i);
        } else {
            out.gradient.row(i) += inv_k * C.row(arg);
            out.gradient.row(arg) += inv_k * C.row(i);
        }
    }
    out.value = value;
    return out;
}

/// Smooth-max relaxation (1/t) log sum_{i != j} exp(t <c_i, c_j>), evaluated
/// with max-shifted exponentials over the unordered pairs and doubled to
/// match the ordered sum. The gradient is analytic: (2/S) W C with
/// W_ij = exp(t(G_ij - G_max)) off the diagonal.
inline LossEval loss_lse(const Eigen::MatrixXd& C, double t) {
    const Eigen::Index K = C.rows();
    if (K < 2) throw std::invalid_argument("loss_lse: need at least two rows");
    if (!(t > 0.0)) throw std::invalid_argument("loss_lse: temperature must be > 0");
    const Eigen::MatrixXd gram = C * C.transpose();

    double shift = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < K; ++i)
        for (Eigen::Index j = i + 1; j < K; ++j) shift = std::max(shift, gram(i, j));

    Eigen::MatrixXd weights(K, K);
    double sum_ordered = 0.0;
    for (Eigen::Index i = 0; i < K; ++i) {
        weights(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < K; ++j) {
            const double w = std::exp(t * (gram(i, j) - shift));
            weights(i, j) = w;
            weights(j, i) = w;
            sum_ordered += 2.0 * w;
        }
    }

    LossEval out;
    out.value = shift + std::log(sum_ordered) / t;
    out.gradient = (2.0 / sum_ordered) * (weights * C);
    return out;
}

/// Normalizes every row to unit Euclidean norm. A zero row has no projection
/// onto the sphere and is rejected.
inline Eigen::MatrixXd project_rows_to_sphere(Eigen::MatrixXd C) {
    for (Eigen::Index i = 0; i < C.rows(); ++i) {
        const double norm = C.row(i).norm();
        if (norm == 0.0 || !std::isfinite(norm))
            throw std::invalid_argument("degenerate prototype: row " + std::to_string(i) +
                                        " cannot be projected to the sphere");
        C.row(i) /= norm;
    }
    return C;
}

/// Runs projected gradient descent with momentum from a seeded uniform
/// spherical initialization and returns the best-seen iterate by exact max
/// cosine together with the full trace.
inline std::pair<Codebook, OptimizerTrace> optimize_prototypes(int K, int n, const OptimizerConfig& cfg) {
    cfg.validate();
    if (K < 2) throw std::invalid_argument("optimize_prototypes: need K >= 2");
    if (n < 1) throw std::invalid_argument("optimize_prototypes: need n >= 1");
    detail::check_codebook_size(static_cast<std::uint64_t>(K), static_cast<std::uint64_t>(n));

    const double t_end = cfg.t_end.value_or(static_cast<double>(K));
    const auto temperature_at = [&](int epoch) {
        if (cfg.epochs == 1) return cfg.t_start;
        return cfg.t_start + (t_end - cfg.t_start) * static_cast<double>(epoch) /
                                 static_cast<double>(cfg.epochs - 1);
    };

    std::mt19937_64 rng(cfg.seed);
    Eigen::MatrixXd C(K, n);
    for (int i = 0; i < K; ++i) {
        double norm_sq = 0.0;
        do {
            norm_sq = 0.0;
            for (int c = 0; c < n; ++c) {
                const double g = detail::gaussian(rng);
                C(i, c) = g;
                norm_sq += g * g;
            }
        } while (norm_sq == 0.0);
        C.row(i) /= std::sqrt(norm_sq);
    }

    Eigen::MatrixXd velocity = Eigen::MatrixXd::Zero(K, n);
    OptimizerTrace trace;
    trace.points.reserve(static_cast<std::size_t>(cfg.epochs) + 1);
    double best_cos = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd best_c;

    const auto record = [&](const Eigen::MatrixXd& iterate, double t, int epoch) {
        const LossEval eval = cfg.loss == LossKind::LSE ? loss_lse(iterate, t) : loss_avg(iterate);
        if (!std::isfinite(eval.value))
            throw std::runtime_error("optimize_prototypes: non-finite loss at epoch " + std::to_string(epoch));
        const double max_cos = detail::max_offdiagonal_cosine(iterate);
        trace.points.push_back({eval.value, max_cos, cfg.loss == LossKind::LSE ? t : 0.0});
        if (max_cos < best_cos) {
            best_cos = max_cos;
            best_c = iterate;
        }
        return eval;
    };

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        const double t = temperature_at(epoch);
        LossEval eval = record(C, t, epoch);
        if (cfg.tangent_projection) {
            for (int i = 0; i < K; ++i)
                eval.gradient.row(i) -= eval.gradient.row(i).dot(C.row(i)) * C.row(i);
        }
        velocity = cfg.momentum * velocity + eval.gradient;
        C -= cfg.learning_rate * velocity;
        try {
            C = project_rows_to_sphere(std::move(C));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string(e.what()) + " at epoch " + std::to_string(epoch));
        }
    }
    record(C, temperature_at(cfg.epochs - 1), cfg.epochs);

    Codebook cb;
    cb.num_classes = K;
    cb.dim = n;
    cb.vectors = std::move(best_c);
    cb.scheme = cfg.loss == LossKind::LSE ? Scheme::OptimizedLSE : Scheme::OptimizedAVG;
    cb.seed = cfg.seed;
    return {std::move(cb), std::move(trace)};
}

}  // namespace spherecode

#endif  // SPHERECODE_OPTIMIZE_HPP
