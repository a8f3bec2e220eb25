/**
 * @file commands.hpp
 * @brief Command cores behind the CLI: codebook generation for every scheme,
 *        bounds tables, separation statistics and dimension sweeps.
 *
 * These functions hold all of the behaviour; the CLI binary only parses
 * flags and maps exceptions to exit codes (0 ok, 2 invalid arguments,
 * 3 infeasible construction).
 */

#ifndef SPHERECODE_COMMANDS_HPP
#define SPHERECODE_COMMANDS_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spherecode/bounds.hpp"
#include "spherecode/codebook.hpp"
#include "spherecode/codes.hpp"
#include "spherecode/io.hpp"
#include "spherecode/optimize.hpp"

namespace spherecode {

struct GenerateOptions {
    Scheme scheme = Scheme::Simplex;
    std::uint64_t K = 0;
    std::optional<int> n;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> assignment_seed;
    OptimizerConfig optimizer;  // used by the lse/avg schemes
    bool allow_puncture = false;
};

struct GeneratedCodebook {
    Codebook codebook;
    CodebookFileHeader header;
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s;
}

/// Smallest r with sum_{i<=r} C(m,i) >= k_min, if any.
inline std::optional<int> smallest_rm_order(int m, int k_min) {
    std::uint64_t k = 0;
    std::uint64_t binom = 1;  // C(m, 0)
    for (int r = 0; r <= m; ++r) {
        k += binom;
        if (k >= static_cast<std::uint64_t>(k_min)) return r;
        binom = binom * static_cast<std::uint64_t>(m - r) / static_cast<std::uint64_t>(r + 1);
    }
    return std::nullopt;
}

inline LinearCode resolve_rm_code(std::uint64_t K, int n, bool allow_puncture) {
    const int k_min = ceil_log2(K);
    const bool power_of_two = n >= 1 && (n & (n - 1)) == 0;
    if (power_of_two) {
        const int m = std::countr_zero(static_cast<unsigned>(n));
        const auto r = smallest_rm_order(m, k_min);
        if (!r) throw infeasible_error("rm: no RM code of length " + std::to_string(n) + " admits " +
                                       std::to_string(K) + " classes");
        return reed_muller_code(*r, m);
    }
    const int m_below = n > 1 ? std::bit_width(static_cast<unsigned>(n)) - 1 : 0;
    const int lower = 1 << m_below;
    const int upper = 1 << (m_below + 1);
    if (!allow_puncture)
        throw infeasible_error("rm: dimension " + std::to_string(n) +
                               " is not realizable (RM lengths are powers of two); nearest realizable: " +
                               join_ints({lower, upper}) + "; use --allow-puncture to shorten " +
                               std::to_string(upper));
    if (n - 1 == lower && lower >= 2) {
        // one past a realizable length: append a parity coordinate
        const auto r = smallest_rm_order(m_below, k_min);
        if (!r) throw infeasible_error("rm: no RM code of length " + std::to_string(lower) + " admits " +
                                       std::to_string(K) + " classes");
        return extend_with_parity(reed_muller_code(*r, m_below));
    }
    const auto r = smallest_rm_order(m_below + 1, k_min);
    if (!r) throw infeasible_error("rm: no RM code of length " + std::to_string(upper) + " admits " +
                                   std::to_string(K) + " classes");
    return puncture_trailing(reed_muller_code(*r, m_below + 1), upper - n);
}

inline LinearCode resolve_bch_code(std::uint64_t K, int n, bool allow_puncture) {
    if (n < 3)
        throw infeasible_error("bch: dimension " + std::to_string(n) +
                               " is below the shortest BCH length; realizable lengths are 2^m - 1 >= 3");
    const bool native = ((n + 1) & n) == 0;  // n = 2^m - 1
    if (native) return bch_best_for_classes(std::bit_width(static_cast<unsigned>(n)), K);
    const int m_above = std::bit_width(static_cast<unsigned>(n));  // smallest m with 2^m - 1 >= n
    const int lower = (1 << (m_above - 1)) - 1;
    const int upper = (1 << m_above) - 1;
    if (!allow_puncture)
        throw infeasible_error("bch: dimension " + std::to_string(n) +
                               " is not realizable (BCH lengths are 2^m - 1); nearest realizable: " +
                               join_ints({lower, upper}) + "; use --allow-puncture to adapt " +
                               std::to_string(n == lower + 1 ? lower : upper));
    if (n == lower + 1 && lower >= 3) {
        // extended BCH: one parity coordinate past the native length
        return extend_with_parity(bch_best_for_classes(m_above - 1, K));
    }
    return puncture_trailing(bch_best_for_classes(m_above, K), upper - n);
}

inline std::vector<int> rs_realizable_dims() {
    std::vector<int> dims;
    for (int q = 2; q <= 1024; q *= 2) dims.push_back(q * (q - 1));
    return dims;
}

inline LinearCode resolve_rs_code(std::uint64_t K, int n) {
    for (int q = 2; q <= 1024; q *= 2) {
        if (q * (q - 1) != n) continue;
        // smallest message length with q^k_q >= K gives the largest distance
        int k_q = 1;
        std::uint64_t count = static_cast<std::uint64_t>(q);
        while (count < K && k_q < q) {
            ++k_q;
            if (count > UINT64_MAX / static_cast<std::uint64_t>(q))
                count = UINT64_MAX;
            else
                count *= static_cast<std::uint64_t>(q);
        }
        if (count < K)
            throw infeasible_error("rs-simplex: q = " + std::to_string(q) + " admits at most q^q codewords, fewer than " +
                                   std::to_string(K) + " classes");
        return reed_solomon_code(q, k_q);
    }
    throw infeasible_error("rs-simplex: dimension " + std::to_string(n) +
                           " is not realizable (needs n = q(q-1) for q a power of two); realizable: " +
                           join_ints(rs_realizable_dims()));
}

}  // namespace detail

/// Builds the codebook for any scheme, together with the file header
/// (scheme parameters and, for code-based schemes, the certified bound).
inline GeneratedCodebook build_codebook(const GenerateOptions& opts) {
    if (opts.K < 2) throw std::invalid_argument("need at least K = 2 classes");
    nlohmann::json params = nlohmann::json::object();
    std::optional<double> certificate;
    Codebook cb;

    switch (opts.scheme) {
        case Scheme::OneHot: {
            if (opts.n && *opts.n != static_cast<int>(opts.K))
                throw infeasible_error("onehot: dimension must equal K = " + std::to_string(opts.K));
            cb = onehot_codebook(opts.K);
            certificate = 0.0;
            break;
        }
        case Scheme::Simplex: {
            if (opts.n && *opts.n != static_cast<int>(opts.K) - 1)
                throw infeasible_error("simplex: dimension must equal K - 1 = " + std::to_string(opts.K - 1));
            cb = simplex_codebook(opts.K);
            certificate = rankin_converse(opts.K);
            break;
        }
        case Scheme::Random: {
            if (!opts.n) throw std::invalid_argument("random: --dim is required");
            cb = random_codebook(opts.K, *opts.n, opts.seed);
            break;
        }
        case Scheme::OptimizedLSE:
        case Scheme::OptimizedAVG: {
            if (!opts.n) throw std::invalid_argument("optimizer schemes: --dim is required");
            OptimizerConfig cfg = opts.optimizer;
            cfg.loss = opts.scheme == Scheme::OptimizedLSE ? LossKind::LSE : LossKind::AVG;
            cfg.seed = opts.seed;
            auto [optimized, trace] = optimize_prototypes(static_cast<int>(opts.K), *opts.n, cfg);
            cb = std::move(optimized);
            params["epochs"] = cfg.epochs;
            params["learning_rate"] = cfg.learning_rate;
            params["momentum"] = cfg.momentum;
            if (cfg.loss == LossKind::LSE) {
                params["t_start"] = cfg.t_start;
                params["t_end"] = cfg.t_end.value_or(static_cast<double>(opts.K));
            }
            params["final_loss"] = trace.points.back().loss_value;
            break;
        }
        case Scheme::RMCode:
        case Scheme::BCHCode:
        case Scheme::BinaryCode: {
            if (!opts.n) throw std::invalid_argument("code schemes: --dim is required");
            const LinearCode code = opts.scheme == Scheme::BCHCode
                                        ? detail::resolve_bch_code(opts.K, *opts.n, opts.allow_puncture)
                                        : detail::resolve_rm_code(opts.K, *opts.n, opts.allow_puncture);
            cb = codebook_from_code(code, opts.K, opts.assignment_seed);
            cb.scheme = opts.scheme;
            certificate = binary_code_cosine_bound(code);
            params["code"] = code.description();
            params["code_n"] = code.length();
            params["code_k"] = code.dimension();
            params["enumerated_d_min"] = code.minimum_distance();
            if (code.params().rm_r >= 0) params["rm_r"] = code.params().rm_r;
            if (code.params().rm_m >= 0) params["rm_m"] = code.params().rm_m;
            if (code.params().bch_design_distance >= 0)
                params["design_distance"] = code.params().bch_design_distance;
            if (!code.params().punctured_positions.empty())
                params["punctured"] = code.params().punctured_positions.size();
            if (code.family() == CodeFamily::Extended) params["extended"] = true;
            break;
        }
        case Scheme::RSSimplex: {
            if (!opts.n) throw std::invalid_argument("rs-simplex: --dim is required");
            const LinearCode code = detail::resolve_rs_code(opts.K, *opts.n);
            cb = qary_codebook(code, opts.K, opts.assignment_seed);
            const int q = code.field_order();
            certificate = composite_code_cosine_bound(code.formula_d_min().value(), code.length(),
                                             simplex_component_min_distance_sq(q));
            params["code"] = code.description();
            params["q"] = q;
            params["k_q"] = code.params().rs_k;
            params["d_min"] = code.formula_d_min().value();
            break;
        }
    }

    GeneratedCodebook out;
    out.header = make_header(cb, std::move(params), certificate);
    out.codebook = std::move(cb);
    return out;
}

inline GeneratedCodebook cmd_generate(const GenerateOptions& opts, const std::string& out_path,
                                      FileFormat format = FileFormat::HeaderCsv) {
    GeneratedCodebook gen = build_codebook(opts);
    write_codebook_file(out_path, gen.codebook, gen.header, format);
    return gen;
}

// ---------------------------------------------------------------------------
// bounds tables

inline std::vector<BoundsReport> compute_bounds_table(std::uint64_t K, const std::vector<int>& dims) {
    std::vector<BoundsReport> table;
    table.reserve(dims.size());
    for (int n : dims) table.push_back(bounds_report(K, n));
    return table;
}

inline void write_bounds_table(std::ostream& out, const std::vector<BoundsReport>& table, FileFormat format) {
    if (format == FileFormat::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : table) {
            nlohmann::json j;
            j["K"] = r.K;
            j["n"] = r.n;
            j["gv_dmin"] = r.gv_dmin;
            j["achievable_max_cosine"] = r.achievable_max_cosine;
            j["rankin_converse"] = r.converse_min_of_max_cosine;
            j["onehot_reference"] = r.onehot_reference ? nlohmann::json(*r.onehot_reference) : nlohmann::json(nullptr);
            j["tightened_achievable"] = r.tightened_achievable();
            rows.push_back(std::move(j));
        }
        out << rows.dump(2) << "\n";
        return;
    }
    out << "K,n,gv_dmin,achievable_max_cosine,rankin_converse,onehot_reference,tightened_achievable\n";
    for (const auto& r : table) {
        out << r.K << "," << r.n << "," << r.gv_dmin << "," << detail::format_double_17(r.achievable_max_cosine)
            << "," << detail::format_double_17(r.converse_min_of_max_cosine) << ",";
        if (r.onehot_reference) out << detail::format_double_17(*r.onehot_reference);
        out << "," << detail::format_double_17(r.tightened_achievable()) << "\n";
    }
}

// ---------------------------------------------------------------------------
// stats

struct StatsResult {
    CodebookFileHeader header;
    SeparationStats stats;
};

inline StatsResult compute_stats_from_file(const std::string& path, int bins = kDefaultHistogramBins) {
    const LoadedCodebook loaded = read_codebook_file(path);
    return {loaded.header, separation_stats(loaded.codebook, bins)};
}

inline nlohmann::json stats_to_json(const StatsResult& r) {
    nlohmann::json j;
    j["scheme"] = to_string(r.header.scheme);
    j["K"] = r.header.K;
    j["n"] = r.header.n;
    j["certified_max_cosine_bound"] = r.header.certified_max_cosine_bound
                                          ? nlohmann::json(*r.header.certified_max_cosine_bound)
                                          : nlohmann::json(nullptr);
    j["max_cosine"] = r.stats.max_cosine;
    j["mean_cosine"] = r.stats.mean_cosine;
    j["min_cosine"] = r.stats.offdiag_min;
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : r.stats.atoms) atoms.push_back({{"value", a.value}, {"count", a.count}});
    j["atoms"] = std::move(atoms);
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& b : r.stats.histogram)
        if (b.count) hist.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
    j["histogram_nonempty_bins"] = std::move(hist);
    return j;
}

inline void write_histogram_csv(std::ostream& out, const SeparationStats& stats) {
    out << "bin_lo,bin_hi,count\n";
    for (const auto& b : stats.histogram)
        out << detail::format_double_17(b.lo) << "," << detail::format_double_17(b.hi) << "," << b.count << "\n";
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
    std::vector<Scheme> schemes;
    std::uint64_t K = 0;
    std::vector<int> dims;
    std::vector<std::uint64_t> seeds{0};  // applied to the seeded schemes only
    OptimizerConfig optimizer;
    bool allow_puncture = false;
    int bins = kDefaultHistogramBins;
};

struct SweepRow {
    std::string scheme;
    std::uint64_t K = 0;
    int n = 0;
    std::string status;  // "ok" or "skipped"
    double max_cosine = 0.0;
    double mean_cosine = 0.0;
    double max_cosine_seed_min = 0.0;
    double max_cosine_seed_mean = 0.0;
    double max_cosine_seed_max = 0.0;
    std::optional<double> gv_achievable;
    double rankin_converse = 0.0;
    double wall_time_ms = 0.0;
    std::string note;
};

namespace detail {

inline bool scheme_is_seeded(Scheme s) {
    return s == Scheme::Random || s == Scheme::OptimizedLSE || s == Scheme::OptimizedAVG;
}

}  // namespace detail

/// One row per (scheme, n): deterministic schemes run once, seeded schemes
/// run once per seed and report the min/mean/max of the achieved worst-case
/// cosine (max_cosine holds the best, i.e. the minimum). Infeasible points
/// are kept as rows with status "skipped" and the reason in the note.
inline std::vector<SweepRow> run_sweep(const SweepOptions& opts) {
    if (opts.K < 2) throw std::invalid_argument("sweep: need at least K = 2 classes");
    if (opts.seeds.empty()) throw std::invalid_argument("sweep: need at least one seed");
    std::vector<Scheme> schemes = opts.schemes;
    std::sort(schemes.begin(), schemes.end(),
              [](Scheme a, Scheme b) { return to_string(a) < to_string(b); });
    std::vector<int> dims = opts.dims;
    std::sort(dims.begin(), dims.end());

    std::vector<SweepRow> rows;
    for (Scheme scheme : schemes) {
        for (int n : dims) {
            SweepRow row;
            row.scheme = to_string(scheme);
            row.K = opts.K;
            row.n = n;
            row.rankin_converse = rankin_converse(opts.K);
            try {
                row.gv_achievable = achievable_max_cosine(n, opts.K);
            } catch (const std::exception&) {
                row.gv_achievable = std::nullopt;
            }
            const auto start = std::chrono::steady_clock::now();
            try {
                GenerateOptions gopts;
                gopts.scheme = scheme;
                gopts.K = opts.K;
                gopts.n = n;
                gopts.allow_puncture = opts.allow_puncture;
                gopts.optimizer = opts.optimizer;

                const bool seeded = detail::scheme_is_seeded(scheme);
                const std::vector<std::uint64_t> seeds = seeded ? opts.seeds : std::vector<std::uint64_t>{0};
                std::vector<double> max_cosines;
                detail::NeumaierSum mean_acc;
                for (std::uint64_t seed : seeds) {
                    gopts.seed = seed;
                    const GeneratedCodebook gen = build_codebook(gopts);
                    const SeparationStats stats = separation_stats(gen.codebook, opts.bins);
                    max_cosines.push_back(stats.max_cosine);
                    mean_acc.add(stats.mean_cosine);
                }
                row.status = "ok";
                row.max_cosine_seed_min = *std::min_element(max_cosines.begin(), max_cosines.end());
                row.max_cosine_seed_max = *std::max_element(max_cosines.begin(), max_cosines.end());
                detail::NeumaierSum acc;
                for (double v : max_cosines) acc.add(v);
                row.max_cosine_seed_mean = acc.value() / static_cast<double>(max_cosines.size());
                row.max_cosine = row.max_cosine_seed_min;
                row.mean_cosine = mean_acc.value() / static_cast<double>(seeds.size());
            } catch (const std::exception& e) {
                row.status = "skipped";
                row.note = e.what();
            }
            row.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "scheme,K,n,status,max_cosine,mean_cosine,max_cosine_seed_min,max_cosine_seed_mean,"
           "max_cosine_seed_max,gv_achievable,rankin_converse,wall_time_ms,note\n";
    for (const auto& r : rows) {
        out << r.scheme << "," << r.K << "," << r.n << "," << r.status << ",";
        if (r.status == "ok") {
            out << detail::format_double_17(r.max_cosine) << "," << detail::format_double_17(r.mean_cosine) << ","
                << detail::format_double_17(r.max_cosine_seed_min) << ","
                << detail::format_double_17(r.max_cosine_seed_mean) << ","
                << detail::format_double_17(r.max_cosine_seed_max);
        } else {
            out << ",,,,";
        }
        out << ",";
        if (r.gv_achievable) out << detail::format_double_17(*r.gv_achievable);
        out << "," << detail::format_double_17(r.rankin_converse) << "," << r.wall_time_ms << ",";
        std::string note = r.note;
        std::replace(note.begin(), note.end(), ',', ';');
        out << "\"" << note << "\"\n";
    }
}

inline void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["scheme"] = r.scheme;
        j["K"] = r.K;
        j["n"] = r.n;
        j["status"] = r.status;
        if (r.status == "ok") {
            j["max_cosine"] = r.max_cosine;
            j["mean_cosine"] = r.mean_cosine;
            j["max_cosine_seed_min"] = r.max_cosine_seed_min;
            j["max_cosine_seed_mean"] = r.max_cosine_seed_mean;
            j["max_cosine_seed_max"] = r.max_cosine_seed_max;
        }
        j["gv_achievable"] = r.gv_achievable ? nlohmann::json(*r.gv_achievable) : nlohmann::json(nullptr);
        j["rankin_converse"] = r.rankin_converse;
        j["wall_time_ms"] = r.wall_time_ms;
        j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
}

}  // namespace spherecode

#endif  // SPHERECODE_COMMANDS_HPP
