/**
 * @file codebook.hpp
 * @brief Codebooks of K unit vectors on S^(n-1) and their separation statistics.
 *
 * Maps binary and q-ary block codes onto the hypersphere (the sign mapping
 * b -> 2(b - 1/2)/sqrt(n) and its q-ary composite with a per-symbol simplex),
 * and provides the closed-form regular simplex, one-hot and uniform random
 * baselines. Separation statistics use compensated (Neumaier) summation so
 * that structurally exact cosines (0, -1, dyadic values) come out exact.
 */

#ifndef SPHERECODE_CODEBOOK_HPP
#define SPHERECODE_CODEBOOK_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "spherecode/codes.hpp"
#include "spherecode/errors.hpp"

namespace spherecode {

enum class Scheme { OneHot, Simplex, RMCode, BCHCode, RSSimplex, BinaryCode, Random, OptimizedLSE, OptimizedAVG };

inline std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::OneHot: return "onehot";
        case Scheme::Simplex: return "simplex";
        case Scheme::RMCode: return "rm";
        case Scheme::BCHCode: return "bch";
        case Scheme::RSSimplex: return "rs-simplex";
        case Scheme::BinaryCode: return "code";
        case Scheme::Random: return "random";
        case Scheme::OptimizedLSE: return "lse";
        case Scheme::OptimizedAVG: return "avg";
    }
    return "unknown";
}

inline std::optional<Scheme> scheme_from_string(const std::string& s) {
    if (s == "onehot") return Scheme::OneHot;
    if (s == "simplex") return Scheme::Simplex;
    if (s == "rm") return Scheme::RMCode;
    if (s == "bch") return Scheme::BCHCode;
    if (s == "rs-simplex") return Scheme::RSSimplex;
    if (s == "code") return Scheme::BinaryCode;
    if (s == "random") return Scheme::Random;
    if (s == "lse") return Scheme::OptimizedLSE;
    if (s == "avg") return Scheme::OptimizedAVG;
    return std::nullopt;
}

/// K unit vectors in R^n with provenance of the generating scheme.
struct Codebook {
    int num_classes = 0;              // K
    int dim = 0;                      // n
    Eigen::MatrixXd vectors;          // K x n, rows unit norm
    Scheme scheme = Scheme::Random;
    std::optional<std::uint64_t> seed;             // sampling / optimizer seed
    std::optional<std::uint64_t> assignment_seed;  // class -> codeword permutation
};

struct HistogramBin {
    double lo = 0.0, hi = 0.0;
    std::uint64_t count = 0;
};

/// An exactly repeated cosine value (atoms are grouped within 1e-9).
struct CosineAtom {
    double value = 0.0;
    std::uint64_t count = 0;
};

struct SeparationStats {
    double max_cosine = 0.0;
    double mean_cosine = 0.0;
    double offdiag_min = 0.0;
    double offdiag_max = 0.0;  // == max_cosine
    std::vector<HistogramBin> histogram;
    std::vector<CosineAtom> atoms;  // empty when the value set is not discrete
};

inline constexpr int kDefaultHistogramBins = 201;
inline constexpr std::size_t kMaxReportedAtoms = 4096;
inline constexpr double kAtomGroupTolerance = 1e-9;

// codebook matrices above this many entries are refused
inline constexpr std::uint64_t kCodebookEntryCap = std::uint64_t{1} << 25;

namespace detail {

inline void check_codebook_size(std::uint64_t K, std::uint64_t n) {
    if (n == 0 || K > kCodebookEntryCap / n)
        throw std::invalid_argument("codebook too large: K*n exceeds " + std::to_string(kCodebookEntryCap));
}

/// Neumaier compensated accumulator: value() returns the correctly rounded
/// sum as long as the compensation term itself never rounds, which holds for
/// the modest term counts used here.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

inline double compensated_dot(const Eigen::MatrixXd& m, int i, int j) {
    NeumaierSum acc;
    for (Eigen::Index c = 0; c < m.cols(); ++c) acc.add(m(i, c) * m(j, c));
    return acc.value();
}

/// 53-bit uniform draw in [0, 1).
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on explicit 53-bit uniforms, so sequences
/// are identical across standard library implementations.
inline double gaussian(std::mt19937_64& rng) {
    const double u1 = 1.0 - uniform01(rng);  // (0, 1]
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

/// Unbiased bounded draw in [0, bound) by rejection.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = (UINT64_MAX / bound) * bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

inline void fisher_yates(std::vector<std::uint64_t>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[static_cast<std::size_t>(bounded(rng, i))]);
}

/// First K entries of a seeded permutation of [0, total). Falls back to
/// rejection sampling when the full range is too large to shuffle; total == 0
/// means the range is the whole uint64 space.
inline std::vector<std::uint64_t> sample_assignment(std::uint64_t total, std::uint64_t k,
                                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (total != 0 && total <= kDefaultEnumerationCap) {
        std::vector<std::uint64_t> all(total);
        for (std::uint64_t i = 0; i < total; ++i) all[i] = i;
        fisher_yates(all, rng);
        all.resize(k);
        return all;
    }
    std::vector<std::uint64_t> picked;
    picked.reserve(k);
    std::unordered_set<std::uint64_t> seen;
    while (picked.size() < k) {
        const std::uint64_t c = total == 0 ? rng() : bounded(rng, total);
        if (seen.insert(c).second) picked.push_back(c);
    }
    return picked;
}

/// Rows of a regular q-point simplex with all coordinates of equal magnitude,
/// built from the Sylvester-Hadamard matrix (q must be a power of two). Row u
/// is -H_u with the first column dropped, scaled to unit norm; the sign puts
/// symbol 1 at +1 for q = 2 so the composite mapping reduces to the binary
/// sign mapping exactly.
inline Eigen::MatrixXd hadamard_simplex(int q) {
    if (q < 2 || q > 1024 || std::popcount(static_cast<unsigned>(q)) != 1)
        throw std::invalid_argument("hadamard_simplex: q must be a power of two in [2, 1024]");
    Eigen::MatrixXd comp(q, q - 1);
    const double scale = std::sqrt(static_cast<double>(q - 1));
    for (int u = 0; u < q; ++u)
        for (int c = 1; c < q; ++c) {
            const int sign = std::popcount(static_cast<unsigned>(u & c)) % 2 == 0 ? 1 : -1;
            comp(u, c - 1) = static_cast<double>(-sign) / scale;
        }
    return comp;
}

}  // namespace detail

/// The sign mapping of a length-n binary word onto S^(n-1): bit 1 goes to
/// +1/sqrt(n), bit 0 to -1/sqrt(n).
inline Eigen::RowVectorXd map_binary(const std::vector<std::uint16_t>& bits) {
    const int n = static_cast<int>(bits.size());
    if (n < 1) throw std::invalid_argument("map_binary: empty word");
    const double root_n = std::sqrt(static_cast<double>(n));
    Eigen::RowVectorXd v(n);
    for (int l = 0; l < n; ++l) {
        if (bits[static_cast<std::size_t>(l)] > 1) throw std::invalid_argument("map_binary: non-binary symbol");
        v(l) = (bits[static_cast<std::size_t>(l)] ? 1.0 : -1.0) / root_n;
    }
    return v;
}

/// Cosine similarity of two mapped binary words at Hamming distance d_H:
/// exactly 1 - 2 d_H / n.
inline double cosine_from_hamming(int d_hamming, int n) {
    if (n < 1 || d_hamming < 0 || d_hamming > n)
        throw std::invalid_argument("cosine_from_hamming: require 0 <= d_H <= n");
    // (n - 2 d) / n is the correctly rounded value of 1 - 2 d / n
    return static_cast<double>(n - 2 * d_hamming) / static_cast<double>(n);
}

namespace detail {

inline std::vector<std::uint64_t> select_message_indices(const LinearCode& code, std::uint64_t K,
                                                         std::optional<std::uint64_t> assignment_seed) {
    std::uint64_t total = 0;  // 0 = more codewords than uint64 can index
    try {
        total = code.num_codewords();
    } catch (const std::overflow_error&) {
        total = 0;
    }
    if (total != 0 && total < K) throw infeasible_error("code too small for K classes");
    if (assignment_seed) return sample_assignment(total, K, *assignment_seed);
    std::vector<std::uint64_t> ids(K);
    for (std::uint64_t i = 0; i < K; ++i) ids[i] = i;
    return ids;
}

}  // namespace detail

/// Maps K codewords of a binary code onto the sphere. By default classes take
/// the first K codewords in lexicographic message order; a seed draws the
/// class-to-codeword assignment from a seeded permutation instead.
inline Codebook codebook_from_code(const LinearCode& code, std::uint64_t K,
                                   std::optional<std::uint64_t> assignment_seed = std::nullopt) {
    if (!code.is_binary()) throw std::invalid_argument("codebook_from_code: binary codes only");
    if (K < 2) throw std::invalid_argument("codebook_from_code: need K >= 2");
    detail::check_codebook_size(K, static_cast<std::uint64_t>(code.length()));
    const auto indices = detail::select_message_indices(code, K, assignment_seed);
    Codebook cb;
    cb.num_classes = static_cast<int>(K);
    cb.dim = code.length();
    cb.vectors.resize(static_cast<Eigen::Index>(K), code.length());
    for (std::uint64_t i = 0; i < K; ++i)
        cb.vectors.row(static_cast<Eigen::Index>(i)) = map_binary(code.codeword(indices[i]));
    switch (code.family()) {
        case CodeFamily::ReedMuller: cb.scheme = Scheme::RMCode; break;
        case CodeFamily::BCH: cb.scheme = Scheme::BCHCode; break;
        default: cb.scheme = Scheme::BinaryCode; break;
    }
    cb.assignment_seed = assignment_seed;
    return cb;
}

/// K unit vectors in n = K-1 dimensions with every pairwise cosine exactly
/// -1/(K-1): the centered, scaled canonical-basis simplex expressed in the
/// Helmert orthonormal basis of the sum-zero hyperplane.
inline Codebook simplex_codebook(std::uint64_t K) {
    if (K < 2) throw std::invalid_argument("simplex_codebook: need K >= 2");
    detail::check_codebook_size(K, K - 1);
    Codebook cb;
    cb.num_classes = static_cast<int>(K);
    cb.dim = static_cast<int>(K) - 1;
    cb.scheme = Scheme::Simplex;
    cb.vectors.resize(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(K - 1));
    if (K == 2) {
        cb.vectors(0, 0) = -1.0;
        cb.vectors(1, 0) = 1.0;
        return cb;
    }
    const double row_scale = std::sqrt((static_cast<double>(K) - 1.0) / static_cast<double>(K));
    for (std::uint64_t i = 0; i < K; ++i) {
        for (std::uint64_t j = 1; j < K; ++j) {
            double h = 0.0;
            if (i < j)
                h = 1.0 / std::sqrt(static_cast<double>(j) * (static_cast<double>(j) + 1.0));
            else if (i == j)
                h = -static_cast<double>(j) / std::sqrt(static_cast<double>(j) * (static_cast<double>(j) + 1.0));
            cb.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j - 1)) = -h / row_scale;
        }
    }
    return cb;
}

/// Canonical basis vectors e_1..e_K: all pairwise cosines zero.
inline Codebook onehot_codebook(std::uint64_t K) {
    if (K < 2) throw std::invalid_argument("onehot_codebook: need K >= 2");
    detail::check_codebook_size(K, K);
    Codebook cb;
    cb.num_classes = static_cast<int>(K);
    cb.dim = static_cast<int>(K);
    cb.scheme = Scheme::OneHot;
    cb.vectors = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(K));
    return cb;
}

/// K rows drawn i.i.d. uniformly on S^(n-1) (normalized isotropic Gaussian),
/// deterministic for a given seed.
inline Codebook random_codebook(std::uint64_t K, int n, std::uint64_t seed) {
    if (K < 2) throw std::invalid_argument("random_codebook: need K >= 2");
    if (n < 1) throw std::invalid_argument("random_codebook: need n >= 1");
    detail::check_codebook_size(K, static_cast<std::uint64_t>(n));
    std::mt19937_64 rng(seed);
    Codebook cb;
    cb.num_classes = static_cast<int>(K);
    cb.dim = n;
    cb.scheme = Scheme::Random;
    cb.seed = seed;
    cb.vectors.resize(static_cast<Eigen::Index>(K), n);
    for (std::uint64_t i = 0; i < K; ++i) {
        double norm_sq = 0.0;
        do {
            norm_sq = 0.0;
            for (int c = 0; c < n; ++c) {
                const double g = detail::gaussian(rng);
                cb.vectors(static_cast<Eigen::Index>(i), c) = g;
                norm_sq += g * g;
            }
        } while (norm_sq == 0.0);
        cb.vectors.row(static_cast<Eigen::Index>(i)) /= std::sqrt(norm_sq);
    }
    return cb;
}

/// Composite q-ary mapping: each GF(q) symbol of a codeword becomes a vertex
/// of a regular q-point simplex in q-1 dimensions, and the blocks are
/// concatenated and scaled by 1/sqrt(n_q). Total dimension n = n_q (q-1).
/// For q = 2 this reproduces the binary sign mapping coordinate for
/// coordinate.
inline Codebook qary_codebook(const LinearCode& code, std::uint64_t K,
                              std::optional<std::uint64_t> assignment_seed = std::nullopt) {
    if (K < 2) throw std::invalid_argument("qary_codebook: need K >= 2");
    const int q = code.field_order();
    const int n_q = code.length();
    detail::check_codebook_size(K, static_cast<std::uint64_t>(n_q) * static_cast<std::uint64_t>(q - 1));
    const Eigen::MatrixXd comp = detail::hadamard_simplex(q);
    if (comp.cols() != q - 1) throw std::logic_error("qary_codebook: component dimension mismatch");
    const auto indices = detail::select_message_indices(code, K, assignment_seed);
    const double root_nq = std::sqrt(static_cast<double>(n_q));

    Codebook cb;
    cb.num_classes = static_cast<int>(K);
    cb.dim = n_q * (q - 1);
    cb.scheme = code.family() == CodeFamily::ReedSolomon || q > 2 ? Scheme::RSSimplex : Scheme::BinaryCode;
    cb.assignment_seed = assignment_seed;
    cb.vectors.resize(static_cast<Eigen::Index>(K), cb.dim);
    for (std::uint64_t i = 0; i < K; ++i) {
        const auto word = code.codeword(indices[i]);
        for (int b = 0; b < n_q; ++b) {
            const int u = word[static_cast<std::size_t>(b)];
            for (int l = 0; l < q - 1; ++l)
                cb.vectors(static_cast<Eigen::Index>(i), b * (q - 1) + l) = comp(u, l) / root_nq;
        }
    }
    return cb;
}

/// Exact max/mean/histogram over all K(K-1)/2 unordered pairs. Cosines are
/// normalized by the row norms and clamped to [-1, 1]; repeated values are
/// grouped into atoms so discrete spectra (code-based schemes) are reported
/// exactly rather than smeared into bins.
inline SeparationStats separation_stats(const Codebook& cb, int num_bins = kDefaultHistogramBins) {
    if (num_bins < 1) throw std::invalid_argument("separation_stats: need at least one bin");
    const int K = cb.num_classes;
    if (K < 2 || cb.vectors.rows() != K) throw std::invalid_argument("separation_stats: malformed codebook");

    std::vector<double> norm_sq(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) {
        norm_sq[static_cast<std::size_t>(i)] = detail::compensated_dot(cb.vectors, i, i);
        if (norm_sq[static_cast<std::size_t>(i)] <= 0.0)
            throw std::invalid_argument("separation_stats: degenerate (zero) row " + std::to_string(i));
    }

    std::vector<double> cosines;
    cosines.reserve(static_cast<std::size_t>(K) * (K - 1) / 2);
    detail::NeumaierSum mean_acc;
    for (int i = 0; i < K; ++i) {
        for (int j = i + 1; j < K; ++j) {
            const double dot = detail::compensated_dot(cb.vectors, i, j);
            double c = dot / std::sqrt(norm_sq[static_cast<std::size_t>(i)] * norm_sq[static_cast<std::size_t>(j)]);
            c = std::min(1.0, std::max(-1.0, c));
            cosines.push_back(c);
            mean_acc.add(c);
        }
    }

    SeparationStats stats;
    stats.mean_cosine = mean_acc.value() / static_cast<double>(cosines.size());

    std::vector<double> sorted = cosines;
    std::sort(sorted.begin(), sorted.end());
    stats.offdiag_min = sorted.front();
    stats.offdiag_max = sorted.back();
    stats.max_cosine = sorted.back();

    // histogram over [-1, 1]; the last bin includes +1
    stats.histogram.resize(static_cast<std::size_t>(num_bins));
    for (int b = 0; b < num_bins; ++b) {
        stats.histogram[static_cast<std::size_t>(b)].lo = -1.0 + 2.0 * b / num_bins;
        stats.histogram[static_cast<std::size_t>(b)].hi = -1.0 + 2.0 * (b + 1) / num_bins;
    }
    for (double c : sorted) {
        int b = static_cast<int>((c + 1.0) / 2.0 * num_bins);
        b = std::min(b, num_bins - 1);
        stats.histogram[static_cast<std::size_t>(b)].count += 1;
    }

    // group exactly repeated values into atoms
    std::vector<CosineAtom> atoms;
    std::size_t run_start = 0;
    for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i == sorted.size() || sorted[i] - sorted[run_start] > kAtomGroupTolerance) {
            atoms.push_back({sorted[run_start], i - run_start});
            run_start = i;
            if (atoms.size() > kMaxReportedAtoms) break;
        }
    }
    if (atoms.size() <= kMaxReportedAtoms) stats.atoms = std::move(atoms);
    return stats;
}

}  // namespace spherecode

#endif  // SPHERECODE_CODEBOOK_HPP
