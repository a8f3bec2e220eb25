/**
 * @file bounds.hpp
 * @brief Achievable and converse separation bounds for K unit vectors in R^n.
 *
 * Gilbert-Varshamov largest feasible minimum distance (exact 128-bit
 * evaluation for n <= 127, log-domain binomial-CDF evaluation beyond), the
 * induced achievable max-cosine bound, the Rankin converse -1/(K-1), the
 * Singleton bound, and the per-construction cosine certificates for binary
 * and q-ary composite mappings.
 */

#ifndef SPHERECODE_BOUNDS_HPP
#define SPHERECODE_BOUNDS_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "spherecode/codebook.hpp"
#include "spherecode/codes.hpp"
#include "spherecode/errors.hpp"

namespace spherecode {

/// Tie guard for the log-domain GV comparison. The strict inequality is
/// decided in log space only when the margin is comfortably above the
/// log-gamma evaluation noise; anything closer is handed to the exact
/// big-integer scan (true gaps near the crossing can be as small as
/// 2^-(n-1), far below any floating-point resolution).
inline constexpr long double kGvLogTieGuard = 1e-9L;

namespace detail {

inline long double log_add(long double a, long double b) {
    if (a == -std::numeric_limits<long double>::infinity()) return b;
    if (b == -std::numeric_limits<long double>::infinity()) return a;
    const long double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

/// Minimal unsigned bignum (little-endian 64-bit limbs) for exact partial
/// binomial sums: supports compare, add, multiply/divide by a small word.
class BigUint {
  public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v) {
        if (v) limbs_.push_back(v);
    }

    static BigUint power_of_two(int exponent) {
        BigUint b;
        b.limbs_.assign(static_cast<std::size_t>(exponent / 64) + 1, 0);
        b.limbs_.back() = std::uint64_t{1} << (exponent % 64);
        return b;
    }

    void add(const BigUint& other) {
        if (limbs_.size() < other.limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            carry += limbs_[i];
            if (i < other.limbs_.size()) carry += other.limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(carry);
            carry >>= 64;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    }

    void multiply_small(std::uint64_t factor) {
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            carry += static_cast<unsigned __int128>(limbs_[i]) * factor;
            limbs_[i] = static_cast<std::uint64_t>(carry);
            carry >>= 64;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint64_t>(carry));
            carry >>= 64;
        }
    }

    /// Exact division by a small word (remainder must be zero by construction).
    void divide_small(std::uint64_t divisor) {
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            rem = (rem << 64) | limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(rem / divisor);
            rem %= divisor;
        }
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    // -1, 0, +1 for this <, ==, > other
    int compare(const BigUint& other) const {
        if (limbs_.size() != other.limbs_.size()) return limbs_.size() < other.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
        return 0;
    }

  private:
    std::vector<std::uint64_t> limbs_;
};

}  // namespace detail

/// Largest d satisfying the count inequality, evaluated with exact
/// big-integer arithmetic for any n. The binomial row is carried through the
/// multiplicative recurrence, so the scan is O(n) limb operations per step.
inline int gv_largest_dmin_bigint(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("gv_largest_dmin_bigint: require 1 <= k <= n");
    const detail::BigUint lhs = detail::BigUint::power_of_two(n - k);
    detail::BigUint sum;
    detail::BigUint binom(1);  // C(n-1, i), starting at i = 0
    int best = 1;
    for (int d = 2; d <= n; ++d) {
        const int i = d - 2;
        sum.add(binom);
        if (lhs.compare(sum) > 0)
            best = d;
        else
            break;
        binom.multiply_small(static_cast<std::uint64_t>(n - 1 - i));
        binom.divide_small(static_cast<std::uint64_t>(i + 1));
    }
    return best;
}

/// Largest d such that 2^(n-k) strictly exceeds sum_{i<=d-2} C(n-1, i),
/// evaluated exactly in 128-bit integers. Requires n <= 127.
inline int gv_largest_dmin_exact(int n, int k) {
    if (n < 1 || k < 1 || k > n || n > 127)
        throw std::invalid_argument("gv_largest_dmin_exact: require 1 <= k <= n <= 127");
    using u128 = unsigned __int128;
    std::vector<u128> row(static_cast<std::size_t>(n), 0);  // C(n-1, i), built by Pascal additions
    row[0] = 1;
    for (int level = 1; level < n; ++level)
        for (int j = level; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    const u128 lhs = u128{1} << (n - k);
    u128 sum = 0;
    int best = 1;  // d = 1 has an empty sum and always satisfies the bound
    for (int d = 2; d <= n; ++d) {
        sum += row[static_cast<std::size_t>(d - 2)];
        if (lhs > sum)
            best = d;
        else
            break;  // the partial sum only grows
    }
    return best;
}

/// Same quantity evaluated in the log domain through the scaled binomial-CDF
/// form: both sides of the count inequality are divided by 2^n, so the
/// comparison reads 2^(-k) > sum_i C(n-1, i) (1/2)^i (1/2)^(n-i), i.e.
/// half the binomial CDF F_bin(d-2; n-1, 1/2), accumulated from log-gamma
/// binomial terms. Whenever the comparison lands inside the tie guard the
/// strict inequality is undecidable in floating point and the scan defers
/// to the exact big-integer path.
inline int gv_largest_dmin_logdomain(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("gv_largest_dmin_logdomain: require 1 <= k <= n");
    const long double ln2 = 0.69314718055994530941723212145818L;
    const long double lhs = -static_cast<long double>(k) * ln2;  // log 2^(-k)
    long double log_sum = -std::numeric_limits<long double>::infinity();
    int best = 1;
    for (int d = 2; d <= n; ++d) {
        const int i = d - 2;
        const long double log_binom =
            std::lgamma(static_cast<long double>(n)) - std::lgamma(static_cast<long double>(i + 1)) -
            std::lgamma(static_cast<long double>(n - i));
        log_sum = detail::log_add(log_sum, log_binom);
        const long double margin = lhs - (log_sum - static_cast<long double>(n) * ln2);
        if (margin > kGvLogTieGuard)
            best = d;
        else if (margin < -kGvLogTieGuard)
            break;
        else
            return gv_largest_dmin_bigint(n, k);
    }
    return best;
}

/// Largest Gilbert-Varshamov-feasible minimum distance for an [n,k] binary
/// code: exact integer evaluation where it fits, log-domain beyond.
inline int gv_largest_dmin(int n, int k) {
    return n <= 127 ? gv_largest_dmin_exact(n, k) : gv_largest_dmin_logdomain(n, k);
}

inline int ceil_log2(std::uint64_t K) {
    if (K < 2) throw std::invalid_argument("ceil_log2: require K >= 2");
    return static_cast<int>(std::bit_width(K - 1));
}

/// Achievable worst-case cosine for K classes in n dimensions:
/// 1 - 2 d_GV / n with message length k = ceil(log2 K). This is the raw
/// code-existence bound; the one-hot tightening for n >= K is reported
/// separately in BoundsReport.
inline double achievable_max_cosine(int n, std::uint64_t K) {
    const int k = ceil_log2(K);
    if (k > n) throw infeasible_error("dimension below message length");
    return 1.0 - 2.0 * static_cast<double>(gv_largest_dmin(n, k)) / static_cast<double>(n);
}

/// No K unit vectors have worst-case cosine below -1/(K-1).
inline double rankin_converse(std::uint64_t K) {
    if (K < 2) throw std::invalid_argument("rankin_converse: require K >= 2");
    return -1.0 / (static_cast<double>(K) - 1.0);
}

/// Every [n_q, k_q] linear code has d_min <= n_q - k_q + 1.
inline int singleton_dmin_upper(int n_q, int k_q) {
    if (k_q < 1 || k_q > n_q) throw std::invalid_argument("singleton_dmin_upper: require 1 <= k_q <= n_q");
    return n_q - k_q + 1;
}

/// Certified upper bound 1 - 2 d_min / n on the max cosine of the mapped
/// codebook of a binary code, with d_min obtained by enumeration.
inline double binary_code_cosine_bound(const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap) {
    if (!code.is_binary()) throw std::invalid_argument("binary_code_cosine_bound: binary codes only");
    return cosine_from_hamming(code.minimum_distance(cap), code.length());
}

/// Certified upper bound for the q-ary composite mapping:
/// 1 - (d_H_min / n_q) * (d_E_min_component^2 / 2). With simplex component
/// mappings, d_E_min^2 = 2q/(q-1).
inline double composite_code_cosine_bound(int d_hamming_min, int n_q, double d_e_min_component_sq) {
    if (d_hamming_min < 1 || n_q < 1 || d_hamming_min > n_q)
        throw std::invalid_argument("composite_code_cosine_bound: require 1 <= d_H_min <= n_q");
    if (d_e_min_component_sq <= 0.0 || d_e_min_component_sq > 4.0)
        throw std::invalid_argument("composite_code_cosine_bound: component distance^2 must be in (0, 4]");
    return 1.0 - (static_cast<double>(d_hamming_min) / static_cast<double>(n_q)) * (d_e_min_component_sq / 2.0);
}

/// Squared minimum Euclidean distance of the q-point simplex component
/// mapping: 2q/(q-1).
inline double simplex_component_min_distance_sq(int q) {
    if (q < 2) throw std::invalid_argument("simplex_component_min_distance_sq: require q >= 2");
    return 2.0 * static_cast<double>(q) / (static_cast<double>(q) - 1.0);
}

/// Bound summary for a (K, n) pair.
struct BoundsReport {
    std::uint64_t K = 0;
    int n = 0;
    int gv_dmin = 0;
    double achievable_max_cosine = 0.0;       // 1 - 2 d_GV / n
    double converse_min_of_max_cosine = 0.0;  // -1/(K-1)
    std::optional<double> onehot_reference;   // 0.0 when n >= K, otherwise absent

    /// The achievable bound with the n >= K one-hot tightening applied.
    double tightened_achievable() const {
        return onehot_reference ? std::min(achievable_max_cosine, *onehot_reference) : achievable_max_cosine;
    }
};

inline BoundsReport bounds_report(std::uint64_t K, int n) {
    if (ceil_log2(K) > n) throw infeasible_error("dimension below message length");
    BoundsReport report;
    report.K = K;
    report.n = n;
    report.gv_dmin = gv_largest_dmin(n, ceil_log2(K));
    report.achievable_max_cosine = achievable_max_cosine(n, K);
    report.converse_min_of_max_cosine = rankin_converse(K);
    if (static_cast<std::uint64_t>(n) >= K) report.onehot_reference = 0.0;
    return report;
}

}  // namespace spherecode

#endif  // SPHERECODE_BOUNDS_HPP
