/**
 * @file codes.hpp
 * @brief Linear block codes over GF(q): construction, transformation,
 *        enumeration and exact distance spectra.
 *
 * Families: repetition, Reed-Muller RM(r,m), narrow-sense primitive BCH,
 * and Reed-Solomon evaluation codes, plus puncturing and parity extension.
 * Distance metadata is computed exactly by codeword enumeration (Gray-code
 * walk for binary codes, mixed-radix odometer for q-ary), guarded by an
 * enumeration cap.
 */

#ifndef SPHERECODE_CODES_HPP
#define SPHERECODE_CODES_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spherecode/errors.hpp"
#include "spherecode/gf2.hpp"

namespace spherecode {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

// generator matrices above this many entries are refused at construction
inline constexpr std::uint64_t kGeneratorMatrixEntryCap = std::uint64_t{1} << 26;

enum class CodeFamily { Repetition, ReedMuller, BCH, ReedSolomon, Punctured, Extended, Custom };

inline std::string to_string(CodeFamily f) {
    switch (f) {
        case CodeFamily::Repetition: return "repetition";
        case CodeFamily::ReedMuller: return "reed-muller";
        case CodeFamily::BCH: return "bch";
        case CodeFamily::ReedSolomon: return "reed-solomon";
        case CodeFamily::Punctured: return "punctured";
        case CodeFamily::Extended: return "extended";
        case CodeFamily::Custom: return "custom";
    }
    return "unknown";
}

/// Exact weight-enumerator data of a linear code. Because the code is
/// linear, pairwise distances are weights of codeword differences, so the
/// weight distribution determines the full distance distribution.
struct DistanceSpectrum {
    std::map<int, std::uint64_t> weight_counts;  // weight -> number of codewords
    int d_min = 0;                               // smallest nonzero weight

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [w, c] : weight_counts) t += c;
        return t;
    }
};

/// Family-specific construction metadata carried by a LinearCode.
struct CodeParams {
    int rm_r = -1, rm_m = -1;
    int bch_m = -1, bch_design_distance = -1;
    int rs_q = -1, rs_k = -1;
    std::vector<int> punctured_positions;
};

/// An [n,k] linear block code over GF(q) held as a generator matrix.
/// Immutable after construction; the generator is validated to have rank k.
class LinearCode {
  public:

    static LinearCode from_binary_generator(std::vector<std::vector<std::uint16_t>> rows,
                                            CodeFamily family = CodeFamily::Custom,
                                            CodeParams params = CodeParams(),
                                            std::string description = "") {
        return LinearCode(std::move(rows), 2, nullptr, family, std::move(params), std::move(description));
    }

    static LinearCode from_qary_generator(std::shared_ptr<const FieldTable> field,
                                          std::vector<std::vector<std::uint16_t>> rows,
                                          CodeFamily family = CodeFamily::Custom,
                                          CodeParams params = CodeParams(),
                                          std::string description = "") {
        if (!field) throw std::invalid_argument("LinearCode: null field table");
        const int q = static_cast<int>(field->order());
        return LinearCode(std::move(rows), q, std::move(field), family, std::move(params), std::move(description));
    }

    int length() const { return n_; }
    int dimension() const { return k_; }
    int field_order() const { return q_; }
    double rate() const { return static_cast<double>(k_) / n_; }
    CodeFamily family() const { return family_; }
    const CodeParams& params() const { return params_; }
    const std::string& description() const { return description_; }
    const std::vector<std::vector<std::uint16_t>>& generator_rows() const { return rows_; }
    const FieldTable* field() const { return field_.get(); }

    /// Exact minimum distance when it is determined by the construction
    /// itself (repetition, RM, RS). BCH codes carry only the design-distance
    /// lower bound, so this is empty for them.
    std::optional<int> formula_d_min() const { return formula_d_min_; }

    bool is_binary() const { return q_ == 2; }

    /// log2 of the codebook size k*log2(q); exact count may not fit 64 bits.
    double log2_num_codewords() const { return k_ * std::log2(static_cast<double>(q_)); }

    std::uint64_t num_codewords() const {
        std::uint64_t count = 1;
        for (int i = 0; i < k_; ++i) {
            if (count > UINT64_MAX / static_cast<std::uint64_t>(q_))
                throw std::overflow_error("LinearCode: q^k does not fit in 64 bits");
            count *= static_cast<std::uint64_t>(q_);
        }
        return count;
    }

    /// Codeword of the message with index `message_index`, where the message
    /// vector is the big-endian base-q digit expansion of the index; message
    /// order is therefore lexicographic.
    std::vector<std::uint16_t> codeword(std::uint64_t message_index) const {
        std::vector<std::uint16_t> message(static_cast<std::size_t>(k_), 0);
        for (int j = k_ - 1; j >= 0; --j) {
            message[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(message_index % q_);
            message_index /= static_cast<std::uint64_t>(q_);
        }
        if (message_index != 0) throw std::invalid_argument("LinearCode::codeword: message index out of range");
        return encode(message);
    }

    std::vector<std::uint16_t> encode(const std::vector<std::uint16_t>& message) const {
        if (static_cast<int>(message.size()) != k_)
            throw std::invalid_argument("LinearCode::encode: message length != k");
        std::vector<std::uint16_t> word(static_cast<std::size_t>(n_), 0);
        for (int j = 0; j < k_; ++j) {
            const std::uint16_t digit = message[static_cast<std::size_t>(j)];
            if (static_cast<int>(digit) >= q_) throw std::invalid_argument("LinearCode::encode: symbol out of field");
            if (digit == 0) continue;
            const auto& row = rows_[static_cast<std::size_t>(j)];
            if (q_ == 2) {
                for (int c = 0; c < n_; ++c) word[c] ^= row[c];
            } else {
                for (int c = 0; c < n_; ++c)
                    word[c] = static_cast<std::uint16_t>(word[c] ^ field_->mul(digit, row[c]));
            }
        }
        return word;
    }

    /// All q^k codewords in lexicographic message order.
    std::vector<std::vector<std::uint16_t>> enumerate_codewords(std::uint64_t cap = kDefaultEnumerationCap) const {
        const std::uint64_t count = enumeration_count(cap);
        std::vector<std::vector<std::uint16_t>> words;
        words.reserve(static_cast<std::size_t>(count));
        for (std::uint64_t i = 0; i < count; ++i) words.push_back(codeword(i));
        return words;
    }

    /// Exact weight enumerator by full enumeration. Binary codes walk the
    /// message space in Gray order so each step is one row XOR; q-ary codes
    /// use a mixed-radix odometer with incremental column updates.
    DistanceSpectrum distance_spectrum(std::uint64_t cap = kDefaultEnumerationCap) const {
        const std::uint64_t count = enumeration_count(cap);
        DistanceSpectrum spec;
        if (q_ == 2) {
            const std::size_t words_per_row = packed_rows_.front().size();
            std::vector<std::uint64_t> current(words_per_row, 0);
            spec.weight_counts[0] += 1;
            for (std::uint64_t i = 1; i < count; ++i) {
                const int flip = std::countr_zero(i);
                const auto& row = packed_rows_[static_cast<std::size_t>(flip)];
                int weight = 0;
                for (std::size_t w = 0; w < words_per_row; ++w) {
                    current[w] ^= row[w];
                    weight += std::popcount(current[w]);
                }
                spec.weight_counts[weight] += 1;
            }
        } else {
            std::vector<std::uint16_t> digits(static_cast<std::size_t>(k_), 0);
            std::vector<std::uint16_t> current(static_cast<std::size_t>(n_), 0);
            int weight = 0;
            spec.weight_counts[0] += 1;
            for (std::uint64_t i = 1; i < count; ++i) {
                // increment the odometer; every changed digit updates the word
                for (int j = k_ - 1; j >= 0; --j) {
                    const std::uint16_t old = digits[static_cast<std::size_t>(j)];
                    const std::uint16_t next = old + 1 == q_ ? 0 : old + 1;
                    digits[static_cast<std::size_t>(j)] = next;
                    apply_row_delta(j, static_cast<std::uint16_t>(old ^ next), current, weight);
                    if (next != 0) break;  // no carry
                }
                spec.weight_counts[weight] += 1;
            }
        }
        for (const auto& [w, c] : spec.weight_counts) {
            if (w > 0 && c > 0) {
                spec.d_min = w;
                break;
            }
        }
        return spec;
    }

    int minimum_distance(std::uint64_t cap = kDefaultEnumerationCap) const {
        return distance_spectrum(cap).d_min;
    }

  private:
    int n_ = 0;
    int k_ = 0;
    int q_ = 2;
    std::shared_ptr<const FieldTable> field_;  // null for binary codes
    CodeFamily family_ = CodeFamily::Custom;
    CodeParams params_;
    std::string description_;
    std::optional<int> formula_d_min_;
    std::vector<std::vector<std::uint16_t>> rows_;      // k x n generator
    std::vector<std::vector<std::uint64_t>> packed_rows_;  // bit-packed rows, binary codes only

    friend LinearCode repetition_code(int);
    friend LinearCode reed_muller_code(int, int);
    friend LinearCode bch_code(int, int);
    friend LinearCode bch_best_for_classes(int, std::uint64_t);
    friend LinearCode reed_solomon_code(int, int);

    LinearCode(std::vector<std::vector<std::uint16_t>> rows, int q,
               std::shared_ptr<const FieldTable> field, CodeFamily family, CodeParams params,
               std::string description)
        : q_(q), field_(std::move(field)), family_(family), params_(std::move(params)),
          description_(std::move(description)), rows_(std::move(rows)) {
        if (rows_.empty()) throw std::invalid_argument("LinearCode: dimension k must be >= 1");
        k_ = static_cast<int>(rows_.size());
        n_ = static_cast<int>(rows_.front().size());
        if (n_ < 1) throw std::invalid_argument("LinearCode: length n must be >= 1");
        if (static_cast<std::uint64_t>(k_) * static_cast<std::uint64_t>(n_) > kGeneratorMatrixEntryCap)
            throw std::invalid_argument("LinearCode: generator matrix too large");
        for (const auto& row : rows_) {
            if (static_cast<int>(row.size()) != n_)
                throw std::invalid_argument("LinearCode: ragged generator matrix");
            for (std::uint16_t s : row)
                if (static_cast<int>(s) >= q_) throw std::invalid_argument("LinearCode: symbol out of field");
        }
        if (q_ == 2) pack_rows();
        if (rank() != k_) throw std::invalid_argument("LinearCode: generator matrix rank deficient");
        if (description_.empty()) description_ = to_string(family_);
    }

    void pack_rows() {
        const std::size_t words = (static_cast<std::size_t>(n_) + 63) / 64;
        packed_rows_.assign(static_cast<std::size_t>(k_), std::vector<std::uint64_t>(words, 0));
        for (int r = 0; r < k_; ++r)
            for (int c = 0; c < n_; ++c)
                if (rows_[r][c]) packed_rows_[r][static_cast<std::size_t>(c) / 64] |= std::uint64_t{1} << (c % 64);
    }

    int rank() const {
        if (q_ == 2) {
            auto m = packed_rows_;
            int rank = 0;
            for (int col = 0; col < n_ && rank < k_; ++col) {
                const std::size_t w = static_cast<std::size_t>(col) / 64;
                const std::uint64_t mask = std::uint64_t{1} << (col % 64);
                int pivot = -1;
                for (int r = rank; r < k_; ++r)
                    if (m[r][w] & mask) {
                        pivot = r;
                        break;
                    }
                if (pivot < 0) continue;
                std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
                for (int r = 0; r < k_; ++r) {
                    if (r == rank || !(m[r][w] & mask)) continue;
                    for (std::size_t i = 0; i < m[r].size(); ++i) m[r][i] ^= m[static_cast<std::size_t>(rank)][i];
                }
                ++rank;
            }
            return rank;
        }
        auto m = rows_;
        int rank = 0;
        for (int col = 0; col < n_ && rank < k_; ++col) {
            int pivot = -1;
            for (int r = rank; r < k_; ++r)
                if (m[r][col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
            const std::uint32_t inv = field_->inv(m[static_cast<std::size_t>(rank)][col]);
            for (int c = 0; c < n_; ++c)
                m[static_cast<std::size_t>(rank)][c] =
                    static_cast<std::uint16_t>(field_->mul(inv, m[static_cast<std::size_t>(rank)][c]));
            for (int r = 0; r < k_; ++r) {
                if (r == rank || m[r][col] == 0) continue;
                const std::uint32_t factor = m[r][col];
                for (int c = 0; c < n_; ++c)
                    m[r][c] = static_cast<std::uint16_t>(
                        m[r][c] ^ field_->mul(factor, m[static_cast<std::size_t>(rank)][c]));
            }
            ++rank;
        }
        return rank;
    }

    std::uint64_t enumeration_count(std::uint64_t cap) const {
        std::uint64_t count = 1;
        for (int i = 0; i < k_; ++i) {
            if (count > cap / static_cast<std::uint64_t>(q_))
                throw infeasible_error("enumeration cap exceeded: q^k > " + std::to_string(cap));
            count *= static_cast<std::uint64_t>(q_);
        }
        return count;
    }

    void apply_row_delta(int row_index, std::uint16_t delta, std::vector<std::uint16_t>& current,
                         int& weight) const {
        if (delta == 0) return;
        const auto& row = rows_[static_cast<std::size_t>(row_index)];
        for (int c = 0; c < n_; ++c) {
            if (row[c] == 0) continue;
            const std::uint16_t old = current[c];
            current[c] = static_cast<std::uint16_t>(old ^ field_->mul(delta, row[c]));
            weight += (current[c] != 0) - (old != 0);
        }
    }
};

/// [n,1] binary repetition code {0^n, 1^n}, d_min = n.
inline LinearCode repetition_code(int n) {
    if (n < 1) throw std::invalid_argument("repetition_code: n must be >= 1");
    std::vector<std::vector<std::uint16_t>> rows{std::vector<std::uint16_t>(static_cast<std::size_t>(n), 1)};
    LinearCode code(std::move(rows), 2, nullptr, CodeFamily::Repetition, {}, "repetition(" + std::to_string(n) + ")");
    code.formula_d_min_ = n;
    return code;
}

/// Reed-Muller code RM(r,m): n = 2^m, k = sum_{i<=r} C(m,i), d_min = 2^(m-r).
/// Generator rows are evaluation vectors of the degree-<=r monomials in m
/// boolean variables, ordered by monomial degree then variable mask.
inline LinearCode reed_muller_code(int r, int m) {
    if (m < 0 || m > 14) throw std::invalid_argument("reed_muller_code: m must be in [0, 14]");
    if (r < 0 || r > m) throw std::invalid_argument("reed_muller_code: require 0 <= r <= m");
    const int n = 1 << m;
    std::vector<int> masks;
    for (int size = 0; size <= r; ++size)
        for (int mask = 0; mask < (1 << m); ++mask)
            if (std::popcount(static_cast<unsigned>(mask)) == size) masks.push_back(mask);
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(masks.size());
    for (int mask : masks) {
        std::vector<std::uint16_t> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = ((j & mask) == mask) ? 1 : 0;
        rows.push_back(std::move(row));
    }
    CodeParams params;
    params.rm_r = r;
    params.rm_m = m;
    LinearCode code(std::move(rows), 2, nullptr, CodeFamily::ReedMuller, params,
                    "RM(" + std::to_string(r) + "," + std::to_string(m) + ")");
    code.formula_d_min_ = 1 << (m - r);
    return code;
}

namespace detail {

/// Generator matrix rows x^i * g(x) for i = 0..k-1 of a cyclic code of
/// length n with generator polynomial g.
inline std::vector<std::vector<std::uint16_t>> cyclic_generator_rows(const Poly2& g, int n) {
    const int k = n - g.degree();
    std::vector<std::vector<std::uint16_t>> rows(static_cast<std::size_t>(k),
                                                 std::vector<std::uint16_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= g.degree(); ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = g.coeff(j) ? 1 : 0;
    return rows;
}

/// Marks the conjugacy class {s 2^i mod (2^m - 1)} of the exponent as covered.
inline void mark_conjugacy_class(std::uint32_t s, std::uint32_t n, std::vector<bool>& covered) {
    std::uint32_t e = s;
    do {
        covered[e] = true;
        e = static_cast<std::uint32_t>((2ull * e) % n);
    } while (e != s);
}

inline Poly2 bch_generator_poly(int design_distance, const FieldTable& field) {
    Poly2 g = Poly2::one();
    std::vector<bool> covered(field.num_nonzero(), false);
    for (int j = 1; j < design_distance; ++j) {
        if (covered[static_cast<std::size_t>(j)]) continue;  // minimal polynomial already divides g
        g = poly_lcm(g, minimal_polynomial(static_cast<std::uint32_t>(j), field));
        mark_conjugacy_class(static_cast<std::uint32_t>(j), field.num_nonzero(), covered);
    }
    return g;
}

}  // namespace detail

/// Narrow-sense primitive BCH code of length n = 2^m - 1 with the given
/// design distance: g(x) = lcm of the minimal polynomials of alpha^1 ..
/// alpha^(delta-1). True minimum distance is >= the design distance.
inline LinearCode bch_code(int m, int design_distance) {
    if (m < 2 || m > 16) throw std::invalid_argument("bch_code: m must be in [2, 16]");
    const int n = (1 << m) - 1;
    if (design_distance < 2 || design_distance > n)
        throw std::invalid_argument("bch_code: design distance must be in [2, 2^m - 1]");
    const FieldTable field(m);
    const Poly2 g = detail::bch_generator_poly(design_distance, field);
    const int k = n - g.degree();
    if (k <= 0) throw infeasible_error("design distance too large");
    CodeParams params;
    params.bch_m = m;
    params.bch_design_distance = design_distance;
    return LinearCode(detail::cyclic_generator_rows(g, n), 2, nullptr, CodeFamily::BCH, params,
                      "BCH(n=" + std::to_string(n) + ", delta=" + std::to_string(design_distance) + ")");
}

/// The narrow-sense BCH code of length 2^m - 1 with the largest design
/// distance whose dimension still admits K classes (k >= ceil(log2 K)).
/// The scan walks delta upward, so the returned design distance is the
/// largest value producing the selected generator polynomial.
inline LinearCode bch_best_for_classes(int m, std::uint64_t num_classes) {
    if (m < 2 || m > 16) throw std::invalid_argument("bch_best_for_classes: m must be in [2, 16]");
    if (num_classes < 2) throw std::invalid_argument("bch_best_for_classes: need at least 2 classes");
    const int n = (1 << m) - 1;
    const int k_min = static_cast<int>(std::bit_width(num_classes - 1));
    if (n < 64 && (std::uint64_t{1} << n) < num_classes)
        throw infeasible_error("no code of length " + std::to_string(n) + " admits " +
                               std::to_string(num_classes) + " classes");
    const FieldTable field(m);
    Poly2 g = Poly2::one();
    Poly2 best_g;
    int best_delta = 0;
    std::vector<bool> covered(field.num_nonzero(), false);
    for (int delta = 2; delta <= n; ++delta) {
        if (!covered[static_cast<std::size_t>(delta - 1)]) {
            g = poly_lcm(g, minimal_polynomial(static_cast<std::uint32_t>(delta - 1), field));
            detail::mark_conjugacy_class(static_cast<std::uint32_t>(delta - 1), field.num_nonzero(), covered);
            if (n - g.degree() < k_min) break;  // k is non-increasing in delta
            best_g = g;
        }
        best_delta = delta;
    }
    if (best_delta == 0)
        throw infeasible_error("no BCH code of length " + std::to_string(n) + " has dimension >= " +
                               std::to_string(k_min));
    CodeParams params;
    params.bch_m = m;
    params.bch_design_distance = best_delta;
    return LinearCode(detail::cyclic_generator_rows(best_g, n), 2, nullptr, CodeFamily::BCH, params,
                      "BCH(n=" + std::to_string(n) + ", delta=" + std::to_string(best_delta) + ")");
}

/// Reed-Solomon evaluation code over GF(q), q = 2^m: messages are
/// polynomials of degree < k_q evaluated at all q field elements, so
/// n_q = q and d_min = n_q - k_q + 1 exactly (Singleton equality).
inline LinearCode reed_solomon_code(int q, int k_q) {
    if (q < 2 || q > (1 << 16) || std::popcount(static_cast<unsigned>(q)) != 1)
        throw std::invalid_argument("reed_solomon_code: q must be a power of two in [2, 2^16]");
    const int n_q = q;
    if (k_q < 1 || k_q > n_q) throw std::invalid_argument("reed_solomon_code: require 1 <= k_q <= n_q = q");
    const int m = std::countr_zero(static_cast<unsigned>(q));
    auto field = std::make_shared<const FieldTable>(m);
    std::vector<std::vector<std::uint16_t>> rows(static_cast<std::size_t>(k_q),
                                                 std::vector<std::uint16_t>(static_cast<std::size_t>(n_q), 0));
    for (int i = 0; i < k_q; ++i)
        for (int p = 0; p < n_q; ++p)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] = static_cast<std::uint16_t>(
                p == 0 ? (i == 0 ? 1 : 0) : field->pow(static_cast<std::uint32_t>(p), static_cast<std::uint64_t>(i)));
    CodeParams params;
    params.rs_q = q;
    params.rs_k = k_q;
    LinearCode code(std::move(rows), q, std::move(field), CodeFamily::ReedSolomon, params,
                    "RS(q=" + std::to_string(q) + ", k=" + std::to_string(k_q) + ")");
    code.formula_d_min_ = n_q - k_q + 1;
    return code;
}

/// Deletes the given coordinates from every codeword. Positions must be
/// distinct and leave at least one coordinate. Minimum distance drops by at
/// most the number of removed positions; if the punctured generator loses
/// rank, distinct codewords collapse and the construction is refused.
inline LinearCode puncture(const LinearCode& code, std::vector<int> positions) {
    if (positions.empty()) return code;
    std::sort(positions.begin(), positions.end());
    if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
        throw std::invalid_argument("puncture: duplicate positions");
    if (positions.front() < 0 || positions.back() >= code.length())
        throw std::invalid_argument("puncture: position out of range");
    if (static_cast<int>(positions.size()) >= code.length())
        throw std::invalid_argument("puncture: must keep at least one coordinate");

    std::vector<bool> drop(static_cast<std::size_t>(code.length()), false);
    for (int p : positions) drop[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(static_cast<std::size_t>(code.dimension()));
    for (const auto& row : code.generator_rows()) {
        std::vector<std::uint16_t> shortened;
        shortened.reserve(row.size() - positions.size());
        for (std::size_t c = 0; c < row.size(); ++c)
            if (!drop[c]) shortened.push_back(row[c]);
        rows.push_back(std::move(shortened));
    }
    CodeParams params = code.params();
    params.punctured_positions = positions;
    const std::string desc =
        "puncture(" + code.description() + ", " + std::to_string(positions.size()) + " positions)";
    try {
        if (code.is_binary())
            return LinearCode::from_binary_generator(std::move(rows), CodeFamily::Punctured, params, desc);
        return LinearCode::from_qary_generator(
            std::shared_ptr<const FieldTable>(std::make_shared<FieldTable>(*code.field())), std::move(rows),
            CodeFamily::Punctured, params, desc);
    } catch (const std::invalid_argument&) {
        throw infeasible_error("puncturing collapses codewords");
    }
}

/// Removes the given number of trailing coordinates.
inline LinearCode puncture_trailing(const LinearCode& code, int count) {
    std::vector<int> positions;
    for (int i = 0; i < count; ++i) positions.push_back(code.length() - 1 - i);
    return puncture(code, std::move(positions));
}

/// Appends an overall parity bit to every codeword of a binary code.
/// Odd-weight codewords gain weight one; even-weight codewords are unchanged.
inline LinearCode extend_with_parity(const LinearCode& code) {
    if (!code.is_binary()) throw std::invalid_argument("extend_with_parity: binary codes only");
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(static_cast<std::size_t>(code.dimension()));
    for (const auto& row : code.generator_rows()) {
        std::vector<std::uint16_t> extended = row;
        std::uint16_t parity = 0;
        for (std::uint16_t b : row) parity ^= b;
        extended.push_back(parity);
        rows.push_back(std::move(extended));
    }
    return LinearCode::from_binary_generator(std::move(rows), CodeFamily::Extended, code.params(),
                                             "extend(" + code.description() + ")");
}

}  // namespace spherecode

#endif  // SPHERECODE_CODES_HPP
