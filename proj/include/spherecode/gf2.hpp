/**
 * @file gf2.hpp
 * @brief Exact arithmetic over GF(2), GF(2^m) and polynomials over GF(2).
 *
 * Provides the algebraic substrate for the block-code constructions:
 * bit-packed polynomials over GF(2) with ring operations (add, mul,
 * divmod, gcd, lcm), log/antilog tables for GF(2^m) under a fixed
 * published primitive polynomial per m, and minimal polynomials of
 * field elements via conjugacy-class expansion.
 */

#ifndef SPHERECODE_GF2_HPP
#define SPHERECODE_GF2_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spherecode {

/// Polynomial over GF(2), coefficients bit-packed lowest degree first.
/// The zero polynomial is a distinct state (is_zero()); degree() is only
/// defined for nonzero polynomials. Nonzero polynomials are always monic
/// since the leading coefficient is 1 by construction.
class Poly2 {
  public:
    Poly2() = default;  // zero polynomial

    static Poly2 zero() { return Poly2(); }

    static Poly2 one() { return from_coeff_bits(1u); }

    /// Builds a polynomial from packed coefficient bits (bit i = coeff of x^i).
    static Poly2 from_coeff_bits(std::uint64_t bits) {
        Poly2 p;
        if (bits != 0) p.words_.push_back(bits);
        return p;
    }

    static Poly2 monomial(int degree) {
        if (degree < 0) throw std::invalid_argument("Poly2::monomial: negative degree");
        Poly2 p;
        p.words_.assign(static_cast<std::size_t>(degree / 64) + 1, 0u);
        p.words_.back() = std::uint64_t{1} << (degree % 64);
        return p;
    }

    bool is_zero() const { return words_.empty(); }

    /// Degree of a nonzero polynomial. Throws std::logic_error on the zero
    /// polynomial; the zero state is tracked as a flag, not a degree value.
    int degree() const {
        if (is_zero()) throw std::logic_error("Poly2::degree: zero polynomial");
        const std::uint64_t top = words_.back();
        int bit = 63;
        while (((top >> bit) & 1u) == 0) --bit;
        return static_cast<int>(words_.size() - 1) * 64 + bit;
    }

    bool coeff(int i) const {
        if (i < 0) return false;
        const std::size_t w = static_cast<std::size_t>(i) / 64;
        if (w >= words_.size()) return false;
        return ((words_[w] >> (i % 64)) & 1u) != 0;
    }

    void set_coeff(int i, bool value) {
        if (i < 0) throw std::invalid_argument("Poly2::set_coeff: negative index");
        const std::size_t w = static_cast<std::size_t>(i) / 64;
        if (value) {
            if (w >= words_.size()) words_.resize(w + 1, 0u);
            words_[w] |= std::uint64_t{1} << (i % 64);
        } else if (w < words_.size()) {
            words_[w] &= ~(std::uint64_t{1} << (i % 64));
            trim();
        }
    }

    /// Packed coefficient bits; requires degree < 64.
    std::uint64_t to_bits() const {
        if (is_zero()) return 0;
        if (degree() >= 64) throw std::logic_error("Poly2::to_bits: degree >= 64");
        return words_[0];
    }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        Poly2 r;
        r.words_.resize(std::max(a.words_.size(), b.words_.size()), 0u);
        for (std::size_t i = 0; i < a.words_.size(); ++i) r.words_[i] ^= a.words_[i];
        for (std::size_t i = 0; i < b.words_.size(); ++i) r.words_[i] ^= b.words_[i];
        r.trim();
        return r;
    }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        if (a.is_zero() || b.is_zero()) return Poly2();
        Poly2 r;
        r.words_.assign(a.words_.size() + b.words_.size(), 0u);
        const int db = b.degree();
        for (int i = 0; i <= db; ++i) {
            if (!b.coeff(i)) continue;
            r.xor_shifted(a, i);
        }
        r.trim();
        return r;
    }

    /// Quotient and remainder of a / b; b must be nonzero.
    static std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b) {
        if (b.is_zero()) throw std::invalid_argument("Poly2::divmod: division by zero polynomial");
        if (a.is_zero()) return {Poly2(), Poly2()};
        const int db = b.degree();
        Poly2 rem = a;
        Poly2 quot;
        while (!rem.is_zero() && rem.degree() >= db) {
            const int shift = rem.degree() - db;
            quot.set_coeff(shift, true);
            rem.xor_shifted(b, shift);
            rem.trim();
        }
        return {quot, rem};
    }

    friend Poly2 operator/(const Poly2& a, const Poly2& b) { return divmod(a, b).first; }
    friend Poly2 operator%(const Poly2& a, const Poly2& b) { return divmod(a, b).second; }

    static Poly2 gcd(Poly2 a, Poly2 b) {
        while (!b.is_zero()) {
            Poly2 r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;  // monic by construction over GF(2)
    }

    bool operator==(const Poly2& other) const { return words_ == other.words_; }

    /// Human-readable form, e.g. "x^3 + x + 1"; "0" for the zero polynomial.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (!coeff(i)) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) s += "1";
            else if (i == 1) s += "x";
            else s += "x^" + std::to_string(i);
        }
        return s;
    }

  private:
    std::vector<std::uint64_t> words_;

    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    // this ^= (p << shift)
    void xor_shifted(const Poly2& p, int shift) {
        const std::size_t word_shift = static_cast<std::size_t>(shift) / 64;
        const int bit_shift = shift % 64;
        const std::size_t need = p.words_.size() + word_shift + 1;
        if (words_.size() < need) words_.resize(need, 0u);
        for (std::size_t i = 0; i < p.words_.size(); ++i) {
            words_[i + word_shift] ^= p.words_[i] << bit_shift;
            if (bit_shift != 0) words_[i + word_shift + 1] ^= p.words_[i] >> (64 - bit_shift);
        }
    }
};

/// Least common multiple, monic. Throws on zero input: the zero polynomial
/// has no lcm.
inline Poly2 poly_lcm(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("zero polynomial has no lcm");
    return (a / Poly2::gcd(a, b)) * b;
}

/// Element of GF(2^m) in packed representation (value < 2^m).
struct FieldElement {
    std::uint32_t value = 0;
    int m = 1;
};

/// Log/antilog tables for GF(2^m), 1 <= m <= 16, under one fixed primitive
/// polynomial per m (the standard minimum-weight entries published in code
/// tables; see primitive_polynomial_bits). Using a fixed polynomial makes
/// every generator polynomial and codeword set reproducible across runs.
///
/// antilog_table()[i] = alpha^i for 0 <= i < 2^m - 1, with the final slot
/// wrapping to alpha^0 = 1. log_table()[x] is the discrete log of nonzero x;
/// slot 0 holds the sentinel 2^m - 1.
class FieldTable {
  public:
    explicit FieldTable(int m) : m_(m) {
        if (m < 1 || m > 16) throw std::invalid_argument("FieldTable: m must be in [1, 16]");
        prim_ = Poly2::from_coeff_bits(primitive_polynomial_bits(m));
        const std::uint32_t size = std::uint32_t{1} << m;
        const std::uint32_t poly_low = static_cast<std::uint32_t>(primitive_polynomial_bits(m)) & (size - 1);
        log_.assign(size, size - 1);
        antilog_.assign(size, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i + 1 < size; ++i) {
            if (x != 1 && log_[x] != size - 1)
                throw std::logic_error("FieldTable: polynomial is not primitive");
            antilog_[i] = x;
            log_[x] = i;
            // multiply by alpha = x, reduce mod the primitive polynomial
            x <<= 1;
            if (x & size) x = (x ^ poly_low) & (size - 1);
        }
        antilog_[size - 1] = 1;  // alpha^(2^m - 1) = 1
        if (x != 1) throw std::logic_error("FieldTable: multiplicative order mismatch");
    }

    int m() const { return m_; }
    std::uint32_t order() const { return std::uint32_t{1} << m_; }
    std::uint32_t num_nonzero() const { return order() - 1; }
    const Poly2& primitive_poly() const { return prim_; }
    const std::vector<std::uint32_t>& log_table() const { return log_; }
    const std::vector<std::uint32_t>& antilog_table() const { return antilog_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % num_nonzero()];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("FieldTable::inv: zero has no inverse");
        return antilog_[(num_nonzero() - log_[a]) % num_nonzero()];
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    /// alpha^e with e reduced mod 2^m - 1 (negative exponents allowed).
    std::uint32_t pow_alpha(long long e) const {
        const long long n = num_nonzero();
        return antilog_[static_cast<std::uint32_t>(((e % n) + n) % n)];
    }

    /// a^e for any field element a.
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        return pow_alpha(static_cast<long long>((log_[a] * static_cast<unsigned long long>(e % num_nonzero())) % num_nonzero()));
    }

    std::uint32_t log(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("FieldTable::log: log of zero");
        return log_[a];
    }

    FieldElement element(std::uint32_t value) const {
        if (value >= order()) throw std::invalid_argument("FieldTable::element: value out of range");
        return FieldElement{value, m_};
    }

    FieldElement mul(FieldElement a, FieldElement b) const {
        check(a);
        check(b);
        return FieldElement{mul(a.value, b.value), m_};
    }

    FieldElement add(FieldElement a, FieldElement b) const {
        check(a);
        check(b);
        return FieldElement{a.value ^ b.value, m_};
    }

    /// The fixed primitive polynomial for GF(2^m), as packed coefficient bits.
    static std::uint64_t primitive_polynomial_bits(int m) {
        // Standard table, one entry per m (minimum-weight primitive
        // polynomials as tabulated in the classic code-table listings).
        static constexpr std::uint64_t table[17] = {
            0,
            0x3,      // m=1:  x + 1
            0x7,      // m=2:  x^2 + x + 1
            0xB,      // m=3:  x^3 + x + 1
            0x13,     // m=4:  x^4 + x + 1
            0x25,     // m=5:  x^5 + x^2 + 1
            0x43,     // m=6:  x^6 + x + 1
            0x89,     // m=7:  x^7 + x^3 + 1
            0x11D,    // m=8:  x^8 + x^4 + x^3 + x^2 + 1
            0x211,    // m=9:  x^9 + x^4 + 1
            0x409,    // m=10: x^10 + x^3 + 1
            0x805,    // m=11: x^11 + x^2 + 1
            0x1053,   // m=12: x^12 + x^6 + x^4 + x + 1
            0x201B,   // m=13: x^13 + x^4 + x^3 + x + 1
            0x4443,   // m=14: x^14 + x^10 + x^6 + x + 1
            0x8003,   // m=15: x^15 + x + 1
            0x1100B,  // m=16: x^16 + x^12 + x^3 + x + 1
        };
        if (m < 1 || m > 16) throw std::invalid_argument("primitive_polynomial_bits: m out of range");
        return table[m];
    }

  private:
    int m_;
    Poly2 prim_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> antilog_;

    void check(FieldElement a) const {
        if (a.m != m_) throw std::invalid_argument("FieldTable: element from a different field");
        if (a.value >= order()) throw std::invalid_argument("FieldTable: element value out of range");
    }
};

inline FieldTable build_field(int m) { return FieldTable(m); }

/// Monic minimal polynomial over GF(2) of alpha^alpha_power, computed by
/// expanding the product of (x - alpha^s) over the conjugacy class
/// {alpha_power * 2^i mod (2^m - 1)}.
inline Poly2 minimal_polynomial(std::uint32_t alpha_power, const FieldTable& field) {
    const std::uint32_t n = field.num_nonzero();
    if (alpha_power >= n && alpha_power != 0)
        throw std::invalid_argument("minimal_polynomial: alpha_power out of range");

    std::vector<std::uint32_t> conjugates;
    std::uint32_t s = alpha_power % n;
    do {
        conjugates.push_back(s);
        s = static_cast<std::uint32_t>((2ull * s) % n);
    } while (n > 1 && s != conjugates.front());

    // expand prod (x + alpha^s) over GF(2^m); coefficients land in {0,1}
    std::vector<std::uint32_t> coeffs{1};  // constant polynomial 1
    for (std::uint32_t e : conjugates) {
        const std::uint32_t root = field.pow_alpha(e);
        std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];                  // x * coeffs[i]
            next[i] ^= field.mul(root, coeffs[i]);     // root * coeffs[i]
        }
        coeffs = std::move(next);
    }

    Poly2 result;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1) throw std::logic_error("minimal_polynomial: coefficient outside GF(2)");
        if (coeffs[i] == 1) result.set_coeff(static_cast<int>(i), true);
    }
    return result;
}

}  // namespace spherecode

#endif  // SPHERECODE_GF2_HPP
