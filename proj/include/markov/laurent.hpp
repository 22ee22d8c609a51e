#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "markov/errors.hpp"

namespace markov {

using Int = boost::multiprecision::cpp_int;

inline Int int_pow(const Int& base, std::int64_t e) {
    Int acc = 1;
    Int b = base;
    for (std::int64_t k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= b;
        if (k > 1) b *= b;
    }
    return acc;
}

/// Laurent polynomial in one variable q with arbitrary-precision integer
/// coefficients, the universal carrier of the whole library.
///
/// Canonical form: `coeffs[i]` holds the coefficient of q^(min_exp+i); the
/// first and last entries are nonzero. The zero polynomial is the empty
/// vector with min_exp fixed at 0, so equality is structural.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t c) : LaurentPoly(Int(c)) {}
    LaurentPoly(Int c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }

    static LaurentPoly monomial(Int c, std::int64_t exp) {
        LaurentPoly p;
        if (c != 0) {
            p.min_exp_ = exp;
            p.coeffs_.push_back(std::move(c));
        }
        return p;
    }

    /// q + q^-1, the deformation parameter s.
    static LaurentPoly qplus_qinv() { return from_coeffs(-1, {1, 0, 1}); }

    /// The q-integer [n]_q = 1 + q + ... + q^(n-1).
    static LaurentPoly q_integer(int n) {
        return from_coeffs(0, std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
    }

    static LaurentPoly from_coeffs(std::int64_t min_exp, std::vector<Int> coeffs) {
        LaurentPoly p;
        p.min_exp_ = min_exp;
        p.coeffs_ = std::move(coeffs);
        p.canonicalize();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t min_exp() const { return min_exp_; }
    /// Maximum exponent; only meaningful for nonzero polynomials.
    std::int64_t degree() const {
        if (is_zero()) throw MarkovError("degree of zero polynomial");
        return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int coeff(std::int64_t exp) const {
        std::int64_t i = exp - min_exp_;
        if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::int64_t lo = std::min(a.min_exp_, b.min_exp_);
        std::int64_t hi = std::max(a.degree(), b.degree());
        std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            c[static_cast<std::size_t>(a.min_exp_ - lo) + i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            c[static_cast<std::size_t>(b.min_exp_ - lo) + i] += b.coeffs_[i];
        return from_coeffs(lo, std::move(c));
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        // Degree additivity holds since leading/trailing products are nonzero.
        return from_coeffs(a.min_exp_ + b.min_exp_, std::move(c));
    }

    friend LaurentPoly operator*(const Int& k, const LaurentPoly& p) {
        if (k == 0) return {};
        LaurentPoly r = p;
        for (auto& c : r.coeffs_) c *= k;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& p, const Int& k) { return k * p; }

    /// Monomial shift: q^k * p.
    LaurentPoly shifted(std::int64_t k) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.min_exp_ += k;
        return r;
    }

    /// q -> q^-1.
    LaurentPoly involute() const {
        if (is_zero()) return {};
        LaurentPoly r;
        r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        r.min_exp_ = -degree();
        return r;
    }

    bool is_symmetric() const { return *this == involute(); }

    /// Coefficient reversal q^deg(p) * p(q^-1); defined for true polynomials.
    LaurentPoly mirror() const {
        if (is_zero()) return {};
        if (min_exp_ < 0) throw NegativeExponent("mirror requires min_exp >= 0");
        return involute().shifted(degree());
    }

    /// q -> q^k; exponents multiply, coefficients unchanged.
    LaurentPoly inflate(std::int64_t k) const {
        if (k < 1) throw OutOfRange("inflate requires k >= 1");
        if (is_zero() || k == 1) return *this;
        std::vector<Int> c(static_cast<std::size_t>((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(k)] = coeffs_[i];
        return from_coeffs(min_exp_ * k, std::move(c));
    }

    /// Strict positivity on the full contiguous support: no internal zeros,
    /// no negatives. Zero polynomial is not positive.
    bool is_positive() const {
        if (is_zero()) return false;
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c > 0; });
    }

    Int value_at_one() const {
        Int s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    /// Exact integer evaluation. Requires a nonzero point when min_exp < 0;
    /// with negative exponents the value must be an integer or the
    /// evaluation reports NotExactEvaluation.
    Int eval_int(const Int& x) const {
        if (is_zero()) return 0;
        if (x == 0) {
            if (min_exp_ < 0) throw ZeroPoint("evaluation at 0 with negative exponents");
            return coeff(0);
        }
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        if (min_exp_ >= 0) return acc * int_pow(x, min_exp_);
        Int den = int_pow(x, -min_exp_);
        Int q, r;
        boost::multiprecision::divide_qr(acc, den, q, r);
        if (r != 0) throw NotExactEvaluation("integer evaluation is not exact");
        return q;
    }

    /// Double-precision evaluation; approximate by nature.
    double eval_double(double x) const {
        if (is_zero()) return 0.0;
        if (x == 0.0 && min_exp_ < 0) throw ZeroPoint("evaluation at 0 with negative exponents");
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + it->convert_to<double>();
        double scale = 1.0;
        std::int64_t m = min_exp_;
        for (; m > 0; --m) scale *= x;
        for (; m < 0; ++m) scale /= x;
        return acc * scale;
    }

    static std::optional<LaurentPoly> try_div(const LaurentPoly& num, const LaurentPoly& den) {
        if (den.is_zero()) throw MarkovError("division by zero polynomial");
        if (num.is_zero()) return LaurentPoly{};
        if (num.coeffs_.size() < den.coeffs_.size()) return std::nullopt;
        std::vector<Int> rem = num.coeffs_;
        const std::vector<Int>& d = den.coeffs_;
        std::size_t qlen = rem.size() - d.size() + 1;
        std::vector<Int> qc(qlen);
        const Int& dlead = d.back();
        for (std::size_t i = qlen; i-- > 0;) {
            Int& lead = rem[i + d.size() - 1];
            if (lead == 0) continue;
            Int q, r;
            boost::multiprecision::divide_qr(lead, dlead, q, r);
            if (r != 0) return std::nullopt;
            for (std::size_t j = 0; j + 1 < d.size(); ++j) rem[i + j] -= q * d[j];
            lead = 0;
            qc[i] = std::move(q);
        }
        for (const auto& c : rem)
            if (c != 0) return std::nullopt;
        return from_coeffs(num.min_exp_ - den.min_exp_, std::move(qc));
    }

    /// Plain text, lowest degree first: "2 q^-2 + 6 q^-1 + 9 + 6 q + 2 q^2".
    std::string to_text() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            Int c = coeffs_[i];
            if (!out.empty()) {
                out += (c < 0) ? " - " : " + ";
                if (c < 0) c = -c;
            } else if (c < 0) {
                out += "-";
                c = -c;
            }
            std::int64_t e = min_exp_ + static_cast<std::int64_t>(i);
            if (e == 0) {
                out += c.str();
            } else {
                if (c != 1) out += c.str() + " ";
                out += (e == 1) ? "q" : "q^" + std::to_string(e);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_text(); }

  private:
    void canonicalize() {
        std::size_t lo = 0;
        while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
        if (lo == coeffs_.size()) {
            coeffs_.clear();
            min_exp_ = 0;
            return;
        }
        std::size_t hi = coeffs_.size();
        while (coeffs_[hi - 1] == 0) --hi;
        if (lo > 0 || hi < coeffs_.size()) {
            coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lo),
                                       coeffs_.begin() + static_cast<std::ptrdiff_t>(hi));
            min_exp_ += static_cast<std::int64_t>(lo);
        }
    }

    std::int64_t min_exp_ = 0;
    std::vector<Int> coeffs_;
};

/// Semantic outcome of a division with a nonzero remainder, e.g. a forbidden
/// mirror mutation. Carries the fraction for inspection.
struct NotDivisible : MarkovError {
    NotDivisible(LaurentPoly num, LaurentPoly den)
        : MarkovError("exact division failed: (" + num.to_text() + ") / (" + den.to_text() + ")"),
          numerator(std::move(num)),
          denominator(std::move(den)) {}
    LaurentPoly numerator;
    LaurentPoly denominator;
};

inline LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    auto q = LaurentPoly::try_div(num, den);
    if (!q) throw NotDivisible(num, den);
    return *q;
}

inline LaurentPoly mirror(const LaurentPoly& p) { return p.mirror(); }
inline LaurentPoly involute(const LaurentPoly& p) { return p.involute(); }
inline bool is_symmetric(const LaurentPoly& p) { return p.is_symmetric(); }
inline LaurentPoly inflate(const LaurentPoly& p, std::int64_t k) { return p.inflate(k); }
inline bool is_positive(const LaurentPoly& p) { return p.is_positive(); }

/// p(q) * p(q^-1), always symmetric; equals q^-deg(p) * p * mirror(p) for
/// true polynomials.
inline LaurentPoly squared_of(const LaurentPoly& p) { return p * p.involute(); }

/// 64+64-bit FNV-1a digest of the canonical form, for deduplication sweeps.
/// Collisions are resolved by exact comparison at the call sites.
struct PolyDigest {
    std::uint64_t a = 0, b = 0;
    bool operator==(const PolyDigest&) const = default;
    bool operator<(const PolyDigest& o) const { return a != o.a ? a < o.a : b < o.b; }
};

inline PolyDigest digest(const LaurentPoly& p) {
    auto fnv = [](std::uint64_t h, const char* data, std::size_t n, std::uint64_t prime) {
        for (std::size_t i = 0; i < n; ++i) {
            h ^= static_cast<unsigned char>(data[i]);
            h *= prime;
        }
        return h;
    };
    std::uint64_t h1 = 14695981039346656037ull;
    std::uint64_t h2 = 0xcbf29ce484222325ull ^ 0x9e3779b97f4a7c15ull;
    std::string head = std::to_string(p.is_zero() ? 0 : p.min_exp()) + ";";
    h1 = fnv(h1, head.data(), head.size(), 1099511628211ull);
    h2 = fnv(h2, head.data(), head.size(), 0x100000001b3ull);
    for (const auto& c : p.coeffs()) {
        std::string s = c.str() + ",";
        h1 = fnv(h1, s.data(), s.size(), 1099511628211ull);
        h2 = fnv(h2, s.data(), s.size(), 0x100000001b3ull);
    }
    return {h1, h2};
}

}  // namespace markov
