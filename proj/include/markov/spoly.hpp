#pragma once

#include <utility>
#include <vector>

#include "markov/dual.hpp"
#include "markov/laurent.hpp"

namespace markov {

/// Polynomial in s = q + q^-1; index k holds the coefficient of s^k.
/// Represents exactly the symmetric Laurent polynomials.
struct SPoly {
    std::vector<Int> coeffs;  // trailing entry nonzero unless empty (zero)

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const SPoly&) const = default;

    static SPoly from_coeffs(std::vector<Int> c) {
        while (!c.empty() && c.back() == 0) c.pop_back();
        return {std::move(c)};
    }

    Int eval_int(const Int& x) const {
        Int acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    DualInt eval_dual(const DualInt& x) const {
        DualInt acc;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + DualInt{*it};
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->convert_to<double>();
        return acc;
    }
};

inline LaurentPoly to_laurent(const SPoly& sp) {
    LaurentPoly s = LaurentPoly::qplus_qinv();
    LaurentPoly pow = 1;
    LaurentPoly out;
    for (std::size_t k = 0; k < sp.coeffs.size(); ++k) {
        if (sp.coeffs[k] != 0) out += sp.coeffs[k] * pow;
        if (k + 1 < sp.coeffs.size()) pow *= s;
    }
    return out;
}

/// Rewrite a symmetric Laurent polynomial in the s-basis, using
/// q^k + q^-k = s*(q^(k-1) + q^-(k-1)) - (q^(k-2) + q^-(k-2)).
inline SPoly to_s_basis(const LaurentPoly& p) {
    if (!p.is_symmetric()) throw NotSymmetric("to_s_basis requires a symmetric polynomial");
    if (p.is_zero()) return {};
    std::int64_t d = p.degree();
    std::vector<Int> out(static_cast<std::size_t>(d) + 1);
    out[0] = p.coeff(0);
    // ck holds the s-expansion of q^k + q^-k
    std::vector<Int> prev{2};     // k = 0
    std::vector<Int> cur{0, 1};   // k = 1
    for (std::int64_t k = 1; k <= d; ++k) {
        Int a = p.coeff(k);
        if (a != 0)
            for (std::size_t j = 0; j < cur.size(); ++j) out[j] += a * cur[j];
        if (k < d) {
            std::vector<Int> next(cur.size() + 1);
            for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
            for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    return SPoly::from_coeffs(std::move(out));
}

/// Dual evaluation of a symmetric Laurent polynomial at s = a + b*eps.
inline DualInt eval_dual(const LaurentPoly& p, const DualInt& s) { return to_s_basis(p).eval_dual(s); }

}  // namespace markov
