#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "markov/laurent.hpp"

// Frozen reference values used across the suites: the first mirror Markov
// numbers m_n, their squared counterparts M_n, and the branch seeds.
namespace fixtures {

using markov::Int;
using markov::LaurentPoly;

inline LaurentPoly lp(std::int64_t min_exp, std::vector<long long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return LaurentPoly::from_coeffs(min_exp, std::move(v));
}

inline LaurentPoly m1() { return lp(0, {1}); }
inline LaurentPoly m2() { return lp(0, {1, 1}); }
inline LaurentPoly m5() { return lp(0, {1, 2, 2}); }
inline LaurentPoly m13() { return lp(0, {2, 4, 5, 2}); }
inline LaurentPoly m29() { return lp(0, {3, 8, 10, 6, 2}); }
inline LaurentPoly m34() { return lp(0, {2, 7, 11, 10, 4}); }
inline LaurentPoly m194() { return lp(0, {6, 24, 47, 55, 40, 18, 4}); }
inline LaurentPoly m169() { return lp(0, {3, 14, 34, 48, 42, 22, 6}); }
inline LaurentPoly m433() { return lp(0, {6, 28, 70, 108, 111, 74, 30, 6}); }

inline LaurentPoly M1() { return lp(0, {1}); }
inline LaurentPoly M2() { return lp(-1, {1, 2, 1}); }
inline LaurentPoly M5() { return lp(-2, {2, 6, 9, 6, 2}); }
inline LaurentPoly M13() { return lp(-3, {4, 18, 38, 49, 38, 18, 4}); }
inline LaurentPoly M29() { return lp(-4, {6, 34, 98, 176, 213, 176, 98, 34, 6}); }

inline LaurentPoly f5() { return lp(0, {4, 14, 25, 26, 16, 4}); }
inline LaurentPoly p4() { return lp(0, {9, 48, 130, 218, 246, 192, 102, 34, 6}); }

// Deterministic random polynomials for property checks.
struct Rng {
    std::mt19937 gen{20250809u};

    long long coeff(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(gen);
    }

    LaurentPoly poly(int max_deg, std::int64_t min_lo = -4, std::int64_t min_hi = 4) {
        int len = 1 + static_cast<int>(coeff(0, max_deg));
        std::int64_t mn = coeff(min_lo, min_hi);
        std::vector<Int> cs;
        cs.reserve(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) cs.emplace_back(coeff(-9, 9));
        return LaurentPoly::from_coeffs(mn, std::move(cs));
    }

    LaurentPoly nonzero_poly(int max_deg, std::int64_t min_lo = -4, std::int64_t min_hi = 4) {
        for (;;) {
            auto p = poly(max_deg, min_lo, min_hi);
            if (!p.is_zero()) return p;
        }
    }

    LaurentPoly symmetric_poly(int max_deg) {
        int d = static_cast<int>(coeff(0, max_deg));
        std::vector<Int> cs(static_cast<std::size_t>(2 * d + 1));
        for (int k = 0; k <= d; ++k) {
            Int c = coeff(-9, 9);
            cs[static_cast<std::size_t>(d + k)] = c;
            cs[static_cast<std::size_t>(d - k)] = c;
        }
        return LaurentPoly::from_coeffs(-d, std::move(cs));
    }
};

}  // namespace fixtures
