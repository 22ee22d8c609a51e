#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "markov/cf.hpp"
#include "markov/laurent.hpp"
#include "markov/mirror_tree.hpp"

namespace markov {

enum class BranchKind { fibonacci, pell };

inline LaurentPoly m2_squared() { return LaurentPoly::from_coeffs(-1, {1, 2, 1}); }

/// The deformed odd-index Fibonacci or Pell numbers f_n / p_n together with
/// their squared values F_n / P_n.
struct BranchSeq {
    BranchKind kind;
    std::vector<LaurentPoly> terms;
    std::vector<LaurentPoly> squared;

    const LaurentPoly& term(int n) const { return terms[static_cast<std::size_t>(n)]; }
    const LaurentPoly& sq(int n) const { return squared[static_cast<std::size_t>(n)]; }
};

/// Build the branch to index n_max with the closed recurrences
///   f_{n+1} = [3]_q mirror(f_n) - q^3 f_{n-1},
///   p_{n+1} = 2 [3]_q mirror(p_n) - p_{n-1}.
/// With check_mutation_route set, the branch mutation formulas
///   f_n = q^deg(f_{n-1}) (q + F_{n-1}) / mirror(f_{n-2}),
///   p_n = q^deg(p_{n-1}) (q^-1 M_2 + P_{n-1}) / mirror(p_{n-2})
/// are evaluated as well and must agree exactly.
inline BranchSeq build_branch(BranchKind kind, int n_max, bool check_mutation_route = kCheckedMutations) {
    BranchSeq seq{kind, {}, {}};
    const LaurentPoly three_q = LaurentPoly::q_integer(3);
    const bool fib = kind == BranchKind::fibonacci;
    seq.terms.push_back(1);
    seq.terms.push_back(fib ? LaurentPoly::from_coeffs(0, {1, 1}) : LaurentPoly::from_coeffs(0, {1, 2, 2}));
    for (int n = 2; n <= n_max; ++n) {
        const LaurentPoly& prev = seq.terms[static_cast<std::size_t>(n - 1)];
        const LaurentPoly& prev2 = seq.terms[static_cast<std::size_t>(n - 2)];
        LaurentPoly next =
            fib ? three_q * prev.mirror() - prev2.shifted(3) : Int(2) * (three_q * prev.mirror()) - prev2;
        seq.terms.push_back(std::move(next));
    }
    for (const auto& t : seq.terms) seq.squared.push_back(squared_of(t));

    for (int n = 0; n <= n_max; ++n) {
        std::int64_t expected = fib ? n : 2 * n;
        if (seq.term(n).degree() != expected)
            throw InternalInconsistency("branch degree law failed at n=" + std::to_string(n));
    }
    if (check_mutation_route) {
        for (int n = 2; n <= n_max; ++n) {
            LaurentPoly head = fib ? LaurentPoly::monomial(1, 1) : m2_squared().shifted(-1);
            LaurentPoly num = (head + seq.sq(n - 1)).shifted(seq.term(n - 1).degree());
            LaurentPoly alt = exact_div(num, seq.term(n - 2).mirror());
            if (alt != seq.term(n))
                throw InternalInconsistency("branch mutation route disagrees at n=" + std::to_string(n));
        }
    }
    return seq;
}

inline LaurentPoly fib(int n) { return build_branch(BranchKind::fibonacci, n).term(n); }
inline LaurentPoly pell(int n) { return build_branch(BranchKind::pell, n).term(n); }

/// (q^n F_0 + q^(n+1) F_n + q^(n-1) F_{n-1}) / (f_n f_{n-1}); always [3]_q.
inline LaurentPoly qmarkov_fib(int n, const BranchSeq& seq) {
    LaurentPoly num = LaurentPoly::monomial(1, n) + seq.sq(n).shifted(n + 1) + seq.sq(n - 1).shifted(n - 1);
    LaurentPoly val = exact_div(num, seq.term(n) * seq.term(n - 1));
    if (val != LaurentPoly::q_integer(3)) throw NotConstant("Fibonacci q-Markov value is not [3]_q");
    return val;
}

/// (q^(2n+1) M_2 + q^(2n) P_n + q^(2n+2) P_{n-1}) / (2 p_n p_{n-1}); always [3]_q.
inline LaurentPoly qmarkov_pell(int n, const BranchSeq& seq) {
    LaurentPoly num =
        m2_squared().shifted(2 * n + 1) + seq.sq(n).shifted(2 * n) + seq.sq(n - 1).shifted(2 * n + 2);
    LaurentPoly val = exact_div(num, Int(2) * (seq.term(n) * seq.term(n - 1)));
    if (val != LaurentPoly::q_integer(3)) throw NotConstant("Pell q-Markov value is not [3]_q");
    return val;
}

inline LaurentPoly qmarkov_fib(int n) { return qmarkov_fib(n, build_branch(BranchKind::fibonacci, n)); }
inline LaurentPoly qmarkov_pell(int n) { return qmarkov_pell(n, build_branch(BranchKind::pell, n)); }

/// The mirrored-side identities and second recurrences at index n:
///   [3]_q mirror(f_n) mirror(f_{n-1}) = q^(n+1) F_0 + q^n F_n + q^(n+2) F_{n-1}
///   q mirror(f_{n+1})                 = [3]_q f_n - mirror(f_{n-1})
///   [3]_q 2 mirror(p_n) mirror(p_{n-1}) = q^(2n-1) M_2 + q^(2n) P_n + q^(2n-2) P_{n-1}
///   mirror(p_{n+1})                   = 2 [3]_q p_n - q^4 mirror(p_{n-1})
inline bool mirror_identities(int n, const BranchSeq& f, const BranchSeq& p) {
    const LaurentPoly three_q = LaurentPoly::q_integer(3);

    LaurentPoly f_lhs = three_q * (f.term(n).mirror() * f.term(n - 1).mirror());
    LaurentPoly f_rhs = LaurentPoly::monomial(1, n + 1) + f.sq(n).shifted(n) + f.sq(n - 1).shifted(n + 2);
    if (f_lhs != f_rhs) return false;
    if (f.term(n + 1).mirror().shifted(1) != three_q * f.term(n) - f.term(n - 1).mirror()) return false;

    LaurentPoly p_lhs = three_q * (Int(2) * (p.term(n).mirror() * p.term(n - 1).mirror()));
    LaurentPoly p_rhs =
        m2_squared().shifted(2 * n - 1) + p.sq(n).shifted(2 * n) + p.sq(n - 1).shifted(2 * n - 2);
    if (p_lhs != p_rhs) return false;
    if (p.term(n + 1).mirror() != Int(2) * (three_q * p.term(n)) - p.term(n - 1).mirror().shifted(4))
        return false;
    return true;
}

inline bool mirror_identities(int n) {
    return mirror_identities(n, build_branch(BranchKind::fibonacci, n + 1, false),
                             build_branch(BranchKind::pell, n + 1, false));
}

namespace detail {

inline LaurentPoly cf_1q() { return LaurentPoly::from_coeffs(0, {1, 1}); }        // 1 + q
inline LaurentPoly cf_1q_sq() { return LaurentPoly::from_coeffs(0, {1, 2, 1}); }  // (1+q)^2

// Tail generators for the parity-dependent closed forms; each *_minus(m)
// emits the continued fraction of the shifted ratio at index m.
inline void fib_v_minus(int m, std::vector<LaurentPoly>& out);

inline void fib_u_minus(int m, std::vector<LaurentPoly>& out) {
    out.push_back(LaurentPoly::monomial(1, 1));
    if (m == 1) {
        out.push_back(cf_1q().shifted(-2));
        return;
    }
    out.push_back(LaurentPoly::monomial(1, -2));
    fib_v_minus(m - 1, out);
}

inline void fib_v_minus(int m, std::vector<LaurentPoly>& out) {
    out.push_back(LaurentPoly::monomial(1, 1));
    if (m == 1) {
        out.push_back(cf_1q().shifted(-1));
        return;
    }
    out.push_back(LaurentPoly(1));
    fib_u_minus(m - 1, out);
}

inline void pell_z_minus(int m, std::vector<LaurentPoly>& out);

inline void pell_w_minus(int m, std::vector<LaurentPoly>& out) {
    out.push_back(cf_1q_sq());
    out.push_back(LaurentPoly(1));
    if (m == 1) {
        out.push_back(cf_1q_sq());
        return;
    }
    pell_z_minus(m - 1, out);
}

inline void pell_z_minus(int m, std::vector<LaurentPoly>& out) {
    out.push_back(cf_1q_sq());
    out.push_back(LaurentPoly::monomial(1, -2));
    if (m == 1) {
        out.push_back(cf_1q_sq());
        return;
    }
    pell_w_minus(m - 1, out);
}

}  // namespace detail

/// Closed-form continued fraction for f_{n+1}/mirror(f_n) resp.
/// p_{n+1}/mirror(p_n); the Pell list has length 2n+1.
inline PolyCF ratio_cf(BranchKind kind, int n) {
    if (n < 1) throw OutOfRange("ratio_cf requires n >= 1");
    PolyCF cf;
    if (kind == BranchKind::fibonacci) {
        cf.entries.push_back(detail::cf_1q());
        if (n == 1) {
            cf.entries.push_back(detail::cf_1q().shifted(-2));
        } else {
            cf.entries.push_back(LaurentPoly::monomial(1, -2));
            detail::fib_v_minus(n - 1, cf.entries);
        }
    } else {
        cf.entries.push_back(LaurentPoly::from_coeffs(0, {1, 2, 2}));
        cf.entries.push_back(LaurentPoly(1));
        if (n == 1) {
            cf.entries.push_back(detail::cf_1q_sq());
        } else {
            detail::pell_z_minus(n - 1, cf.entries);
        }
    }
    return cf;
}

/// Cross-multiplied equality of the closed-form continued fraction with the
/// exact branch ratio.
inline bool verify_ratio_cf(BranchKind kind, int n, const BranchSeq& seq) {
    auto [num, den] = cf_eval(ratio_cf(kind, n));
    return num * seq.term(n).mirror() == den * seq.term(n + 1);
}

inline bool verify_ratio_cf(BranchKind kind, int n) {
    return verify_ratio_cf(kind, n, build_branch(kind, n + 1, false));
}

}  // namespace markov
