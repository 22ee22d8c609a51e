#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "markov/laurent.hpp"
#include "markov/mirror_tree.hpp"

namespace markov {

/// Loops on the once-punctured sphere with three orbifold points, written in
/// the variable u with u^2 = q so half powers of q stay integral. Every
/// mutation reverses the cyclic orientation of the loops.
struct OrbifoldState {
    std::array<LaurentPoly, 3> loops{LaurentPoly(1), LaurentPoly(1), LaurentPoly(1)};
    bool clockwise = true;

    static OrbifoldState initial() { return {}; }
};

/// Mutate one loop: the u coefficient goes to the next loop in clockwise
/// order, u^-1 to the previous one, and the denominator is the involution of
/// the mutated loop (its simultaneously flipped partner).
inline OrbifoldState orbifold_mutate(const OrbifoldState& st, int index) {
    if (st.loops[static_cast<std::size_t>(index)].is_zero()) throw MarkovError("orbifold loop is zero");
    int next = st.clockwise ? (index + 1) % 3 : (index + 2) % 3;
    int prev = st.clockwise ? (index + 2) % 3 : (index + 1) % 3;
    LaurentPoly num = squared_of(st.loops[static_cast<std::size_t>(next)]).shifted(1) +
                      squared_of(st.loops[static_cast<std::size_t>(prev)]).shifted(-1);
    LaurentPoly den = st.loops[static_cast<std::size_t>(index)].involute();
    auto q = LaurentPoly::try_div(num, den);
    if (!q) throw NotDivisible(num, den);
    OrbifoldState out = st;
    out.loops[static_cast<std::size_t>(index)] = std::move(*q);
    out.clockwise = !st.clockwise;
    return out;
}

/// True when p is c * u^k with |c| = 1; reports the sign and exponent.
inline bool is_unit_monomial(const LaurentPoly& p, int* sign_out = nullptr, std::int64_t* exp_out = nullptr) {
    if (p.is_zero() || p.coeffs().size() != 1) return false;
    const Int& c = p.coeffs().front();
    if (c != 1 && c != -1) return false;
    if (sign_out) *sign_out = (c == 1) ? +1 : -1;
    if (exp_out) *exp_out = p.min_exp();
    return true;
}

struct OrbifoldAgreement {
    bool pass = true;
    int depth = 0;
    std::size_t nodes_checked = 0;
    bool all_signs_positive = true;
    std::string witness_path;

    explicit operator bool() const { return pass; }
};

namespace detail {

// Position of the loop whose classical value matches v.
inline int loop_with_value(const OrbifoldState& st, const Int& v) {
    for (int i = 0; i < 3; ++i)
        if (st.loops[static_cast<std::size_t>(i)].value_at_one() == v) return i;
    throw InternalInconsistency("no orbifold loop carries the requested classical value");
}

// Each orbifold loop must be the matching mirror entry, inflated into u,
// times a single monomial +-u^k.
inline bool loops_match_mirror(const OrbifoldState& st, const MirrorTriple& t, bool* sign_pos) {
    std::array<bool, 3> used{};
    for (int e = 0; e < 3; ++e) {
        const LaurentPoly& entry = t[e];
        Int v = entry.value_at_one();
        bool found = false;
        for (int i = 0; i < 3 && !found; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            const LaurentPoly& loop = st.loops[static_cast<std::size_t>(i)];
            if (loop.value_at_one() != v) continue;
            auto ratio = LaurentPoly::try_div(loop, entry.inflate(2));
            int sign = 0;
            if (ratio && is_unit_monomial(*ratio, &sign)) {
                used[static_cast<std::size_t>(i)] = true;
                if (sign < 0 && sign_pos) *sign_pos = false;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace detail

/// Orbifold state lockstep with a mirror-tree walk: the root chain mutates
/// the loops y then x (matching the once-punctured-sphere picture), after
/// which L mutates the loop holding the middle classical value and R the one
/// holding the minimum.
inline OrbifoldState orbifold_walk(const std::string& path) {
    if (path == "@0") return OrbifoldState::initial();
    OrbifoldState st = orbifold_mutate(OrbifoldState::initial(), 1);
    if (path == "@1") return st;
    st = orbifold_mutate(st, 0);
    MirrorTriple node = detail::mirror_branching_root();
    detail::MirrorNode walker = detail::MirrorNode::wrap(node);
    for (char c : path) {
        if (c == 'L') {
            st = orbifold_mutate(st, detail::loop_with_value(st, walker.t.b.value_at_one()));
            walker = walker.left();
        } else if (c == 'R') {
            st = orbifold_mutate(st, detail::loop_with_value(st, walker.t.a.value_at_one()));
            walker = walker.right();
        } else {
            throw OutOfRange(std::string("path letters must be L or R, got '") + c + "'");
        }
    }
    return st;
}

/// Sweep all paths to the given depth, checking that the orbifold mutation
/// reproduces the mirror tree up to single monomials in u.
inline OrbifoldAgreement verify_orbifold_agreement(int depth) {
    OrbifoldAgreement rep;
    rep.depth = depth;

    std::function<void(const detail::MirrorNode&, const OrbifoldState&, int)> rec =
        [&](const detail::MirrorNode& node, const OrbifoldState& st, int remaining) {
            if (!rep.pass) return;
            ++rep.nodes_checked;
            if (!detail::loops_match_mirror(st, node.t, &rep.all_signs_positive)) {
                rep.pass = false;
                rep.witness_path = node.t.path;
                return;
            }
            if (remaining == 0) return;
            OrbifoldState stl = orbifold_mutate(st, detail::loop_with_value(st, node.t.b.value_at_one()));
            rec(node.left(), stl, remaining - 1);
            if (!rep.pass) return;
            OrbifoldState str = orbifold_mutate(st, detail::loop_with_value(st, node.t.a.value_at_one()));
            rec(node.right(), str, remaining - 1);
        };

    // root chain
    OrbifoldState st0 = OrbifoldState::initial();
    if (!detail::loops_match_mirror(st0, detail::mirror_chain0(), &rep.all_signs_positive)) {
        rep.pass = false;
        rep.witness_path = "@0";
        return rep;
    }
    OrbifoldState st1 = orbifold_mutate(st0, 1);
    if (!detail::loops_match_mirror(st1, detail::mirror_chain1(), &rep.all_signs_positive)) {
        rep.pass = false;
        rep.witness_path = "@1";
        return rep;
    }
    rep.nodes_checked = 2;
    OrbifoldState st2 = orbifold_mutate(st1, 0);
    rec(detail::MirrorNode::wrap(detail::mirror_branching_root()), st2, depth);
    return rep;
}

}  // namespace markov
