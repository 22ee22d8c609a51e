#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "markov/laurent.hpp"
#include "markov/squared_tree.hpp"

namespace markov {

/// Node of the mirror Markov tree: a polynomial triple ordered by value at
/// q = 1, carrying the sign of its incoming edge (+1 blue, -1 red) and its
/// path ("@0", "@1", "" or an {L,R}-word, as in the squared tree).
struct MirrorTriple {
    LaurentPoly a, b, c;
    int sign = +1;
    std::string path;

    const LaurentPoly& operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

namespace detail {

inline void require_polynomial_order(const LaurentPoly& a, const LaurentPoly& c, const LaurentPoly& nw) {
    if (nw.is_zero() || nw.min_exp() < 0)
        throw InternalInconsistency("mirror mutation produced a non-polynomial entry");
    if (!(a.value_at_one() <= c.value_at_one() && c.value_at_one() <= nw.value_at_one()))
        throw InternalInconsistency("mirror mutation broke the triple ordering");
}

}  // namespace detail

/// Left edge with an explicit sign: (a, b, c) -> (a, c, q^deg(c) (q^s A + C) / mirror(b)).
/// A, C are the squared values of the entries. The rule-conforming sign is
/// the node's own; other signs are exposed for the forbidden-direction
/// experiments and may legitimately fail with NotDivisible.
inline MirrorTriple mutate_left_with_sign(const MirrorTriple& t, int sign) {
    LaurentPoly A = squared_of(t.a);
    LaurentPoly C = squared_of(t.c);
    LaurentPoly num = (A.shifted(sign) + C).shifted(t.c.degree());
    LaurentPoly den = t.b.mirror();
    auto q = LaurentPoly::try_div(num, den);
    if (!q) throw NotDivisible(num, den);
    detail::require_polynomial_order(t.a, t.c, *q);
    return {t.a, t.c, std::move(*q), sign, t.path + "L"};
}

inline MirrorTriple mutate_right_with_sign(const MirrorTriple& t, int sign) {
    LaurentPoly B = squared_of(t.b);
    LaurentPoly C = squared_of(t.c);
    LaurentPoly num = (B.shifted(-sign) + C).shifted(t.c.degree());
    LaurentPoly den = t.a.mirror();
    auto q = LaurentPoly::try_div(num, den);
    if (!q) throw NotDivisible(num, den);
    detail::require_polynomial_order(t.b, t.c, *q);
    return {t.b, t.c, std::move(*q), -sign, t.path + "R"};
}

/// Rule-conforming mutations: the left edge keeps the incoming sign, the
/// right edge flips it. These never raise NotDivisible.
inline MirrorTriple mutate_left(const MirrorTriple& t) { return mutate_left_with_sign(t, t.sign); }
inline MirrorTriple mutate_right(const MirrorTriple& t) { return mutate_right_with_sign(t, t.sign); }

/// Integer shadow at q = 1; always a classical Markov triple.
inline std::array<Int, 3> classical_shadow(const MirrorTriple& t) {
    std::array<Int, 3> v{t.a.value_at_one(), t.b.value_at_one(), t.c.value_at_one()};
    Int lhs = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    Int rhs = 3 * v[0] * v[1] * v[2];
    if (lhs != rhs) throw InternalInconsistency("shadow at q=1 is not a Markov triple");
    return v;
}

namespace detail {

inline MirrorTriple mirror_chain0() { return {1, 1, 1, +1, "@0"}; }
inline MirrorTriple mirror_chain1() { return {1, 1, LaurentPoly::from_coeffs(0, {1, 1}), +1, "@1"}; }
inline MirrorTriple mirror_branching_root() {
    return {1, LaurentPoly::from_coeffs(0, {1, 1}), LaurentPoly::from_coeffs(0, {1, 2, 2}), +1, ""};
}

// Generation walker carrying the squared values of the entries so each step
// costs one division plus one squaring.
struct MirrorNode {
    MirrorTriple t;
    LaurentPoly A, B, C;

    static MirrorNode wrap(MirrorTriple m) {
        LaurentPoly A = squared_of(m.a), B = squared_of(m.b), C = squared_of(m.c);
        return {std::move(m), std::move(A), std::move(B), std::move(C)};
    }

    MirrorNode left() const {
        LaurentPoly num = (A.shifted(t.sign) + C).shifted(t.c.degree());
        LaurentPoly den = t.b.mirror();
        auto q = LaurentPoly::try_div(num, den);
        if (!q) throw NotDivisible(num, den);
        require_polynomial_order(t.a, t.c, *q);
        LaurentPoly sq = squared_of(*q);
        return {{t.a, t.c, std::move(*q), t.sign, t.path + "L"}, A, C, std::move(sq)};
    }

    MirrorNode right() const {
        LaurentPoly num = (B.shifted(-t.sign) + C).shifted(t.c.degree());
        LaurentPoly den = t.a.mirror();
        auto q = LaurentPoly::try_div(num, den);
        if (!q) throw NotDivisible(num, den);
        require_polynomial_order(t.b, t.c, *q);
        LaurentPoly sq = squared_of(*q);
        return {{t.b, t.c, std::move(*q), -t.sign, t.path + "R"}, B, C, std::move(sq)};
    }
};

using MirrorNodeVisitor = std::function<void(const MirrorNode&)>;

inline void visit_mirror_rec(const MirrorNode& node, int remaining, const MirrorNodeVisitor& visit) {
    visit(node);
    if (remaining == 0) return;
    visit_mirror_rec(node.left(), remaining - 1, visit);
    visit_mirror_rec(node.right(), remaining - 1, visit);
}

inline void generate_mirror_nodes(int depth, const MirrorNodeVisitor& visit) {
    visit(MirrorNode::wrap(mirror_chain0()));
    visit(MirrorNode::wrap(mirror_chain1()));
    visit_mirror_rec(MirrorNode::wrap(mirror_branching_root()), depth, visit);
}

}  // namespace detail

using MirrorVisitor = std::function<void(const MirrorTriple&)>;

/// Stream the colored mirror tree in preorder to the given depth.
inline void generate_mirror(int depth, const MirrorVisitor& visit) {
    detail::generate_mirror_nodes(depth, [&](const detail::MirrorNode& n) { visit(n.t); });
}

inline MirrorTriple mirror_node_at(const std::string& path) {
    if (path == "@0") return detail::mirror_chain0();
    if (path == "@1") return detail::mirror_chain1();
    detail::MirrorNode cur = detail::MirrorNode::wrap(detail::mirror_branching_root());
    for (char c : path) {
        if (c == 'L')
            cur = cur.left();
        else if (c == 'R')
            cur = cur.right();
        else
            throw OutOfRange(std::string("path letters must be L or R, got '") + c + "'");
    }
    return cur.t;
}

struct FactorizationReport {
    bool pass = true;
    int depth = 0;
    std::size_t nodes_checked = 0;
    std::string witness_path;

    explicit operator bool() const { return pass; }
};

/// Entrywise squared_of over the mirror tree must reproduce the squared tree
/// at every path. Inherited entries are compared structurally; the one new
/// entry per node is recomputed, so by induction all entries are verified.
inline FactorizationReport verify_factorization(int depth) {
    FactorizationReport report;
    report.depth = depth;

    struct Pair {
        detail::MirrorNode m;
        SquaredTriple s;
    };
    auto check_full = [&](const Pair& p) {
        return squared_of(p.m.t.a) == p.s.x && squared_of(p.m.t.b) == p.s.y && squared_of(p.m.t.c) == p.s.z;
    };

    std::function<void(const Pair&, int)> rec = [&](const Pair& p, int remaining) {
        if (!report.pass) return;
        ++report.nodes_checked;
        if (remaining == 0) return;
        Pair left{p.m.left(), left_child(p.s)};
        // inherited entries: positional identity with the parent
        bool ok = left.m.A == left.s.x && left.m.B == left.s.y && squared_of(left.m.t.c) == left.s.z;
        if (!ok) {
            report.pass = false;
            report.witness_path = left.s.path;
            return;
        }
        rec(left, remaining - 1);
        Pair right{p.m.right(), right_child(p.s)};
        ok = right.m.A == right.s.x && right.m.B == right.s.y && squared_of(right.m.t.c) == right.s.z;
        if (!ok) {
            report.pass = false;
            report.witness_path = right.s.path;
            return;
        }
        rec(right, remaining - 1);
    };

    Pair chain0{detail::MirrorNode::wrap(detail::mirror_chain0()), detail::chain0()};
    Pair chain1{detail::MirrorNode::wrap(detail::mirror_chain1()), detail::chain1()};
    Pair root{detail::MirrorNode::wrap(detail::mirror_branching_root()), detail::branching_root()};
    for (auto* p : {&chain0, &chain1, &root}) {
        if (!check_full(*p)) {
            report.pass = false;
            report.witness_path = p->s.path;
            return report;
        }
    }
    report.nodes_checked = 2;  // the two chain nodes
    rec(root, depth);
    return report;
}

}  // namespace markov
