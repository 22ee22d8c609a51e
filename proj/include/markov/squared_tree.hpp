#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "markov/laurent.hpp"

namespace markov {

/// Symmetric Laurent triple solving
///   X^2 + Y^2 + Z^2 + (q+q^-1)(XY+YZ+XZ) = 3(1+q+q^-1)XYZ,
/// sorted by value at q = 1 (ties broken by degree along the root chain).
///
/// Paths: "@0" = (1,1,1), "@1" = (1,1,M2), "" = the branching root
/// (1,M2,M5), then {L,R}-words.
struct SquaredTriple {
    LaurentPoly x, y, z;
    std::string path;

    const LaurentPoly& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    LaurentPoly& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    bool same_entries(const SquaredTriple& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline bool check_equation(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z) {
    LaurentPoly s = LaurentPoly::qplus_qinv();
    LaurentPoly lhs = x * x + y * y + z * z + s * (x * y + y * z + x * z);
    LaurentPoly rhs = Int(3) * ((LaurentPoly(1) + s) * (x * y * z));
    return lhs == rhs;
}

inline bool check_equation(const SquaredTriple& t) { return check_equation(t.x, t.y, t.z); }

/// The subtraction-free linear mutation form 3(1+s)BC - s(B+C) - A.
inline LaurentPoly vieta_linear(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c) {
    LaurentPoly s = LaurentPoly::qplus_qinv();
    return Int(3) * ((LaurentPoly(1) + s) * (b * c)) - s * (b + c) - a;
}

/// The division mutation form (B^2 + sBC + C^2)/A; agrees with the linear
/// form on every solution.
inline LaurentPoly vieta_division(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c) {
    LaurentPoly s = LaurentPoly::qplus_qinv();
    return exact_div(b * b + s * (b * c) + c * c, a);
}

#ifdef NDEBUG
inline constexpr bool kCheckedMutations = false;
#else
inline constexpr bool kCheckedMutations = true;
#endif

/// Replace the indexed entry; the slot is kept in place (mutating twice at
/// the same index is the identity). The path of the result is cleared.
inline SquaredTriple mutate(const SquaredTriple& t, int index, bool checked = kCheckedMutations) {
    const LaurentPoly& a = t[index];
    const LaurentPoly& b = t[(index + 1) % 3];
    const LaurentPoly& c = t[(index + 2) % 3];
    LaurentPoly lin = vieta_linear(a, b, c);
    if (checked) {
        if (vieta_division(a, b, c) != lin)
            throw InternalInconsistency("mutation formulas disagree at index " + std::to_string(index));
    }
    SquaredTriple r = t;
    r[index] = std::move(lin);
    r.path.clear();
    return r;
}

inline bool is_degree_singular(const SquaredTriple& t) {
    auto d = [](const LaurentPoly& p) { return p.is_zero() ? INT64_MIN : p.degree(); };
    return d(t.x) == d(t.y) && d(t.y) == d(t.z);
}

/// The entry of strictly largest degree of a non-degree-singular triple.
inline const LaurentPoly& max_of(const SquaredTriple& t) {
    if (is_degree_singular(t)) throw AmbiguousMax("degree-singular triple has no unique maximum");
    int best = 0;
    for (int i = 1; i < 3; ++i)
        if (t[i].degree() > t[best].degree()) best = i;
    for (int i = 0; i < 3; ++i)
        if (i != best && t[i].degree() == t[best].degree())
            throw AmbiguousMax("two entries tie for the maximum degree");
    return t[best];
}

namespace detail {

inline SquaredTriple chain0() { return {1, 1, 1, "@0"}; }
inline SquaredTriple chain1() { return {1, 1, LaurentPoly::from_coeffs(-1, {1, 2, 1}), "@1"}; }
inline SquaredTriple branching_root() {
    return {1, LaurentPoly::from_coeffs(-1, {1, 2, 1}), LaurentPoly::from_coeffs(-2, {2, 6, 9, 6, 2}), ""};
}

inline void sort_triple(SquaredTriple& t) {
    std::array<const LaurentPoly*, 3> p{&t.x, &t.y, &t.z};
    std::stable_sort(p.begin(), p.end(), [](const LaurentPoly* a, const LaurentPoly* b) {
        Int va = a->value_at_one(), vb = b->value_at_one();
        if (va != vb) return va < vb;
        std::int64_t da = a->is_zero() ? INT64_MIN : a->degree();
        std::int64_t db = b->is_zero() ? INT64_MIN : b->degree();
        return da < db;
    });
    SquaredTriple s{*p[0], *p[1], *p[2], t.path};
    t = std::move(s);
}

}  // namespace detail

/// Children of a sorted node: the left edge replaces the middle entry, the
/// right edge replaces the minimum. Both keep the maximum.
inline SquaredTriple left_child(const SquaredTriple& t) {
    return {t.x, t.z, vieta_linear(t.y, t.x, t.z), t.path + "L"};
}
inline SquaredTriple right_child(const SquaredTriple& t) {
    return {t.y, t.z, vieta_linear(t.x, t.y, t.z), t.path + "R"};
}

using SquaredVisitor = std::function<void(const SquaredTriple&)>;

namespace detail {
inline void visit_squared_rec(const SquaredTriple& node, int remaining, const SquaredVisitor& visit) {
    visit(node);
    if (remaining == 0) return;
    visit_squared_rec(left_child(node), remaining - 1, visit);
    visit_squared_rec(right_child(node), remaining - 1, visit);
}
}  // namespace detail

/// Stream the tree in preorder: the two root-chain nodes, then the branching
/// nodes to the given depth. Holds one root-to-leaf path at a time.
inline void generate(int depth, const SquaredVisitor& visit) {
    visit(detail::chain0());
    visit(detail::chain1());
    detail::visit_squared_rec(detail::branching_root(), depth, visit);
}

/// The node at a path ("@0", "@1", "" or an {L,R}-word).
inline SquaredTriple node_at(const std::string& path) {
    if (path == "@0") return detail::chain0();
    if (path == "@1") return detail::chain1();
    SquaredTriple cur = detail::branching_root();
    for (char c : path) {
        if (c == 'L')
            cur = left_child(cur);
        else if (c == 'R')
            cur = right_child(cur);
        else
            throw OutOfRange(std::string("path letters must be L or R, got '") + c + "'");
    }
    return cur;
}

struct DescentResult {
    enum class Status { Accepted, ZeroEntry, NotSymmetric, NotASolution, NotOnTree };
    Status status = Status::NotOnTree;
    std::string path;  // set when accepted

    bool accepted() const { return status == Status::Accepted; }

    static const char* name(Status s) {
        switch (s) {
            case Status::Accepted: return "Accepted";
            case Status::ZeroEntry: return "ZeroEntry";
            case Status::NotSymmetric: return "NotSymmetric";
            case Status::NotASolution: return "NotASolution";
            default: return "NotOnTree";
        }
    }
};

/// Membership test: validates the triple, then repeatedly mutates at the
/// maximum-degree coordinate (each step strictly decreases the maximum
/// degree) and accepts exactly when (1,1,1) is reached. The reversed
/// mutation word is the node's path.
inline DescentResult descend(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z) {
    using Status = DescentResult::Status;
    if (x.is_zero() || y.is_zero() || z.is_zero()) return {Status::ZeroEntry, {}};
    if (!x.is_symmetric() || !y.is_symmetric() || !z.is_symmetric()) return {Status::NotSymmetric, {}};
    if (!check_equation(x, y, z)) return {Status::NotASolution, {}};

    SquaredTriple cur{x, y, z, ""};
    detail::sort_triple(cur);
    const SquaredTriple c0 = detail::chain0();
    const SquaredTriple c1 = detail::chain1();
    const SquaredTriple root = detail::branching_root();

    std::int64_t max_deg = std::max({cur.x.degree(), cur.y.degree(), cur.z.degree()});
    std::int64_t cap = max_deg + 1;
    std::string word;
    for (std::int64_t step = 0; step <= cap; ++step) {
        if (cur.same_entries(c0)) return word.empty() ? DescentResult{Status::Accepted, "@0"}
                                                      : DescentResult{Status::NotOnTree, {}};
        if (cur.same_entries(c1)) return word.empty() ? DescentResult{Status::Accepted, "@1"}
                                                      : DescentResult{Status::NotOnTree, {}};
        if (cur.same_entries(root)) return {Status::Accepted, word};
        if (is_degree_singular(cur)) return {Status::NotOnTree, {}};

        int at = 0;
        for (int i = 1; i < 3; ++i)
            if (cur[i].degree() > cur[at].degree()) at = i;
        LaurentPoly undone = vieta_linear(cur[at], cur[(at + 1) % 3], cur[(at + 2) % 3]);
        if (undone.is_zero()) return {Status::NotOnTree, {}};

        SquaredTriple parent{cur[(at + 1) % 3], cur[(at + 2) % 3], undone, ""};
        detail::sort_triple(parent);
        std::int64_t new_max = std::max({parent.x.degree(), parent.y.degree(), parent.z.degree()});
        if (new_max >= max_deg) return {Status::NotOnTree, {}};
        max_deg = new_max;

        // The undone entry's rank in the parent tells the edge type.
        if (undone == parent.y && !(undone == parent.x))
            word.insert(word.begin(), 'L');
        else if (undone == parent.x || undone == parent.y)
            word.insert(word.begin(), 'R');
        else
            return {Status::NotOnTree, {}};
        cur = std::move(parent);
    }
    return {Status::NotOnTree, {}};
}

inline DescentResult descend(const SquaredTriple& t) { return descend(t.x, t.y, t.z); }

}  // namespace markov
