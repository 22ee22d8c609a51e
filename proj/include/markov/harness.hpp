#pragma once

#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "markov/branches.hpp"
#include "markov/cf.hpp"
#include "markov/laurent.hpp"
#include "markov/mirror_tree.hpp"
#include "markov/orbifold.hpp"
#include "markov/squared_tree.hpp"

namespace markov {

/// Worker count for verification sweeps: hardware concurrency capped by the
/// MIRROR_MARKOV_THREADS environment variable.
inline int thread_cap() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("MIRROR_MARKOV_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
        if (cap >= 1 && hw < 1) hw = cap;
    }
    return hw;
}

/// Outcome of one verification sweep; a failed report always carries a
/// witness.
struct Report {
    std::string check;
    int depth = 0;
    std::size_t nodes = 0;
    bool pass = false;
    std::string witness_path;
    std::vector<std::string> witness;
    std::string detail;

    explicit operator bool() const { return pass; }
};

namespace detail {

// Preorder split of the mirror tree: everything above the frontier plus the
// frontier nodes themselves, each carrying its subtree for workers.
struct MirrorSplit {
    std::vector<MirrorNode> pre;       // chain and nodes at depth < frontier
    std::vector<MirrorNode> frontier;  // nodes at depth == frontier, path order
    int remaining = 0;
};

inline MirrorSplit split_mirror(int depth, int frontier_depth) {
    MirrorSplit s;
    s.remaining = depth - frontier_depth;
    s.pre.push_back(MirrorNode::wrap(mirror_chain0()));
    s.pre.push_back(MirrorNode::wrap(mirror_chain1()));
    std::function<void(const MirrorNode&, int)> rec = [&](const MirrorNode& n, int d) {
        if (d == frontier_depth) {
            s.frontier.push_back(n);
            return;
        }
        s.pre.push_back(n);
        rec(n.left(), d + 1);
        rec(n.right(), d + 1);
    };
    rec(MirrorNode::wrap(mirror_branching_root()), 0);
    return s;
}

// Run fn(i, frontier[i]) across workers; results land in caller-owned slots
// indexed by i, so aggregation order is independent of scheduling.
template <typename Fn>
void run_indexed(std::size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), count));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

template <typename Visit>
void walk_subtree(const MirrorNode& root, int remaining, Visit&& visit) {
    visit(root);
    if (remaining == 0) return;
    walk_subtree(root.left(), remaining - 1, visit);
    walk_subtree(root.right(), remaining - 1, visit);
}

}  // namespace detail

namespace detail {

inline std::optional<std::string> positivity_violation(const MirrorTriple& t) {
    for (int i = 0; i < 3; ++i) {
        if (t[i].is_zero() || t[i].min_exp() < 0 || !t[i].is_positive())
            return t[i].to_text();
    }
    return std::nullopt;
}

}  // namespace detail

/// Coefficient positivity of every entry of every mirror node to the given
/// depth (the open positivity conjecture, checked empirically).
inline Report verify_positivity(int depth) {
    Report rep{.check = "positivity", .depth = depth};
    int threads = thread_cap();
    const int frontier_depth = (threads > 1 && depth >= 4) ? 3 : 0;
    if (frontier_depth == 0) {
        bool ok = true;
        detail::generate_mirror_nodes(depth, [&](const detail::MirrorNode& n) {
            if (!ok) return;
            ++rep.nodes;
            if (auto bad = detail::positivity_violation(n.t)) {
                ok = false;
                rep.witness_path = n.t.path;
                rep.witness.push_back(*bad);
            }
        });
        rep.pass = ok;
        return rep;
    }

    detail::MirrorSplit split = detail::split_mirror(depth, frontier_depth);
    for (const auto& n : split.pre) {
        ++rep.nodes;
        if (auto bad = detail::positivity_violation(n.t)) {
            rep.witness_path = n.t.path;
            rep.witness.push_back(*bad);
            rep.pass = false;
            return rep;
        }
    }
    struct SubResult {
        std::size_t nodes = 0;
        std::string witness_path;
        std::string witness;
        bool ok = true;
    };
    std::vector<SubResult> results(split.frontier.size());
    detail::run_indexed(split.frontier.size(), threads, [&](std::size_t i) {
        detail::walk_subtree(split.frontier[i], split.remaining, [&](const detail::MirrorNode& n) {
            if (!results[i].ok) return;
            ++results[i].nodes;
            if (auto bad = detail::positivity_violation(n.t)) {
                results[i].ok = false;
                results[i].witness_path = n.t.path;
                results[i].witness = *bad;
            }
        });
    });
    rep.pass = true;
    for (const auto& r : results) {
        rep.nodes += r.nodes;
        if (rep.pass && !r.ok) {
            rep.pass = false;
            rep.witness_path = r.witness_path;
            rep.witness.push_back(r.witness);
        }
    }
    return rep;
}

/// Positivity over an explicit node list (reloaded trees, self-tests).
inline Report verify_positivity_nodes(const std::vector<MirrorTriple>& nodes) {
    Report rep{.check = "positivity", .depth = 0};
    rep.pass = true;
    for (const auto& t : nodes) {
        ++rep.nodes;
        if (auto bad = detail::positivity_violation(t)) {
            rep.pass = false;
            rep.witness_path = t.path;
            rep.witness.push_back(*bad);
            break;
        }
    }
    return rep;
}

namespace detail {

// Digest-keyed duplicate detection; digest collisions are resolved exactly
// through the supplied path -> polynomial resolver before reporting.
struct DuplicateFinder {
    std::map<PolyDigest, std::vector<std::string>> paths_by_digest;

    void add(const LaurentPoly& max, std::string path) {
        paths_by_digest[digest(max)].push_back(std::move(path));
    }

    template <typename Resolver>
    std::optional<std::pair<std::string, std::string>> find_duplicate(Resolver&& resolve) const {
        for (const auto& [dig, paths] : paths_by_digest) {
            if (paths.size() < 2) continue;
            for (std::size_t i = 0; i < paths.size(); ++i)
                for (std::size_t j = i + 1; j < paths.size(); ++j)
                    if (resolve(paths[i]) == resolve(paths[j])) return std::make_pair(paths[i], paths[j]);
        }
        return std::nullopt;
    }
};

}  // namespace detail

/// Pairwise distinctness of the maximum entry across all mirror nodes to the
/// given depth (the open q-deformed uniqueness conjecture).
inline Report verify_uniqueness(int depth) {
    Report rep{.check = "uniqueness", .depth = depth};
    detail::DuplicateFinder finder;
    int threads = thread_cap();
    const int frontier_depth = (threads > 1 && depth >= 4) ? 3 : 0;
    if (frontier_depth == 0) {
        detail::generate_mirror_nodes(depth, [&](const detail::MirrorNode& n) {
            ++rep.nodes;
            finder.add(n.t.c, n.t.path);
        });
    } else {
        detail::MirrorSplit split = detail::split_mirror(depth, frontier_depth);
        for (const auto& n : split.pre) {
            ++rep.nodes;
            finder.add(n.t.c, n.t.path);
        }
        std::vector<std::vector<std::pair<PolyDigest, std::string>>> results(split.frontier.size());
        detail::run_indexed(split.frontier.size(), threads, [&](std::size_t i) {
            detail::walk_subtree(split.frontier[i], split.remaining, [&](const detail::MirrorNode& n) {
                results[i].emplace_back(digest(n.t.c), n.t.path);
            });
        });
        for (auto& r : results) {
            rep.nodes += r.size();
            for (auto& [dig, path] : r) finder.paths_by_digest[dig].push_back(std::move(path));
        }
    }
    auto dup = finder.find_duplicate([](const std::string& path) { return mirror_node_at(path).c; });
    rep.pass = !dup.has_value();
    if (dup) {
        rep.witness_path = dup->first;
        rep.witness.push_back(dup->first);
        rep.witness.push_back(dup->second);
        rep.detail = "maximum repeats at " + dup->first + " and " + dup->second;
    }
    return rep;
}

inline Report verify_uniqueness_nodes(const std::vector<MirrorTriple>& nodes) {
    Report rep{.check = "uniqueness", .depth = 0};
    detail::DuplicateFinder finder;
    std::map<std::string, LaurentPoly> maxima;
    for (const auto& t : nodes) {
        ++rep.nodes;
        finder.add(t.c, t.path);
        maxima.emplace(t.path, t.c);
    }
    auto dup = finder.find_duplicate([&](const std::string& path) { return maxima.at(path); });
    rep.pass = !dup.has_value();
    if (dup) {
        rep.witness_path = dup->first;
        rep.witness.push_back(dup->first);
        rep.witness.push_back(dup->second);
        rep.detail = "maximum repeats at " + dup->first + " and " + dup->second;
    }
    return rep;
}

/// Re-check the defining equation, symmetry and coefficient positivity of
/// every squared node to the given depth.
inline Report verify_equation(int depth) {
    Report rep{.check = "equation", .depth = depth};
    bool ok = true;
    generate(depth, [&](const SquaredTriple& t) {
        if (!ok) return;
        ++rep.nodes;
        bool good = check_equation(t);
        for (int i = 0; good && i < 3; ++i) good = t[i].is_symmetric() && t[i].is_positive();
        if (!good) {
            ok = false;
            rep.witness_path = t.path;
            for (int i = 0; i < 3; ++i) rep.witness.push_back(t[i].to_text());
        }
    });
    rep.pass = ok;
    return rep;
}

inline Report verify_factorization_sweep(int depth) {
    Report rep{.check = "factorization", .depth = depth};
    FactorizationReport fr = verify_factorization(depth);
    rep.nodes = fr.nodes_checked;
    rep.pass = fr.pass;
    rep.witness_path = fr.witness_path;
    return rep;
}

inline Report verify_orbifold(int depth) {
    Report rep{.check = "orbifold", .depth = depth};
    OrbifoldAgreement agree = verify_orbifold_agreement(depth);
    rep.nodes = agree.nodes_checked;
    rep.pass = agree.pass;
    rep.witness_path = agree.witness_path;
    rep.detail = agree.all_signs_positive ? "all ratio monomials have coefficient +1" : "negative ratio seen";
    return rep;
}

/// q-Markov constants, degree laws and route agreement on both branches.
inline Report verify_qmarkov(int n_max) {
    Report rep{.check = "qmarkov", .depth = n_max};
    try {
        BranchSeq f = build_branch(BranchKind::fibonacci, n_max, true);
        BranchSeq p = build_branch(BranchKind::pell, n_max, true);
        for (int n = 1; n <= n_max; ++n) {
            qmarkov_fib(n, f);
            qmarkov_pell(n, p);
            ++rep.nodes;
        }
        rep.pass = true;
    } catch (const MarkovError& e) {
        rep.pass = false;
        rep.detail = e.what();
    }
    return rep;
}

/// Continued-fraction sweep over all rationals with Farey words of length up
/// to the given depth: numerators match the tree, certificates hold.
inline Report verify_cf(int depth) {
    Report rep{.check = "cf", .depth = depth};
    std::vector<std::string> words{""};
    rep.pass = true;
    for (int len = 0; len <= depth && rep.pass; ++len) {
        std::vector<std::string> next;
        for (auto& w : words) {
            Rational t = path_to_rational(w);
            ++rep.nodes;
            if (!numerator_matches_M(t) || !positivity_certificate(t).holds()) {
                rep.pass = false;
                rep.witness_path = w;
                rep.detail = "failure at t = " + t.to_string();
                break;
            }
            if (len < depth) {
                next.push_back(w + "L");
                next.push_back(w + "R");
            }
        }
        words = std::move(next);
    }
    return rep;
}

/// One branch of the mirror tree that keeps a fixed entry m_ell: the terms
/// p_n, their squares, and the branch color.
struct FixedBranch {
    std::string label;
    int color = +1;  // +1 blue, -1 red
    LaurentPoly m_ell;
    LaurentPoly M_ell;
    std::vector<LaurentPoly> p;
    std::vector<LaurentPoly> P;
};

/// Materialize the branch fixing the maximum of the node at ell_path, taken
/// in the requested color; "fib" and "pell" name the two root-chain branches.
inline FixedBranch build_fixed_branch(const std::string& ell_path, int color, int count) {
    FixedBranch br;
    br.label = ell_path;
    br.color = color;
    if (ell_path == "fib" || ell_path == "pell") {
        const bool is_fib = ell_path == "fib";
        if (is_fib && color != +1) throw OutOfRange("the Fibonacci branch is blue");
        if (!is_fib && color != -1) throw OutOfRange("the Pell branch is red");
        BranchSeq seq = build_branch(is_fib ? BranchKind::fibonacci : BranchKind::pell, count, false);
        br.m_ell = is_fib ? LaurentPoly(1) : LaurentPoly::from_coeffs(0, {1, 1});
        br.p = std::move(seq.terms);
        br.P = std::move(seq.squared);
    } else {
        if (ell_path.rfind('@', 0) == 0) throw OutOfRange("root-chain nodes: use fib or pell");
        detail::MirrorNode node = detail::MirrorNode::wrap(detail::mirror_branching_root());
        for (char c : ell_path) {
            if (c == 'L')
                node = node.left();
            else if (c == 'R')
                node = node.right();
            else
                throw OutOfRange(std::string("path letters must be L or R, got '") + c + "'");
        }
        br.m_ell = node.t.c;
        const bool right_first = color == node.t.sign;
        detail::MirrorNode t1 = right_first ? node.right() : node.left();
        br.p.push_back(right_first ? node.t.b : node.t.a);
        br.p.push_back(t1.t.c);
        detail::MirrorNode cur = t1.right();
        if (cur.t.sign != color) throw InternalInconsistency("branch color bookkeeping failed");
        if (!(cur.t.a == br.m_ell)) throw InternalInconsistency("branch lost its fixed entry");
        br.p.push_back(cur.t.c);
        while (static_cast<int>(br.p.size()) <= count) {
            cur = cur.left();
            if (!(cur.t.a == br.m_ell)) throw InternalInconsistency("branch lost its fixed entry");
            br.p.push_back(cur.t.c);
        }
        br.p.resize(static_cast<std::size_t>(count) + 1);
    }
    br.M_ell = squared_of(br.m_ell);
    if (br.P.empty())
        for (const auto& t : br.p) br.P.push_back(squared_of(t));
    return br;
}

/// Result of the q-Markov-constant search on a fixed branch.
struct SearchOutcome {
    bool consistent = false;
    LaurentPoly candidate;
    int checked = 0;
    int fail_n = -1;
    std::string message;
};

/// On the branch (m_ell, p_{n-1}, p_n), test whether
///   q^d M + q^(d-e) P_n + q^(d+e) P_{n-1}  with  d = deg(p_{n+1}) - 1
/// is [3]_q a_ell(q) p_n p_{n-1} for one fixed polynomial a_ell with
/// nonnegative coefficients and a_ell(1) = ell; e is +1 on red branches and
/// -1 on blue ones. The Fibonacci and Pell branches reproduce a = 1 and
/// a = 2.
inline SearchOutcome search_a_ell(const FixedBranch& br, int n_max) {
    SearchOutcome out;
    const int eps = -br.color;
    const LaurentPoly three_q = LaurentPoly::q_integer(3);
    if (static_cast<int>(br.p.size()) < n_max + 2)
        throw OutOfRange("branch too short: need p_0 .. p_{n_max+1}");
    for (int n = 1; n <= n_max; ++n) {
        std::int64_t d = br.p[static_cast<std::size_t>(n + 1)].degree() - 1;
        LaurentPoly num = br.M_ell.shifted(d) + br.P[static_cast<std::size_t>(n)].shifted(d - eps) +
                          br.P[static_cast<std::size_t>(n - 1)].shifted(d + eps);
        LaurentPoly den = three_q * (br.p[static_cast<std::size_t>(n)] * br.p[static_cast<std::size_t>(n - 1)]);
        auto cand = LaurentPoly::try_div(num, den);
        if (!cand) {
            out.fail_n = n;
            out.message = "numerator is not divisible by [3]_q p_n p_{n-1} at n = " + std::to_string(n);
            return out;
        }
        if (n == 1) {
            out.candidate = std::move(*cand);
        } else if (!(*cand == out.candidate)) {
            out.fail_n = n;
            out.message = "candidate changed at n = " + std::to_string(n) + ": " + cand->to_text();
            return out;
        }
        out.checked = n;
    }
    bool nonneg_poly = !out.candidate.is_zero() && out.candidate.min_exp() >= 0;
    for (const auto& c : out.candidate.coeffs())
        if (c < 0) nonneg_poly = false;
    if (!nonneg_poly) {
        out.fail_n = out.checked;
        out.message = "stable quotient is not a nonnegative polynomial: " + out.candidate.to_text();
        return out;
    }
    if (out.candidate.value_at_one() != br.m_ell.value_at_one()) {
        out.fail_n = out.checked;
        out.message = "candidate value at q=1 is " + out.candidate.value_at_one().str() +
                      ", expected " + br.m_ell.value_at_one().str();
        return out;
    }
    out.consistent = true;
    return out;
}

inline SearchOutcome search_a_ell(const std::string& ell_path, int color, int n_max) {
    return search_a_ell(build_fixed_branch(ell_path, color, n_max + 1), n_max);
}

}  // namespace markov
