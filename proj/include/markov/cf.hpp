#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "markov/farey.hpp"
#include "markov/laurent.hpp"
#include "markov/squared_tree.hpp"

namespace markov {

/// Continued fraction [a_1, ..., a_n] with Laurent polynomial entries.
struct PolyCF {
    std::vector<LaurentPoly> entries;

    bool operator==(const PolyCF&) const = default;

    std::string to_text() const {
        std::string out = "[";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) out += ", ";
            out += entries[i].to_text();
        }
        return out + "]";
    }
};

/// Exact convergent pair of the full fraction via h_i = a_i h_{i-1} + h_{i-2}.
inline std::pair<LaurentPoly, LaurentPoly> cf_eval(const PolyCF& cf) {
    LaurentPoly h1 = 1, h2 = 0;  // numerators h_{i-1}, h_{i-2}
    LaurentPoly k1 = 0, k2 = 1;  // denominators
    for (const auto& a : cf.entries) {
        LaurentPoly h = a * h1 + h2;
        LaurentPoly k = a * k1 + k2;
        h2 = std::move(h1);
        h1 = std::move(h);
        k2 = std::move(k1);
        k1 = std::move(k);
    }
    return {h1, k1};
}

namespace detail {

// Entries of the Farey-tree continued fractions are affine in s = q + q^-1,
// so the recursion runs on integer pairs and the "-1" adjustment never
// leaves the integers.
struct SEntry {
    long long s;
    long long c;
};

inline std::vector<SEntry> farey_cf_entries(const Rational& t) {
    if (t == Rational(1, 2)) return {{2, 2}, {1, 2}};
    FareyTriple ft = farey_triple_for(t);
    const bool r_zero = ft.r == Rational(0, 1);
    const bool s_one = ft.s == Rational(1, 1);
    std::vector<SEntry> out;
    if (!r_zero) {
        std::vector<SEntry> a = farey_cf_entries(ft.r);
        out.assign(a.rbegin(), a.rend());
        out.push_back({3, 2});
    } else {
        out.push_back({2, 2});
    }
    if (!s_one) {
        std::vector<SEntry> b = farey_cf_entries(ft.s);
        out.push_back({0, 1});
        out.push_back({b.back().s, b.back().c - 1});
        for (std::size_t i = b.size() - 1; i-- > 0;) out.push_back(b[i]);
    } else {
        out.push_back({1, 2});
    }
    return out;
}

inline LaurentPoly s_affine(long long s_coef, long long c) {
    return Int(s_coef) * LaurentPoly::qplus_qinv() + LaurentPoly(c);
}

}  // namespace detail

/// The recursive continued fraction attached to t over the Farey tree; its
/// numerator is the squared value at the same tree path.
inline PolyCF farey_cf(const Rational& t) {
    if (!t.in_open_unit_interval()) throw OutOfRange("farey_cf requires t in (0,1): " + t.to_string());
    PolyCF cf;
    for (auto [s, c] : detail::farey_cf_entries(t)) cf.entries.push_back(detail::s_affine(s, c));
    return cf;
}

/// Recenter a polynomial so its support is balanced around 0; only possible
/// when min_exp + degree is even.
inline bool recenter(LaurentPoly& p) {
    if (p.is_zero()) return true;
    std::int64_t c = p.min_exp() + p.degree();
    if (c % 2 != 0) return false;
    p = p.shifted(-c / 2);
    return true;
}

/// The numerator of farey_cf(t) equals the squared-tree maximum at the tree
/// node of t, exactly, after recentering by the half-degree power of q.
inline bool numerator_matches_M(const Rational& t) {
    LaurentPoly num = cf_eval(farey_cf(t)).first;
    if (!recenter(num)) return false;
    LaurentPoly M = node_at(markov_tree_path(t)).z;
    return num == M;
}

/// The positivity mechanism: all entries have nonnegative coefficients and
/// the two end entries have constant coefficient at least 2, which forces a
/// strictly positive numerator.
struct CfCertificate {
    bool entries_nonnegative = false;
    bool ends_constant_at_least_two = false;
    bool numerator_positive = false;

    bool holds() const { return entries_nonnegative && ends_constant_at_least_two && numerator_positive; }
};

inline CfCertificate positivity_certificate(const Rational& t) {
    PolyCF cf = farey_cf(t);
    CfCertificate cert;
    cert.entries_nonnegative = true;
    for (const auto& e : cf.entries)
        for (const auto& c : e.coeffs())
            if (c < 0) cert.entries_nonnegative = false;
    cert.ends_constant_at_least_two = cf.entries.front().coeff(0) >= 2 && cf.entries.back().coeff(0) >= 2;
    cert.numerator_positive = cf_eval(cf).first.is_positive();
    return cert;
}

}  // namespace markov
