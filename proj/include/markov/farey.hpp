#pragma once

#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "markov/errors.hpp"

namespace markov {

using boost::multiprecision::cpp_int;

/// Nonnegative rational in lowest terms with positive denominator.
struct Rational {
    cpp_int num = 0;
    cpp_int den = 1;

    Rational() = default;
    Rational(cpp_int n, cpp_int d) : num(std::move(n)), den(std::move(d)) {
        if (den <= 0) throw OutOfRange("denominator must be positive");
        if (num < 0) throw OutOfRange("negative rational");
        cpp_int g = boost::multiprecision::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational&) const = default;
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }

    bool in_open_unit_interval() const { return num > 0 && num < den; }

    std::string to_string() const { return num.str() + "/" + den.str(); }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
            throw OutOfRange("rational must be written as num/den: " + s);
        return Rational(cpp_int(s.substr(0, slash)), cpp_int(s.substr(slash + 1)));
    }
};

/// |ad - bc| for r = a/b, s = c/d.
inline cpp_int cross_det(const Rational& r, const Rational& s) {
    cpp_int d = r.num * s.den - r.den * s.num;
    return d < 0 ? cpp_int(-d) : d;
}

/// Mediant of a unimodular pair r < s; automatically in lowest terms.
inline Rational farey_sum(const Rational& r, const Rational& s) {
    if (!(r < s)) throw NotUnimodular("farey_sum requires r < s");
    if (cross_det(r, s) != 1) throw NotUnimodular("pair is not unimodular");
    return Rational(r.num + s.num, r.den + s.den);
}

/// Farey triple (r, s, t): t is the mediant of the unimodular parents r < s.
struct FareyTriple {
    Rational r, s, t;

    FareyTriple(Rational r_, Rational s_, Rational t_) : r(std::move(r_)), s(std::move(s_)), t(std::move(t_)) {
        if (!(r < t && t < s)) throw NotUnimodular("not ordered r < t < s");
        if (farey_sum(r, s) != t) throw NotUnimodular("t is not the mediant of (r, s)");
    }
};

/// Binary descent through the Farey tree: the empty word is 1/2, L descends
/// into (r, t, r+t) and R into (t, s, s+t).
inline Rational path_to_rational(const std::string& path) {
    Rational lo(0, 1), hi(1, 1);
    Rational t(1, 2);
    for (char c : path) {
        if (c == 'L') {
            hi = t;
        } else if (c == 'R') {
            lo = t;
        } else {
            throw OutOfRange(std::string("path letters must be L or R, got '") + c + "'");
        }
        t = farey_sum(lo, hi);
    }
    return t;
}

/// Inverse of path_to_rational for t in (0,1).
inline std::string rational_to_path(const Rational& t) {
    if (!t.in_open_unit_interval()) throw OutOfRange("rational must lie in (0,1): " + t.to_string());
    Rational lo(0, 1), hi(1, 1);
    Rational cur(1, 2);
    std::string path;
    while (cur != t) {
        if (t < cur) {
            path += 'L';
            hi = cur;
        } else {
            path += 'R';
            lo = cur;
        }
        cur = farey_sum(lo, hi);
    }
    return path;
}

/// Tree-node address of the Markov value indexed by t. Tree letters follow
/// the mutation convention (L replaces the middle entry, R the minimum), so
/// they diverge from the Farey letters wherever m_s is not the middle of the
/// current triple; the classical values steer the translation.
inline std::string markov_tree_path(const Rational& t) {
    if (!t.in_open_unit_interval()) throw OutOfRange("rational must lie in (0,1): " + t.to_string());
    Rational lo(0, 1), hi(1, 1);
    Rational cur(1, 2);
    cpp_int vlo = 1, vhi = 2, vcur = 5;  // m_{0/1}, m_{1/1}, m_{1/2}
    std::string path;
    while (cur != t) {
        if (t < cur) {
            // Farey left: drop m_s (the upper endpoint)
            path += (vhi > vlo) ? 'L' : 'R';
            cpp_int v = 3 * vlo * vcur - vhi;
            hi = cur;
            vhi = vcur;
            vcur = v;
        } else {
            path += (vlo > vhi) ? 'L' : 'R';
            cpp_int v = 3 * vhi * vcur - vlo;
            lo = cur;
            vlo = vcur;
            vcur = v;
        }
        cur = farey_sum(lo, hi);
    }
    return path;
}

/// The unique Farey parents of t.
inline FareyTriple farey_triple_for(const Rational& t) {
    if (!t.in_open_unit_interval()) throw OutOfRange("rational must lie in (0,1): " + t.to_string());
    Rational lo(0, 1), hi(1, 1);
    Rational cur(1, 2);
    while (cur != t) {
        if (t < cur)
            hi = cur;
        else
            lo = cur;
        cur = farey_sum(lo, hi);
    }
    return FareyTriple(lo, hi, t);
}

}  // namespace markov
