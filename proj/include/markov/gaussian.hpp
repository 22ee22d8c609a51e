#pragma once

#include <string>
#include <utility>

#include "markov/laurent.hpp"

namespace markov {

/// Gaussian integer a + b*i with exact integer parts.
struct Gaussian {
    Int re = 0;
    Int im = 0;

    Gaussian() = default;
    Gaussian(Int r) : re(std::move(r)) {}
    Gaussian(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian i() { return {0, 1}; }

    bool operator==(const Gaussian&) const = default;
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return {re, -im}; }
    Int norm() const { return re * re + im * im; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    std::string to_string() const {
        if (im == 0) return re.str();
        std::string s = re.str();
        s += (im < 0) ? " - " : " + ";
        Int a = im < 0 ? Int(-im) : im;
        if (a != 1) s += a.str();
        s += "i";
        return s;
    }
};

inline Gaussian gaussian_pow(Gaussian base, std::int64_t e) {
    Gaussian acc{1};
    for (std::int64_t k = e; k > 0; k >>= 1) {
        if (k & 1) acc = acc * base;
        if (k > 1) base = base * base;
    }
    return acc;
}

/// Exact quotient a/b in Z[i]; NotExactEvaluation if b does not divide a.
inline Gaussian gaussian_div_exact(const Gaussian& a, const Gaussian& b) {
    if (b.is_zero()) throw ZeroPoint("Gaussian division by zero");
    Gaussian n = a * b.conj();
    Int d = b.norm();
    Int qr, rr, qi, ri;
    boost::multiprecision::divide_qr(n.re, d, qr, rr);
    boost::multiprecision::divide_qr(n.im, d, qi, ri);
    if (rr != 0 || ri != 0) throw NotExactEvaluation("Gaussian evaluation is not exact");
    return {qr, qi};
}

/// Exact evaluation of a Laurent polynomial at a Gaussian integer point.
inline Gaussian eval_gaussian(const LaurentPoly& p, const Gaussian& x) {
    if (p.is_zero()) return {};
    if (x.is_zero()) {
        if (p.min_exp() < 0) throw ZeroPoint("evaluation at 0 with negative exponents");
        return {p.coeff(0)};
    }
    Gaussian acc;
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + Gaussian{*it};
    if (p.min_exp() >= 0) return acc * gaussian_pow(x, p.min_exp());
    return gaussian_div_exact(acc, gaussian_pow(x, -p.min_exp()));
}

}  // namespace markov
