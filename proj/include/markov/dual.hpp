#pragma once

#include <string>
#include <utility>

#include "markov/laurent.hpp"

namespace markov {

/// Dual number a + b*eps over exact integers, with eps^2 = 0.
struct DualInt {
    Int real = 0;
    Int eps = 0;

    DualInt() = default;
    DualInt(Int r) : real(std::move(r)) {}
    DualInt(Int r, Int e) : real(std::move(r)), eps(std::move(e)) {}

    static DualInt epsilon() { return {0, 1}; }

    bool operator==(const DualInt&) const = default;

    friend DualInt operator+(const DualInt& a, const DualInt& b) { return {a.real + b.real, a.eps + b.eps}; }
    friend DualInt operator-(const DualInt& a, const DualInt& b) { return {a.real - b.real, a.eps - b.eps}; }
    friend DualInt operator*(const DualInt& a, const DualInt& b) {
        return {a.real * b.real, a.real * b.eps + a.eps * b.real};
    }
    friend DualInt operator*(const Int& k, const DualInt& a) { return {k * a.real, k * a.eps}; }

    std::string to_string() const {
        if (eps == 0) return real.str();
        std::string s = real.str();
        s += (eps < 0) ? " - " : " + ";
        Int a = eps < 0 ? Int(-eps) : eps;
        if (a != 1) s += a.str();
        s += "eps";
        return s;
    }
};

}  // namespace markov
