#pragma once

#include <array>
#include <cmath>
#include <string>

#include "markov/dual.hpp"
#include "markov/gaussian.hpp"
#include "markov/laurent.hpp"
#include "markov/spoly.hpp"
#include "markov/squared_tree.hpp"

namespace markov {

/// Integer specialization s = k: the triple solves
/// x^2+y^2+z^2 + k(yz+zx+xy) = (3+3k)xyz. k = -1 collapses everything to 1
/// and is only reachable behind allow_degenerate, without the equation check.
inline std::array<Int, 3> spec_k(const SquaredTriple& t, long long k, bool allow_degenerate = false) {
    if (k < 0 && !(k == -1 && allow_degenerate))
        throw OutOfRange("spec_k requires k >= 0 (k = -1 only with allow_degenerate)");
    std::array<Int, 3> v;
    for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] = to_s_basis(t[i]).eval_int(k);
    if (k >= 0) {
        const auto& [x, y, z] = v;
        Int lhs = x * x + y * y + z * z + k * (y * z + z * x + x * y);
        Int rhs = (3 + 3 * k) * (x * y * z);
        if (lhs != rhs) throw InternalInconsistency("k-specialized triple violates the k-GM equation");
    }
    return v;
}

/// q = 1: squared classical Markov triples, (x+y+z)^2 = 9xyz.
inline std::array<Int, 3> spec_q1(const SquaredTriple& t) {
    std::array<Int, 3> v{t.x.value_at_one(), t.y.value_at_one(), t.z.value_at_one()};
    Int sum = v[0] + v[1] + v[2];
    if (sum * sum != 9 * (v[0] * v[1] * v[2]))
        throw InternalInconsistency("values at q=1 violate (x+y+z)^2 = 9xyz");
    return v;
}

/// q = i: the classical Markov triple, x^2+y^2+z^2 = 3xyz. Imaginary parts
/// must vanish.
inline std::array<Int, 3> spec_qi(const SquaredTriple& t) {
    std::array<Int, 3> v;
    for (int i = 0; i < 3; ++i) {
        Gaussian g = eval_gaussian(t[i], Gaussian::i());
        if (!g.is_real()) throw NonRealValue("value at q=i has a nonzero imaginary part");
        v[static_cast<std::size_t>(i)] = g.re;
    }
    const auto& [x, y, z] = v;
    if (x * x + y * y + z * z != 3 * (x * y * z))
        throw InternalInconsistency("values at q=i violate the Markov equation");
    return v;
}

/// Super specialization s = eps with eps^2 = 0: the dual triple solves
/// x^2+y^2+z^2 + (xy+yz+xz) eps = 3(1+eps) xyz exactly.
struct SuperResult {
    std::array<DualInt, 3> value;
    DualInt lhs, rhs;
    bool components_positive = false;  // real parts > 0 and eps parts >= 0
    bool eps_parts_even = false;       // observed regularity, reported as data
};

inline SuperResult spec_super(const SquaredTriple& t) {
    SuperResult r;
    DualInt eps = DualInt::epsilon();
    for (int i = 0; i < 3; ++i) r.value[static_cast<std::size_t>(i)] = to_s_basis(t[i]).eval_dual(eps);
    const auto& [x, y, z] = r.value;
    r.lhs = x * x + y * y + z * z + (x * y + y * z + x * z) * eps;
    r.rhs = Int(3) * ((DualInt(1) + eps) * (x * y * z));
    if (!(r.lhs == r.rhs)) throw InternalInconsistency("super Markov equation failed in the dual ring");
    r.components_positive = true;
    r.eps_parts_even = true;
    for (const auto& d : r.value) {
        if (d.real <= 0 || d.eps < 0) r.components_positive = false;
        if (d.eps % 2 != 0) r.eps_parts_even = false;
    }
    return r;
}

/// Floating-point check at s = 2 cos(pi/p), the orbifold weight of order p.
struct ResidualResult {
    double residual = 0.0;
    double scale = 0.0;
    bool ok = false;
};

inline ResidualResult spec_root_of_unity(const SquaredTriple& t, int p, double tol = 1e-9) {
    if (p < 3) throw OutOfRange("spec_root_of_unity requires p >= 3");
    double s = 2.0 * std::cos(3.14159265358979323846 / p);
    double x = to_s_basis(t.x).eval_double(s);
    double y = to_s_basis(t.y).eval_double(s);
    double z = to_s_basis(t.z).eval_double(s);
    double lhs = x * x + y * y + z * z + s * (x * y + y * z + x * z);
    double rhs = (3.0 + 3.0 * s) * x * y * z;
    ResidualResult r;
    r.residual = std::abs(lhs - rhs);
    r.scale = std::max(std::abs(lhs), std::abs(rhs));
    r.ok = r.residual <= tol * std::max(r.scale, 1.0);
    return r;
}

}  // namespace markov
