#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "markov/branches.hpp"
#include "support/fixtures.hpp"

using namespace markov;
using fixtures::lp;

namespace {
// classical odd-index Fibonacci and Pell numbers as an independent oracle
Int odd_fibonacci(int n) {  // F_{2n+1} with F_1 = F_2 = 1
    Int a = 1, b = 1;  // F_1, F_2
    for (int i = 0; i < 2 * n; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return a;
}
Int odd_pell(int n) {  // P_{2n+1} with P_1 = 1, P_2 = 2
    Int a = 0, b = 1;
    for (int i = 0; i < 2 * n; ++i) {
        Int c = 2 * b + a;
        a = b;
        b = c;
    }
    return b;
}
}  // namespace

TEST_CASE("frozen branch values") {
    BranchSeq f = build_branch(BranchKind::fibonacci, 5, true);
    CHECK(f.term(0) == LaurentPoly(1));
    CHECK(f.term(1) == fixtures::m2());
    CHECK(f.term(2) == fixtures::m5());
    CHECK(f.term(3) == fixtures::m13());
    CHECK(f.term(4) == fixtures::m34());
    CHECK(f.term(5) == fixtures::f5());

    BranchSeq p = build_branch(BranchKind::pell, 4, true);
    CHECK(p.term(0) == LaurentPoly(1));
    CHECK(p.term(1) == fixtures::m5());
    CHECK(p.term(2) == fixtures::m29());
    CHECK(p.term(3) == fixtures::m169());
    CHECK(p.term(4) == fixtures::p4());
}

TEST_CASE("both computation routes agree to n = 30") {
    CHECK_NOTHROW(build_branch(BranchKind::fibonacci, 30, true));
    CHECK_NOTHROW(build_branch(BranchKind::pell, 30, true));
}

TEST_CASE("degree laws and positivity") {
    BranchSeq f = build_branch(BranchKind::fibonacci, 30, false);
    BranchSeq p = build_branch(BranchKind::pell, 30, false);
    for (int n = 0; n <= 30; ++n) {
        CHECK(f.term(n).degree() == n);
        CHECK(p.term(n).degree() == 2 * n);
        CHECK(f.term(n).is_positive());
        CHECK(p.term(n).is_positive());
        CHECK(f.sq(n) == squared_of(f.term(n)));
        CHECK(p.sq(n) == squared_of(p.term(n)));
    }
}

TEST_CASE("classical shadows follow the odd Fibonacci and Pell numbers") {
    BranchSeq f = build_branch(BranchKind::fibonacci, 20, false);
    BranchSeq p = build_branch(BranchKind::pell, 20, false);
    for (int n = 0; n <= 20; ++n) {
        CHECK(f.term(n).value_at_one() == odd_fibonacci(n));
        CHECK(p.term(n).value_at_one() == odd_pell(n));
    }
}

TEST_CASE("branches sit on the mirror tree") {
    // f_n is the all-left node at depth n-2, p_n the all-left node of the
    // right subtree
    std::string w;
    for (int n = 2; n <= 8; ++n) {
        CHECK(fib(n) == mirror_node_at(w).c);
        CHECK(pell(n) == mirror_node_at("R" + w).c);
        w += 'L';
    }
}

TEST_CASE("q-Markov functions are [3]_q") {
    CHECK(qmarkov_fib(1) == LaurentPoly::q_integer(3));
    CHECK(qmarkov_pell(1) == LaurentPoly::q_integer(3));
    BranchSeq f = build_branch(BranchKind::fibonacci, 30, false);
    BranchSeq p = build_branch(BranchKind::pell, 30, false);
    for (int n = 1; n <= 30; ++n) {
        CHECK(qmarkov_fib(n, f) == LaurentPoly::q_integer(3));
        CHECK(qmarkov_pell(n, p) == LaurentPoly::q_integer(3));
    }
}

TEST_CASE("mirror identities hold to n = 30") {
    BranchSeq f = build_branch(BranchKind::fibonacci, 31, false);
    BranchSeq p = build_branch(BranchKind::pell, 31, false);
    for (int n = 1; n <= 30; ++n) CHECK(mirror_identities(n, f, p));
}

TEST_CASE("closed-form ratio continued fractions") {
    PolyCF f1 = ratio_cf(BranchKind::fibonacci, 1);
    REQUIRE(f1.entries.size() == 2);
    CHECK(f1.entries[0] == lp(0, {1, 1}));
    CHECK(f1.entries[1] == lp(-2, {1, 1}));  // q^-2 (1+q)

    PolyCF p1 = ratio_cf(BranchKind::pell, 1);
    REQUIRE(p1.entries.size() == 3);
    CHECK(p1.entries[0] == lp(0, {1, 2, 2}));
    CHECK(p1.entries[1] == LaurentPoly(1));
    CHECK(p1.entries[2] == lp(0, {1, 2, 1}));

    BranchSeq f = build_branch(BranchKind::fibonacci, 16, false);
    BranchSeq p = build_branch(BranchKind::pell, 16, false);
    for (int n = 1; n <= 15; ++n) {
        CHECK(verify_ratio_cf(BranchKind::fibonacci, n, f));
        CHECK(verify_ratio_cf(BranchKind::pell, n, p));
        CHECK(ratio_cf(BranchKind::pell, n).entries.size() == static_cast<std::size_t>(2 * n + 1));
        CHECK(ratio_cf(BranchKind::fibonacci, n).entries.size() == static_cast<std::size_t>(2 * n));
    }
    // every closed-form entry has nonnegative coefficients
    for (int n = 1; n <= 10; ++n)
        for (auto kind : {BranchKind::fibonacci, BranchKind::pell})
            for (const auto& e : ratio_cf(kind, n).entries)
                for (const auto& c : e.coeffs()) CHECK(c >= 0);
}
