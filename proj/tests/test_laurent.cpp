#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "markov/gaussian.hpp"
#include "markov/laurent.hpp"
#include "support/fixtures.hpp"

using namespace markov;
using fixtures::lp;

TEST_CASE("ring ops on frozen values") {
    LaurentPoly one_plus_q = lp(0, {1, 1});
    LaurentPoly one_plus_qinv = lp(-1, {1, 1});
    CHECK(one_plus_q * one_plus_qinv == fixtures::M2());

    LaurentPoly p = lp(-2, {3, 0, -1, 7});
    CHECK(p + LaurentPoly{} == p);
    CHECK(LaurentPoly{} + p == p);

    CHECK(fixtures::m5() * fixtures::m5().involute() == fixtures::M5());
}

TEST_CASE("canonical form") {
    CHECK(lp(2, {0, 0, 0}) == LaurentPoly{});
    CHECK(LaurentPoly{}.min_exp() == 0);
    CHECK(lp(-1, {0, 1, 0}) == lp(0, {1}));
    CHECK(lp(0, {1}) == LaurentPoly(1));
    CHECK(lp(3, {5}) == LaurentPoly::monomial(5, 3));
    CHECK(lp(0, {1, 0, 1}).coeffs().size() == 3);  // internal zeros stay
}

TEST_CASE("subtraction and scalar ops") {
    LaurentPoly p = lp(-1, {1, 2, 3});
    CHECK(p - p == LaurentPoly{});
    CHECK(Int(2) * p == lp(-1, {2, 4, 6}));
    CHECK(p.shifted(3) == lp(2, {1, 2, 3}));
    CHECK((-p) + p == LaurentPoly{});
}

TEST_CASE("exact division") {
    LaurentPoly s = LaurentPoly::qplus_qinv();
    LaurentPoly M2 = fixtures::M2();
    LaurentPoly num = M2 * M2 + s * M2 + 1;
    CHECK(exact_div(num, LaurentPoly(1)) == num);

    // forbidden-mutation fraction: not a polynomial in q
    LaurentPoly bad_num = lp(0, {4, 18, 39, 49, 38, 18, 4});
    LaurentPoly den = lp(0, {2, 2, 1});
    CHECK(!LaurentPoly::try_div(bad_num, den).has_value());
    CHECK_THROWS_AS(exact_div(bad_num, den), NotDivisible);
    try {
        exact_div(bad_num, den);
    } catch (const NotDivisible& e) {
        CHECK(e.numerator == bad_num);
        CHECK(e.denominator == den);
    }

    LaurentPoly a = fixtures::M5() * lp(0, {1, 1});
    CHECK(exact_div(a, lp(0, {1, 1})) == fixtures::M5());
}

TEST_CASE("multiply then divide round trip with random polynomials") {
    fixtures::Rng rng;
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = rng.nonzero_poly(7);
        LaurentPoly r = rng.nonzero_poly(7);
        LaurentPoly prod = p * r;
        CHECK(prod.degree() == p.degree() + r.degree());
        CHECK(prod.min_exp() == p.min_exp() + r.min_exp());
        auto q = LaurentPoly::try_div(prod, r);
        REQUIRE(q.has_value());
        CHECK(*q == p);
    }
}

TEST_CASE("mirror") {
    CHECK(fixtures::m13().mirror() == lp(0, {2, 5, 4, 2}));
    LaurentPoly palindrome = lp(0, {1, 2, 1});
    CHECK(palindrome.mirror() == palindrome);
    CHECK(fixtures::m29().mirror().mirror() == fixtures::m29());
    CHECK_THROWS_AS(fixtures::M2().mirror(), NegativeExponent);
}

TEST_CASE("mirror is the shifted involution for every polynomial") {
    fixtures::Rng rng;
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = rng.nonzero_poly(8, 0, 5);
        CHECK(p.mirror() == p.involute().shifted(p.degree()));
        CHECK(p.mirror().degree() <= p.degree());
    }
}

TEST_CASE("involute") {
    CHECK(fixtures::M2().involute() == fixtures::M2());
    CHECK(lp(0, {1, 1}).involute() == lp(-1, {1, 1}));
    CHECK(fixtures::m5().involute() * fixtures::m5() == fixtures::M5());
    fixtures::Rng rng;
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = rng.poly(8);
        CHECK(p.involute().involute() == p);
        if (!p.is_zero()) {
            CHECK(p.involute().degree() == -p.min_exp());
            CHECK(p.involute().min_exp() == -p.degree());
        }
    }
}

TEST_CASE("is_symmetric") {
    CHECK(fixtures::M13().is_symmetric());
    CHECK(!lp(0, {1, 1}).is_symmetric());
    CHECK(LaurentPoly{}.is_symmetric());
}

TEST_CASE("inflate") {
    CHECK(lp(0, {1, 1}).inflate(2) == lp(0, {1, 0, 1}));
    CHECK(fixtures::M2().inflate(2) == lp(-2, {1, 0, 2, 0, 1}));
    LaurentPoly p = lp(-2, {3, 1, 4, 1});
    CHECK(p.inflate(1) == p);
    CHECK_THROWS_AS(p.inflate(0), OutOfRange);
}

TEST_CASE("inflate commutes with evaluation") {
    fixtures::Rng rng;
    for (int i = 0; i < 60; ++i) {
        LaurentPoly p = rng.poly(6, 0, 3);
        for (long long x : {1, -1, 2, 3, -2}) {
            CHECK(p.inflate(2).eval_int(x) == p.eval_int(Int(x) * x));
            CHECK(p.inflate(3).eval_int(x) == p.eval_int(Int(x) * x * x));
        }
    }
    // negative exponents at the units
    CHECK(fixtures::M5().inflate(2).eval_int(-1) == fixtures::M5().eval_int(1));
}

TEST_CASE("is_positive") {
    CHECK(fixtures::m29().is_positive());
    CHECK(!lp(0, {1, -1}).is_positive());
    CHECK(!lp(0, {1, 0, 1}).is_positive());  // internal zero
    CHECK(!LaurentPoly{}.is_positive());
}

TEST_CASE("integer evaluation") {
    CHECK(fixtures::M13().eval_int(1) == 169);
    CHECK(fixtures::M13().value_at_one() == 169);
    CHECK(fixtures::M5().eval_int(-1) == Int(2 - 6 + 9 - 6 + 2));
    CHECK(lp(0, {1, 2, 2}).eval_int(0) == 1);
    CHECK_THROWS_AS(fixtures::M2().eval_int(0), ZeroPoint);
    // q^-1 + 2 + q at 2 is 7/2: not an integer
    CHECK_THROWS_AS(fixtures::M2().eval_int(2), NotExactEvaluation);
    // but 2q^-1 + 2q is exact at 2
    CHECK(lp(-1, {2, 0, 2}).eval_int(2) == 5);
}

TEST_CASE("evaluation at one is the coefficient sum and respects ring ops") {
    fixtures::Rng rng;
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = rng.poly(8);
        LaurentPoly r = rng.poly(8);
        CHECK((p + r).value_at_one() == p.value_at_one() + r.value_at_one());
        CHECK((p * r).value_at_one() == p.value_at_one() * r.value_at_one());
        for (long long x : {1, -1}) {
            CHECK((p * r).eval_int(x) == p.eval_int(x) * r.eval_int(x));
            CHECK((p + r).eval_int(x) == p.eval_int(x) + r.eval_int(x));
        }
    }
}

TEST_CASE("Gaussian evaluation") {
    Gaussian i = Gaussian::i();
    Gaussian v = eval_gaussian(fixtures::M13(), i);
    CHECK(v == Gaussian(13));
    CHECK(eval_gaussian(fixtures::M2(), i) == Gaussian(2));
    CHECK(eval_gaussian(fixtures::M5(), i) == Gaussian(5));
    CHECK(eval_gaussian(fixtures::M29(), i) == Gaussian(29));
    CHECK(eval_gaussian(lp(0, {1, 1}), i) == Gaussian(1, 1));
    CHECK_THROWS_AS(eval_gaussian(fixtures::M2(), Gaussian()), ZeroPoint);

    fixtures::Rng rng;
    for (int k = 0; k < 60; ++k) {
        LaurentPoly p = rng.poly(7);
        LaurentPoly r = rng.poly(7);
        CHECK(eval_gaussian(p * r, i) == eval_gaussian(p, i) * eval_gaussian(r, i));
        CHECK(eval_gaussian(p + r, i) == eval_gaussian(p, i) + eval_gaussian(r, i));
    }
}

TEST_CASE("double evaluation stays close to exact values") {
    double v = fixtures::M5().eval_double(1.0);
    CHECK(v == doctest::Approx(25.0));
    double w = fixtures::M2().eval_double(2.0);
    CHECK(w == doctest::Approx(4.5));
}

TEST_CASE("text format prints lowest degree first") {
    CHECK(fixtures::M5().to_text() == "2 q^-2 + 6 q^-1 + 9 + 6 q + 2 q^2");
    CHECK(fixtures::m2().to_text() == "1 + q");
    CHECK(LaurentPoly{}.to_text() == "0");
    CHECK(lp(0, {1, -1}).to_text() == "1 - q");
}

TEST_CASE("digest separates distinct polynomials") {
    fixtures::Rng rng;
    std::vector<LaurentPoly> ps;
    for (int i = 0; i < 50; ++i) ps.push_back(rng.poly(6));
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (ps[i] == ps[j])
                CHECK(digest(ps[i]) == digest(ps[j]));
            else
                CHECK(!(digest(ps[i]) == digest(ps[j])));
}
