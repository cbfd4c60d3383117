#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trihedral/laurent.hpp"

using namespace trihedral;

namespace {

std::mt19937 rng(20260810);

LaurentPoly random_laurent(int max_terms = 4, int max_exp = 4, int max_coeff = 9) {
    LaurentPoly p;
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int i = 0; i < terms; ++i) {
        long c = static_cast<long>(rng() % (2 * max_coeff + 1)) - max_coeff;
        int e = static_cast<int>(rng() % (2 * max_exp + 1)) - max_exp;
        p += LaurentPoly(c, e);
    }
    return p;
}

}  // namespace

TEST_CASE("quantum integers match the defining expansion") {
    CHECK(quantum_integer(2) == LaurentPoly(1, 1) + LaurentPoly(1, -1));
    CHECK(quantum_integer(0).is_zero());
    CHECK(quantum_integer(-2) == -(LaurentPoly(1, 1) + LaurentPoly(1, -1)));
    CHECK(quantum_integer(1) == LaurentPoly(1));
    // (v^s - v^-s)/(v - v^-1) recomputed by exact division
    for (long s = 1; s <= 8; ++s) {
        LaurentPoly num = LaurentPoly(1, static_cast<int>(s)) - LaurentPoly(1, -static_cast<int>(s));
        LaurentPoly den = LaurentPoly(1, 1) - LaurentPoly(1, -1);
        LaurentPoly q;
        REQUIRE(LaurentPoly::divide_exact(num, den, q));
        CHECK(q == quantum_integer(s));
    }
}

TEST_CASE("quantum factorial and binomial") {
    // [3][2][1] multiplied by hand: v^3 + 2v + 2v^-1 + v^-3
    LaurentPoly expect = LaurentPoly(1, 3) + LaurentPoly(2, 1) + LaurentPoly(2, -1) + LaurentPoly(1, -3);
    CHECK(quantum_factorial(3) == expect);
    CHECK(quantum_factorial(0) == LaurentPoly(1));
    CHECK(quantum_binomial(1, 2).is_zero());
    LaurentPoly q;
    REQUIRE(LaurentPoly::divide_exact(quantum_integer(4) * quantum_integer(3),
                                      quantum_factorial(2), q));
    CHECK(quantum_binomial(4, 2) == q);
    CHECK(quantum_binomial(5, 0) == LaurentPoly(1));
}

TEST_CASE("quantum Pascal identity [s][2] = [s+1] + [s-1]") {
    for (long s = -10; s <= 10; ++s)
        CHECK(quantum_integer(s) * quantum_integer(2) ==
              quantum_integer(s + 1) + quantum_integer(s - 1));
}

TEST_CASE("ring axioms on random triples") {
    for (int i = 0; i < 1000; ++i) {
        LaurentPoly a = random_laurent(), b = random_laurent(), c = random_laurent();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("evaluation") {
    LaurentPoly p = quantum_integer(3);
    // [3] at a primitive 12th root of unity (e = 3) is the quantum dimension 2
    Cplx eta = std::polar(1.0, M_PI / 6.0);
    CHECK(std::abs(p.eval(eta) - Cplx(2.0, 0.0)) < 1e-12);
    // any p at v = 1 is the coefficient sum
    LaurentPoly q = random_laurent();
    CHECK(q.eval_at_one().get_d() == doctest::Approx(q.eval(1.0)).epsilon(1e-9));
}

TEST_CASE("FracLaurent normalization: a/b == (a c)/(b c)") {
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = random_laurent();
        LaurentPoly b = random_laurent(), c = random_laurent();
        if (b.is_zero() || c.is_zero()) continue;
        FracLaurent f1(a, b), f2(a * c, b * c);
        CHECK(f1 == f2);
    }
}

TEST_CASE("FracLaurent arithmetic") {
    FracLaurent half(LaurentPoly(1), quantum_integer(2));
    FracLaurent two_q(quantum_integer(2));
    CHECK(half * two_q == FracLaurent(LaurentPoly(1)));
    CHECK((half + half) == FracLaurent(LaurentPoly(2), quantum_integer(2)));
    CHECK(half - half == FracLaurent());
    CHECK(half / half == FracLaurent(LaurentPoly(1)));
    CHECK(half.is_laurent() == false);
    CHECK(two_q.is_laurent());
    // denominators of [2]-powers stay normalized with positive lead, min exp 0
    FracLaurent x(quantum_factorial(3), quantum_integer(2) * quantum_integer(2));
    CHECK(x.den().min_exp() == 0);
    CHECK(x.den().leading() > 0);
}
