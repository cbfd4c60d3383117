#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trihedral/bivar.hpp"
#include "trihedral/koornwinder.hpp"

using namespace trihedral;

namespace {

std::mt19937 rng(987123);

BivarPoly random_bivar() {
    BivarPoly p;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        long c = static_cast<long>(rng() % 11) - 5;
        p += BivarPoly(Rat(c), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4));
    }
    return p;
}

}  // namespace

TEST_CASE("ring axioms on random triples") {
    for (int i = 0; i < 1000; ++i) {
        BivarPoly a = random_bivar(), b = random_bivar(), c = random_bivar();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("printing follows total degree then first exponent") {
    BivarPoly p = BivarPoly(Rat(1), 2, 2) - BivarPoly(Rat(1), 3, 0) - BivarPoly(Rat(1), 0, 3);
    CHECK(p.str() == "X^2Y^2 - X^3 - Y^3");
    CHECK(koornwinder::chebyshev_sl3(4, 0).str() == "X^4 - 3X^2Y + Y^2 + 2X");
}

TEST_CASE("buchberger: single generator is its own basis") {
    BivarPoly x = BivarPoly::X();
    auto basis = buchberger({x});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == x);
}

TEST_CASE("buchberger: hand elimination {x - y, y} -> {x, y}") {
    auto basis = buchberger({BivarPoly::X() - BivarPoly::Y(), BivarPoly::Y()});
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == BivarPoly::X());
    CHECK(basis[1] == BivarPoly::Y());
}

TEST_CASE("buchberger reproduces the level-3 basis") {
    auto basis = buchberger(koornwinder::rewrite_in_xy(3));
    // x^3 - 5x^2 + 4x, xy - y - 2x^2 + 2x, y^2 - y - 5x^2 + 6x
    BivarPoly g1 = BivarPoly(Rat(1), 3, 0) - BivarPoly(Rat(5), 2, 0) + BivarPoly(Rat(4), 1, 0);
    BivarPoly g2 = BivarPoly(Rat(1), 1, 1) - BivarPoly(Rat(1), 0, 1) - BivarPoly(Rat(2), 2, 0) +
                   BivarPoly(Rat(2), 1, 0);
    BivarPoly g3 = BivarPoly(Rat(1), 0, 2) - BivarPoly(Rat(1), 0, 1) - BivarPoly(Rat(5), 2, 0) +
                   BivarPoly(Rat(6), 1, 0);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == g1);
    CHECK(basis[1] == g2);
    CHECK(basis[2] == g3);
}

TEST_CASE("buchberger output reduces every input generator to zero") {
    for (int e : {0, 1, 2, 3}) {
        auto gens = koornwinder::rewrite_in_xy(e);
        auto basis = buchberger(gens);
        for (const auto& g : gens) CHECK(reduce_mod(g, basis).is_zero());
        // idempotence up to normalization
        auto again = buchberger(basis);
        CHECK(again == basis);
    }
}

TEST_CASE("evaluation of p_{1,1} at (1,1) vanishes") {
    BivarPoly p = koornwinder::chebyshev_sl3(1, 1);
    CHECK(std::abs(p.eval(Cplx(1, 0), Cplx(1, 0))) < 1e-12);
}
