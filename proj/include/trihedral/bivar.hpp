#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trihedral/laurent.hpp"

namespace trihedral {

// Monomial exponents (i, j) for first^i * second^j.
using Mono = std::pair<int, int>;

// Element of Q[X,Y] (or Q[x,y] after the classification change of variables),
// stored sparsely with exact rational coefficients.
class BivarPoly {
public:
    BivarPoly() = default;
    BivarPoly(long c) { if (c != 0) coeffs_[{0, 0}] = c; }
    BivarPoly(const Rat& c) { if (c != 0) coeffs_[{0, 0}] = c; }
    BivarPoly(const Rat& c, int i, int j) { if (c != 0) coeffs_[{i, j}] = c; }

    static BivarPoly X() { return BivarPoly(Rat(1), 1, 0); }
    static BivarPoly Y() { return BivarPoly(Rat(1), 0, 1); }

    const std::map<Mono, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(int i, int j) const;
    bool is_integral() const;  // all coefficients in Z
    int total_degree() const;  // -1 for zero
    bool depends_on_second() const;  // any monomial with j > 0

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly operator+(const BivarPoly& o) const { auto r = *this; r += o; return r; }
    BivarPoly operator-(const BivarPoly& o) const { auto r = *this; r -= o; return r; }
    BivarPoly operator-() const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator*(const Rat& s) const;
    BivarPoly shifted(int di, int dj) const;  // multiply by X^di Y^dj

    bool operator==(const BivarPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }
    bool operator<(const BivarPoly& o) const { return coeffs_ < o.coeffs_; }

    Cplx eval(Cplx x, Cplx y) const;

    // Scale to integer coefficients with content 1 and positive leading
    // coefficient in the lex(x<y) order.
    BivarPoly primitive() const;

    // Total degree descending, then first-variable exponent descending,
    // e.g. "X^2Y^2 - X^3 - Y^3".
    std::string str(const std::string& xname = "X", const std::string& yname = "Y") const;

private:
    std::map<Mono, Rat> coeffs_;
};

// Monomial order tag for buchberger. LexXY is lexicographic with x < y
// (compares the y-exponent first), the elimination order used to derive the
// univariate member in the classification.
enum class MonomialOrder { LexXY };

// Reduced Groebner basis of the ideal generated by gens, normalized to
// primitive integer generators with positive leading coefficients, sorted.
std::vector<BivarPoly> buchberger(std::vector<BivarPoly> gens,
                                  MonomialOrder order = MonomialOrder::LexXY);

// Remainder of p under multivariate division by the (Groebner) basis.
BivarPoly reduce_mod(const BivarPoly& p, const std::vector<BivarPoly>& basis,
                     MonomialOrder order = MonomialOrder::LexXY);

}  // namespace trihedral
