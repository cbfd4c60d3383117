#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace trihedral {

using Int = mpz_class;
using Rat = mpq_class;
using Cplx = std::complex<double>;

// Element of Z[v, v^-1], stored sparsely as exponent -> coefficient.
// No zero coefficients are ever stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) coeffs_[0] = c; }
    LaurentPoly(const Int& c) { if (c != 0) coeffs_[0] = c; }
    LaurentPoly(const Int& c, int exp) { if (c != 0) coeffs_[exp] = c; }

    static LaurentPoly v(int exp = 1) { return LaurentPoly(1, exp); }

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    Int coeff(int exp) const;
    int min_exp() const;  // throws on zero
    int max_exp() const;
    Int leading() const { return coeffs_.rbegin()->second; }

    // True if all coefficients are >= 0 (N[v,v^-1] membership).
    bool nonneg_coeffs() const;
    Int content() const;  // gcd of coefficients, 0 for the zero polynomial

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const { auto r = *this; r += o; return r; }
    LaurentPoly operator-(const LaurentPoly& o) const { auto r = *this; r -= o; return r; }
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    LaurentPoly shifted(int dexp) const;  // multiply by v^dexp
    LaurentPoly pow(unsigned n) const;

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    // Exact division in Z[v,v^-1]; returns false if not exactly divisible.
    static bool divide_exact(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& out);

    Cplx eval(Cplx x) const;  // x must be nonzero if negative exponents occur
    double eval(double x) const;
    Int eval_at_one() const;

    // Descending powers, e.g. "v^3 + 2v + 2v^-1 + v^-3".
    std::string str() const;

private:
    std::map<int, Int> coeffs_;
};

// Quantum numbers of Eq-style [s] = (v^s - v^-s)/(v - v^-1), with [0] = 0,
// [-s] = -[s]; [t]! = [t][t-1]...[1]; binomials are exact Laurent quotients.
LaurentPoly quantum_integer(long s);
LaurentPoly quantum_factorial(long t);
LaurentPoly quantum_binomial(long s, long t);

// Fraction num/den over Z[v,v^-1], kept in a canonical reduced form:
// gcd of the primitive parts cancelled, gcd(content(num), content(den)) = 1,
// den with lowest v-exponent 0 and positive leading coefficient.
class FracLaurent {
public:
    FracLaurent() : num_(), den_(1) {}
    FracLaurent(long c) : num_(c), den_(1) {}
    FracLaurent(const LaurentPoly& p) : num_(p), den_(1) {}
    FracLaurent(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    // Throws unless den == 1.
    const LaurentPoly& as_laurent() const;

    FracLaurent operator+(const FracLaurent& o) const;
    FracLaurent operator-(const FracLaurent& o) const;
    FracLaurent operator*(const FracLaurent& o) const;
    FracLaurent operator/(const FracLaurent& o) const;
    FracLaurent operator-() const;
    FracLaurent& operator+=(const FracLaurent& o) { *this = *this + o; return *this; }
    FracLaurent& operator-=(const FracLaurent& o) { *this = *this - o; return *this; }
    FracLaurent& operator*=(const FracLaurent& o) { *this = *this * o; return *this; }

    bool operator==(const FracLaurent& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FracLaurent& o) const { return !(*this == o); }
    bool operator<(const FracLaurent& o) const;

    Cplx eval(Cplx x) const;
    double eval(double x) const;
    std::string str() const;

private:
    void normalize();
    LaurentPoly num_, den_;
};

}  // namespace trihedral
