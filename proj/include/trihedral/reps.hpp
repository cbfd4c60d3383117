#pragma once

#include <complex>
#include <vector>

#include "trihedral/hecke.hpp"
#include "trihedral/matrix.hpp"

namespace trihedral {
namespace reps {

// One-dimensional representation candidate: the generator values, each of
// which must be 0 or [3]! to satisfy the quadratic relation.
struct Character {
    LaurentPoly lg, lo, lp;
    const LaurentPoly& value(Color u) const {
        switch (u) {
            case Color::g: return lg;
            case Color::o: return lo;
            default: return lp;
        }
    }
};

// True iff the character respects both defining relations and kills every
// RKL^u_{m,n} with m+n = e+1 (evaluated through bs_expansion; the [2]
// denominators cancel exactly).
bool character_is_rep(const Character& c, int e);

// All characters admitted at level e, in a fixed order.
std::vector<Character> admitted_characters(int e);

// Three-dimensional family M_z; entries carry symbolic v through [2], [3]
// and are evaluated at sample v values.
struct ThreeDimRep {
    Cplx z;
    Matrix<Cplx> matrix(Color u, double v) const;
    Matrix<Cplx> act(const hecke::KLLabel& label, double v) const;  // via bs_expansion
    Matrix<Cplx> act(const hecke::HeckeElement& x, double v) const;
};

ThreeDimRep three_dim(Cplx z);
bool three_dim_is_rep(Cplx z, int e, double tol = 1e-9);

// Equivalence z ~ z' iff z' in {z, zeta z, zeta^-1 z}; when true the explicit
// diagonal base change diag(zeta^-+1, 1, zeta^+-1) is applied and checked.
bool equivalent(Cplx z, Cplx z2, double tol = 1e-9);
bool is_simple(Cplx z, double tol = 1e-9);

struct SimpleTable {
    long one_dim = 0;
    long three_dim = 0;
    long sum_of_squares = 0;  // equals hecke::dimension(e), asserted exactly
};

SimpleTable simple_table(int e);

}  // namespace reps
}  // namespace trihedral
