#pragma once

#include <vector>

#include "trihedral/bivar.hpp"
#include "trihedral/fusion.hpp"

namespace trihedral {
namespace koornwinder {

// Common root of the level-e vanishing ideal, indexed by a weight (k, l) with
// k+l <= e; the complex value is derived, never stored as primary data.
struct VanishingPoint {
    int k = 0, l = 0, e = 0;
    Cplx z() const;  // Z(sigma, tau) at the zeros2 angles
};

// p_{m,n}, computed by the Chebyshev-like recursion
// X p_{m,n} = p_{m+1,n} + p_{m-1,n+1} + p_{m,n-1} from the degree 0/1 seeds.
BivarPoly chebyshev_sl3(int m, int n);

// The e+2 polynomials p_{m,n} with m+n = e+1, ordered by m descending.
std::vector<BivarPoly> vanishing_generators(int e);

// All t_e = (e+1)(e+2)/2 points, ordered by (k+l, k).
std::vector<VanishingPoint> vanishing_set(int e);

// Orbits under the index map (k,l) -> (e-k-l, k), which realizes the
// Z/3Z-action z -> zeta z on the vanishing set. Orbits have size 3 except a
// single fixed point (the z = 0 point) when e = 0 mod 3; ordered by the
// minimal member.
std::vector<std::vector<VanishingPoint>> zeta_orbits(int e);

// Number of triangular-number points t_e.
long t_number(int e);

// Each vanishing generator multiplied by the minimal Y power making it a
// polynomial in x = XY and y = Y^3, then rewritten in (x, y).
std::vector<BivarPoly> rewrite_in_xy(int e);
BivarPoly rewrite_in_xy(const BivarPoly& p);

}  // namespace koornwinder
}  // namespace trihedral
