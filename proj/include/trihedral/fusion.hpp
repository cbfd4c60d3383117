#pragma once

#include <map>
#include <utility>

#include "trihedral/laurent.hpp"

namespace trihedral {

// Dominant sl3 weight (m, n) = m*omega_1 + n*omega_2.
struct Weight {
    int m = 0, n = 0;
    bool operator==(const Weight& o) const { return m == o.m && n == o.n; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    // total degree first, then m: the deterministic order used throughout
    bool operator<(const Weight& o) const {
        if (m + n != o.m + o.n) return m + n < o.m + o.n;
        return m < o.m;
    }
};

// Secondary color, cyclically permuted by rho: g -> o -> p -> g.
enum class Color { g = 0, o = 1, p = 2 };
Color rho(Color u, int k = 1);
char color_char(Color u);
Color color_from_char(char c);

namespace fusion {

// Multiset of simple summands with multiplicities.
using FusionDecomposition = std::map<Weight, long>;

// Tensor with the fundamental X = L_{1,0}: L_{m,n} -> L_{m+1,n} + L_{m-1,n+1} + L_{m,n-1}.
FusionDecomposition tensor_X(const FusionDecomposition& dec);
// Tensor with Y = L_{0,1}: L_{m,n} -> L_{m,n+1} + L_{m+1,n-1} + L_{m-1,n}.
FusionDecomposition tensor_Y(const FusionDecomposition& dec);

// Full decomposition of X^k Y^l starting from the unit L_{0,0}.
FusionDecomposition decompose_monomial(int k, int l);

// The integers d^{k,l}_{m,n} with [L_{m,n}] = sum d^{k,l}_{m,n} [X^k Y^l],
// computed by triangular inversion of decompose_monomial along total degree.
std::map<std::pair<int, int>, long> d_coefficients(int m, int n);

// g/o/p according to m+2n mod 3.
Color central_character(int m, int n);

// [2]^-1 [m+1][n+1][m+n+2] at eta = exp(i pi / (e+3)); requires m+n <= e.
double qdim(int m, int n, int e);

}  // namespace fusion
}  // namespace trihedral
