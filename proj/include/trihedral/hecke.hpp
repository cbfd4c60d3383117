#pragma once

#include <map>
#include <string>
#include <vector>

#include "trihedral/fusion.hpp"
#include "trihedral/laurent.hpp"

namespace trihedral {
namespace hecke {

constexpr int level_infinity = -1;

// Label of a colored KL basis element: the unit, or RKL^u_{m,n} with right
// starting color u. The left color is rho^{m-n}(u).
struct KLLabel {
    bool unit = false;
    int m = 0, n = 0;
    Color right = Color::g;

    static KLLabel one() { return KLLabel{true, 0, 0, Color::g}; }
    static KLLabel rkl(int m, int n, Color u) { return KLLabel{false, m, n, u}; }

    Color left_color() const { return rho(right, m - n); }
    std::string str() const;

    bool operator==(const KLLabel& o) const {
        if (unit != o.unit) return false;
        if (unit) return true;
        return m == o.m && n == o.n && right == o.right;
    }
    bool operator!=(const KLLabel& o) const { return !(*this == o); }
    bool operator<(const KLLabel& o) const {
        if (unit != o.unit) return unit;  // the unit sorts first
        if (unit) return false;
        if (m + n != o.m + o.n) return m + n < o.m + o.n;
        if (m != o.m) return m < o.m;
        return static_cast<int>(right) < static_cast<int>(o.right);
    }
};

// Finite linear combination of KL labels with FracLaurent coefficients, at a
// fixed level (level_infinity means T_infinity; otherwise labels obey m+n <= e).
class HeckeElement {
public:
    explicit HeckeElement(int level = level_infinity) : level_(level) {}

    int level() const { return level_; }
    const std::map<KLLabel, FracLaurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    FracLaurent coeff(const KLLabel& l) const;

    void add(const KLLabel& label, const FracLaurent& c);
    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator*(const FracLaurent& c) const;
    bool operator==(const HeckeElement& o) const {
        return level_ == o.level_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    int level_;
    std::map<KLLabel, FracLaurent> terms_;
};

// theta_u = RKL^u_{0,0} as an element.
HeckeElement generator(Color u, int level = level_infinity);
HeckeElement unit_element(int level = level_infinity);

// RKL^r_{m,n} . theta_u (label must not be the unit):
//   u = r            -> [3]! label
//   r = rho(u)       -> [2] ((m+1,n,u) + (m-1,n+1,u) + (m,n-1,u))
//   r = rho^{-1}(u)  -> [2] ((m,n+1,u) + (m+1,n-1,u) + (m-1,n,u))
// negative indices drop; at level e the m+n = e+1 terms drop.
HeckeElement mult_gen_right(const KLLabel& label, Color u, int level);

// theta_u . RKL, the mirror rule keyed on the left color; the right color of
// every output label is preserved.
HeckeElement mult_gen_left(Color u, const KLLabel& label, int level);

// One Bott-Samelson word with its coefficient. word[0] is the right-most
// (first applied) generator color; the word is the normal form with all
// X-steps (rho) before all Y-steps (rho^{-1}).
struct BSTerm {
    std::vector<Color> word;
    FracLaurent coeff;
};

// RKL^u_{m,n} = sum over (k,l) of [2]^{-k-l} d^{k,l}_{m,n} theta-word(k,l,u).
std::vector<BSTerm> bs_expansion(int m, int n, Color u);

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);

long dimension(int e);
std::vector<KLLabel> basis(int e);

struct CellDecomposition {
    std::vector<std::vector<KLLabel>> left;
    std::vector<std::vector<KLLabel>> right;
    std::vector<std::vector<KLLabel>> two_sided;
};

// Cells computed from the structure constants: preorders are generated by
// one-step containment in z*y (resp. y*z, both), then collapsed by SCC.
CellDecomposition cells(int e);

}  // namespace hecke
}  // namespace trihedral
