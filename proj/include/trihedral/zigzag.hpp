#pragma once

#include <map>
#include <string>
#include <vector>

#include "trihedral/fusion.hpp"
#include "trihedral/matrix.hpp"

namespace trihedral {
namespace zigzag {

// Vertex letter; the dictionary is x<->g, y<->o, z<->p via the central
// character of the weight, with cyclic order x -> y -> z -> x.
enum class Letter { x = 0, y = 1, z = 2 };
Letter vertex_letter(int m, int n);
Letter next_letter(Letter l);
Letter prev_letter(Letter l);
char letter_char(Letter l);

// Loop-word normal forms at a vertex with letter i (successor j, predecessor
// k): 1, l_i, l_j, l_i l_j, l_i l_k, omega = l_i^2 l_k, of degrees
// 0, 2, 2, 4, 4, 6. Arrows between adjacent vertices: p, p l_src of degrees
// 2, 4.
enum class MonKind {
    Idem = 0,   // identity path
    Li = 1,     // l_i
    Lj = 2,     // l_j
    LiLj = 3,   // l_i l_j
    LiLk = 4,   // l_i l_k
    Omega = 5,  // l_i^2 l_k
    P = 6,      // arrow src -> dst
    PLi = 7,    // arrow after one source loop l_src
};

struct PathMonomial {
    Weight src, dst;
    MonKind kind = MonKind::Idem;

    bool is_loop() const { return kind < MonKind::P; }
    int degree() const;
    std::string str() const;

    bool operator==(const PathMonomial& o) const {
        return src == o.src && dst == o.dst && kind == o.kind;
    }
    bool operator<(const PathMonomial& o) const {
        if (src != o.src) return src < o.src;
        if (dst != o.dst) return dst < o.dst;
        return kind < o.kind;
    }
};

// Finite linear combination of normal-form path monomials with exact
// rational coefficients.
class ZigzagElement {
public:
    ZigzagElement() = default;
    static ZigzagElement mono(const PathMonomial& m, const Rat& c = Rat(1));

    const std::map<PathMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const PathMonomial& m, const Rat& c);
    ZigzagElement operator+(const ZigzagElement& o) const;
    ZigzagElement operator-(const ZigzagElement& o) const;
    ZigzagElement operator*(const Rat& c) const;
    bool operator==(const ZigzagElement& o) const { return terms_ == o.terms_; }
    std::string str() const;

private:
    std::map<PathMonomial, Rat> terms_;
};

// Whether (m,n) and (m',n') are neighbors in the A_infinity graph.
bool adjacent_weights(const Weight& a, const Weight& b);

// Normal-form basis of Hom(v1 -> v2) in Z_e; throws if a vertex is outside
// the level.
std::vector<PathMonomial> normal_basis(const Weight& v1, const Weight& v2, int e);

// All basis monomials of Z_e.
std::vector<PathMonomial> algebra_basis(int e);

// a o b: apply b first (so source(a) must be target(b) termwise); mismatched
// endpoints contribute zero, matching the path-algebra convention.
ZigzagElement multiply(const ZigzagElement& a, const ZigzagElement& b, int e);

// Linear extension of tr(omega) = 1 at every vertex, zero on the rest.
Rat trace(const ZigzagElement& a);

bool gram_nondegenerate(int e);

// Graded Cartan matrix: entry (v1, v2) = sum of v^deg over normal_basis(v2, v1).
Matrix<LaurentPoly> graded_cartan(int e);

// Decategorified theta action on indecomposable projectives: equals the
// m_gamma(type_A(e)) generator matrices under the weight-vertex dictionary.
Matrix<LaurentPoly> theta_action(Color color, int e);

}  // namespace zigzag
}  // namespace trihedral
