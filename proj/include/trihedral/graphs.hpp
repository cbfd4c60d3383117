#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trihedral/fusion.hpp"
#include "trihedral/hecke.hpp"
#include "trihedral/matrix.hpp"

namespace trihedral {
namespace graphs {

// Tricolored multigraph given by its three integer blocks:
//   A (|O| x |G|) counts G-O edges, B (|P| x |O|) counts O-P edges,
//   C (|G| x |P|) counts P-G edges.
struct TricoloredGraph {
    std::string name;
    int level = 0;
    Matrix<Int> A, B, C;
    // weight labels for the type A/D families (empty for data-file graphs)
    std::vector<Weight> green_weights, orange_weights, purple_weights;

    std::size_t n_green() const { return C.rows(); }
    std::size_t n_orange() const { return A.rows(); }
    std::size_t n_purple() const { return B.rows(); }
    std::size_t size() const { return n_green() + n_orange() + n_purple(); }
};

// Directed adjacency matrices of eq-ad-matrix shape, vertex order G, O, P.
Matrix<Int> gamma_X(const TricoloredGraph& g);
Matrix<Int> gamma_Y(const TricoloredGraph& g);
Matrix<Int> adjacency(const TricoloredGraph& g);

// The weight-triangle cut-off at level e, corner (0,0) colored cornerColor.
TricoloredGraph type_A(int e, Color corner = Color::g);
// Z/3Z orbit graph of type_A(e) with the fixed point split in three; needs
// e = 0 mod 3, e > 0.
TricoloredGraph type_D(int e, Color corner = Color::g);
// Conjugate type A, transcribed data for e <= 5 (C_1 = A_1, C_2 = A_2).
TricoloredGraph type_C(int e);
// Exceptional graphs: E5, E9_1 .. E9_4, E21.
TricoloredGraph type_E(const std::string& name);
// Every bundled generalized ADE diagram: A_0..A_8, D_3, D_6, C_1..C_5, E-list.
std::vector<TricoloredGraph> bundled_graphs();
// Load a graph from a JSON file of the documented schema.
TricoloredGraph load_graph_json(const std::string& path);
// Cyclic recoloring g->o->p->g of the color classes: (A,B,C) -> (C,A,B).
TricoloredGraph rotate_colors(const TricoloredGraph& g);

bool is_quasi_regular(const TricoloredGraph& g);
bool is_strongly_connected(const TricoloredGraph& g);
bool is_admissible(const TricoloredGraph& g);

// The N_[v]-representation matrices of the generators on C_v{G,O,P}.
struct GraphRep {
    Matrix<LaurentPoly> Mg, Mo, Mp;
    const Matrix<LaurentPoly>& M(Color u) const {
        switch (u) {
            case Color::g: return Mg;
            case Color::o: return Mo;
            default: return Mp;
        }
    }
};

// Requires quasi-regularity (otherwise the defining relations fail).
GraphRep m_gamma(const TricoloredGraph& g);

// M_Gamma(RKL^u_{m,n}) via bs_expansion; exact Laurent matrix (the [2]
// denominators cancel against the [2] factors of the generator matrices).
Matrix<LaurentPoly> kl_action(const TricoloredGraph& g, int m, int n, Color u);

struct AnnihilationCertificate {
    bool ok = false;
    Int max_abs_entry;  // over all evaluated generator matrices
};

// p_{m,n}(A(Gamma^X), A(Gamma^Y)) = 0 exactly for all m+n = e+1.
AnnihilationCertificate annihilation_test(const TricoloredGraph& g, int e);

struct SpectrumReport {
    bool ok = false;
    std::vector<Cplx> eigenvalues;          // of A(Gamma^X)
    std::vector<Cplx> unmatched;            // eigenvalues without a matching root
};

// Type A: eigenvalue multiset equals the vanishing-set z values; otherwise the
// nonzero eigenvalues must be a subset of the type A spectrum.
SpectrumReport spectrum_check(const TricoloredGraph& g, int e, double tol = 1e-6);

struct TypeDReport {
    long rank = 0;                 // (t_e - 1)/3 + 3
    std::vector<double> module_qdims;
    double lhs = 0, rhs = 0;       // qdim(A) * sum qdim(L)^2 vs sum qdim(S)^2
    bool ok = false;
};

TypeDReport type_D_counting(int e, double tol = 1e-8);

}  // namespace graphs
}  // namespace trihedral
