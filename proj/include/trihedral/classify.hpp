#pragma once

#include <string>
#include <vector>

#include "trihedral/bivar.hpp"
#include "trihedral/graphs.hpp"

namespace trihedral {
namespace classify {

// Color-preserving isomorphism of tricolored multigraphs.
bool iso_tricolored(const graphs::TricoloredGraph& a, const graphs::TricoloredGraph& b);

// Canonical string: equal strings iff tricolored-isomorphic. Computed by
// refinement-pruned backtracking over color-preserving relabelings.
std::string canonical_form(const graphs::TricoloredGraph& g);

// The univariate (x-only) member of the reduced lex(x<y) Groebner basis of
// the rewritten vanishing ideal; its roots bound the eigenvalues of A^T A.
BivarPoly elimination_polynomial(int e);

struct SearchBounds {
    int max_green = 3, max_orange = 3, max_purple = 3;
    int max_mult = 2;
    double eig_bound = 0;  // filled from elimination_polynomial when 0
};

// All admissible solutions of the classification problem at level e within
// the bounds, pruned by quasi-regularity, the elimination polynomial on
// A^T A, then the full annihilation test; canonical representatives in a
// deterministic order.
std::vector<graphs::TricoloredGraph> enumerate_solutions(int e, SearchBounds bounds);

struct TheoremReport {
    int level = 0;
    bool exhaustive = false;
    long classes_found = 0;
    std::vector<std::string> names;  // canonical member names / descriptions
    bool matches_expected = false;
};

// e <= 2: exhaustive search within proof-derived bounds, compared against the
// generalized ADE list. e = 3: verification of the 8 listed tricolored-iso
// classes (A_3 x3, D_3 x3, C_3, the double-edge special solution); the
// exhaustive e=3 search is opt-in through enumerate_solutions.
TheoremReport verify_theorem(int e);

// The special level-3 solution: the all-double-edge triangle.
graphs::TricoloredGraph special_solution();

// Human-readable identification of a search result against the known
// families (A/D/C colorings, the special solution, single-vertex character
// solutions); anything else is labeled unlisted.
std::string describe_solution(const graphs::TricoloredGraph& g);

}  // namespace classify
}  // namespace trihedral
