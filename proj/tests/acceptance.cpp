// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "trihedral/classify.hpp"
#include "trihedral/graphs.hpp"
#include "trihedral/hecke.hpp"
#include "trihedral/koornwinder.hpp"
#include "trihedral/reps.hpp"
#include "trihedral/verify.hpp"
#include "trihedral/zigzag.hpp"

using namespace trihedral;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int num, const std::string& name, bool ok, double secs, double budget) {
    bool pass = ok && secs < budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d (%s): %s in %.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL",
                num, name.c_str(), ok ? "ok" : "FAILED", secs, budget);
    std::fflush(stdout);
}

// roots of a real monic-or-not polynomial via the companion matrix
std::vector<Cplx> poly_roots(const std::vector<double>& coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs[i] / coeffs[n];
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    std::vector<Cplx> out;
    for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i]);
    return out;
}

bool multiset_match(std::vector<Cplx> a, std::vector<Cplx> b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const Cplx& x : a) {
        double best = 1e18;
        std::size_t bi = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (used[i]) continue;
            double d = std::abs(x - b[i]);
            if (d < best) {
                best = d;
                bi = i;
            }
        }
        if (best > tol) return false;
        used[bi] = true;
    }
    return true;
}

BivarPoly term(long c, int i, int j) { return BivarPoly(Rat(c), i, j); }

}  // namespace

// 1. the printed polynomial table, coefficient-exact
static bool criterion1() {
    struct Entry {
        int m, n;
        BivarPoly poly;
    };
    std::vector<Entry> table = {
        {1, 0, term(1, 1, 0)},
        {0, 1, term(1, 0, 1)},
        {2, 0, term(1, 2, 0) - term(1, 0, 1)},
        {1, 1, term(1, 1, 1) - term(1, 0, 0)},
        {0, 2, term(1, 0, 2) - term(1, 1, 0)},
        {3, 0, term(1, 3, 0) - term(2, 1, 1) + term(1, 0, 0)},
        {2, 1, term(1, 2, 1) - term(1, 0, 2) - term(1, 1, 0)},
        {1, 2, term(1, 1, 2) - term(1, 2, 0) - term(1, 0, 1)},
        {0, 3, term(1, 0, 3) - term(2, 1, 1) + term(1, 0, 0)},
        {4, 0, term(1, 4, 0) - term(3, 2, 1) + term(1, 0, 2) + term(2, 1, 0)},
        {3, 1, term(1, 3, 1) - term(2, 1, 2) - term(1, 2, 0) + term(2, 0, 1)},
        {2, 2, term(1, 2, 2) - term(1, 3, 0) - term(1, 0, 3)},
        {1, 3, term(1, 1, 3) - term(2, 2, 1) - term(1, 0, 2) + term(2, 1, 0)},
        {0, 4, term(1, 0, 4) - term(3, 1, 2) + term(1, 2, 0) + term(2, 0, 1)},
        {5, 0, term(1, 5, 0) - term(4, 3, 1) + term(3, 1, 2) + term(3, 2, 0) - term(2, 0, 1)},
        {4, 1,
         term(1, 4, 1) - term(3, 2, 2) - term(1, 3, 0) + term(1, 0, 3) + term(4, 1, 1) -
             term(1, 0, 0)},
        {3, 2,
         term(1, 3, 2) - term(1, 4, 0) - term(2, 1, 3) + term(1, 2, 1) + term(2, 0, 2) -
             term(1, 1, 0)},
        {2, 3,
         term(1, 2, 3) - term(1, 0, 4) - term(2, 3, 1) + term(1, 1, 2) + term(2, 2, 0) -
             term(1, 0, 1)},
        {1, 4,
         term(1, 1, 4) - term(3, 2, 2) - term(1, 0, 3) + term(1, 3, 0) + term(4, 1, 1) -
             term(1, 0, 0)},
    };
    if (table.size() != 19) return false;
    bool ok = koornwinder::chebyshev_sl3(0, 0) == BivarPoly(1);
    for (const auto& ent : table)
        if (koornwinder::chebyshev_sl3(ent.m, ent.n) != ent.poly) ok = false;
    // p_{0,5} is p_{5,0} with the variables swapped
    BivarPoly p05 = koornwinder::chebyshev_sl3(0, 5);
    ok = ok && p05 == term(1, 0, 5) - term(4, 1, 3) + term(3, 2, 1) + term(3, 0, 2) - term(2, 1, 0);
    return ok;
}

// 2. roots: counts, vanishing, separation, factored polynomials at e = 1,2,3
static bool criterion2() {
    bool ok = true;
    for (int e = 0; e <= 10; ++e) {
        auto pts = koornwinder::vanishing_set(e);
        if (static_cast<long>(pts.size()) != koornwinder::t_number(e)) ok = false;
        for (std::size_t i = 0; i < pts.size() && ok; ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (std::abs(pts[i].z() - pts[j].z()) <= 1e-6) ok = false;
        for (const auto& gen : koornwinder::vanishing_generators(e))
            for (const auto& p : pts)
                if (std::abs(gen.eval(p.z(), std::conj(p.z()))) > 1e-8) ok = false;
    }
    // Example plot-zeros: factored root polynomials
    auto zs = [](int e) {
        std::vector<Cplx> out;
        for (const auto& p : koornwinder::vanishing_set(e)) out.push_back(p.z());
        return out;
    };
    {
        // (X-1)(X^2+X+1)
        std::vector<Cplx> roots = poly_roots({-1, 1});
        for (const Cplx& r : poly_roots({1, 1, 1})) roots.push_back(r);
        ok = ok && multiset_match(zs(1), roots, 1e-8);
    }
    {
        // (X^2-X-1)(X^4+X^3+2X^2-X+1)
        std::vector<Cplx> roots = poly_roots({-1, -1, 1});
        for (const Cplx& r : poly_roots({1, -1, 2, 1, 1})) roots.push_back(r);
        ok = ok && multiset_match(zs(2), roots, 1e-8);
    }
    {
        // X (X-2)(X^2+2X+4)(X^6-X^3+1)
        std::vector<Cplx> roots{Cplx(0, 0), Cplx(2, 0)};
        for (const Cplx& r : poly_roots({4, 2, 1})) roots.push_back(r);
        for (const Cplx& r : poly_roots({1, 0, 0, -1, 0, 0, 1})) roots.push_back(r);
        ok = ok && multiset_match(zs(3), roots, 1e-8);
    }
    return ok;
}

// 3. hecke structure: dimension, cells, associativity, positivity
static bool criterion3() {
    bool ok = true;
    for (int e = 0; e <= 12; ++e)
        if (hecke::dimension(e) != 3 * koornwinder::t_number(e) + 1) ok = false;
    for (int e = 1; e <= 5 && ok; ++e) {
        auto cd = hecke::cells(e);
        long te = koornwinder::t_number(e);
        long left_te = 0, trivial = 0;
        for (const auto& c : cd.left) {
            if (static_cast<long>(c.size()) == te) ++left_te;
            if (c.size() == 1 && c.front().unit) ++trivial;
        }
        if (!(cd.left.size() == 4 && left_te == 3 && trivial == 1)) ok = false;
        bool two_ok = cd.two_sided.size() == 2;
        for (const auto& c : cd.two_sided)
            if (!(c.size() == 1 || static_cast<long>(c.size()) == 3 * te)) two_ok = false;
        if (!two_ok) ok = false;
    }
    // level 0 is degenerate (see the project notes): the left/right cells
    // still match the corollary, the two-sided cells split into singletons
    {
        auto cd = hecke::cells(0);
        if (!(cd.left.size() == 4 && cd.right.size() == 4 && cd.two_sided.size() == 4)) ok = false;
    }
    // associativity, exhaustive at e <= 2
    for (int e = 0; e <= 2 && ok; ++e) {
        auto labels = hecke::basis(e);
        for (const auto& a : labels)
            for (const auto& b : labels) {
                hecke::HeckeElement xa(e), xb(e);
                xa.add(a, FracLaurent(LaurentPoly(1)));
                xb.add(b, FracLaurent(LaurentPoly(1)));
                hecke::HeckeElement ab = hecke::multiply(xa, xb);
                for (const auto& c : labels) {
                    hecke::HeckeElement xc(e);
                    xc.add(c, FracLaurent(LaurentPoly(1)));
                    if (!(hecke::multiply(ab, xc) ==
                          hecke::multiply(xa, hecke::multiply(xb, xc))))
                        ok = false;
                }
            }
    }
    // positivity, exhaustive at e <= 4
    for (int e = 0; e <= 4 && ok; ++e) {
        auto labels = hecke::basis(e);
        for (const auto& a : labels)
            for (const auto& b : labels) {
                hecke::HeckeElement xa(e), xb(e);
                xa.add(a, FracLaurent(LaurentPoly(1)));
                xb.add(b, FracLaurent(LaurentPoly(1)));
                hecke::HeckeElement prod = hecke::multiply(xa, xb);
                for (const auto& [l, c] : prod.terms())
                    if (!c.is_laurent() || !c.as_laurent().nonneg_coeffs()) ok = false;
            }
    }
    return ok;
}

// 4. representation-homomorphism oracle at e <= 3
static bool criterion4() {
    bool ok = true;
    for (int e = 0; e <= 3; ++e) {
        auto labels = hecke::basis(e);
        graphs::TricoloredGraph gA = graphs::type_A(e);
        std::size_t n = gA.size();
        std::map<hecke::KLLabel, Matrix<LaurentPoly>> action;
        for (const auto& l : labels)
            action.emplace(l, l.unit ? Matrix<LaurentPoly>::identity(n, LaurentPoly(1))
                                     : graphs::kl_action(gA, l.m, l.n, l.right));
        auto act = [&](const hecke::HeckeElement& x) {
            Matrix<LaurentPoly> total(n, n);
            for (const auto& [l, c] : x.terms()) total = total + action.at(l) * c.as_laurent();
            return total;
        };
        std::vector<reps::ThreeDimRep> zreps;
        for (const auto& p : koornwinder::vanishing_set(e)) zreps.push_back(reps::three_dim(p.z()));
        for (const auto& a : labels) {
            for (const auto& b : labels) {
                hecke::HeckeElement xa(e), xb(e);
                xa.add(a, FracLaurent(LaurentPoly(1)));
                xb.add(b, FracLaurent(LaurentPoly(1)));
                hecke::HeckeElement ab = hecke::multiply(xa, xb);
                if (!(act(ab) == act(xa) * act(xb))) ok = false;
                for (const auto& rep : zreps)
                    for (double v : {1.3, 2.0}) {
                        Matrix<Cplx> lhs = rep.act(ab, v);
                        Matrix<Cplx> rhs = rep.act(xa, v) * rep.act(xb, v);
                        for (int i = 0; i < 3; ++i)
                            for (int j = 0; j < 3; ++j)
                                if (std::abs(lhs(i, j) - rhs(i, j)) >
                                    1e-8 * std::max(1.0, std::abs(rhs(i, j))))
                                    ok = false;
                    }
            }
        }
    }
    return ok;
}

// 5. simple classification and character tables
static bool criterion5() {
    bool ok = true;
    for (int e = 0; e <= 12; ++e) {
        auto st = reps::simple_table(e);
        long te = koornwinder::t_number(e);
        long want_one = (e % 3 == 0) ? 4 : 1;
        long want_three = (e % 3 == 0) ? (te - 1) / 3 : te / 3;
        if (st.one_dim != want_one || st.three_dim != want_three) ok = false;
        if (st.sum_of_squares != hecke::dimension(e)) ok = false;
    }
    LaurentPoly full = quantum_factorial(3);
    for (int e : {1, 2, 3, 6}) {
        auto chars = reps::admitted_characters(e);
        if (e % 3 == 0) {
            if (chars.size() != 4) ok = false;
            // expected: (0,0,0) plus the three single-[3]! characters
            int zero = 0, singles = 0;
            for (const auto& c : chars) {
                int nz = !c.lg.is_zero() + !c.lo.is_zero() + !c.lp.is_zero();
                if (nz == 0) ++zero;
                if (nz == 1) {
                    bool val_ok = (c.lg.is_zero() || c.lg == full) &&
                                  (c.lo.is_zero() || c.lo == full) &&
                                  (c.lp.is_zero() || c.lp == full);
                    if (val_ok) ++singles;
                }
            }
            if (zero != 1 || singles != 3) ok = false;
        } else {
            if (chars.size() != 1) ok = false;
            if (!chars.empty() &&
                !(chars[0].lg.is_zero() && chars[0].lo.is_zero() && chars[0].lp.is_zero()))
                ok = false;
        }
    }
    return ok;
}

// 6. the printed 6x6 matrix
static bool criterion6() {
    graphs::TricoloredGraph a2 = graphs::type_A(2);
    Matrix<LaurentPoly> m = graphs::kl_action(a2, 2, 0, Color::g);
    LaurentPoly two = quantum_integer(2), q3 = quantum_integer(3);
    long pattern[6][6] = {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0, 0}, {0, 9, 1, 1, 1, 1}, {9, 0, 1, 0, 1, 0}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            LaurentPoly want;
            if (pattern[i][j] == 9) want = two * q3;
            else if (pattern[i][j] == 1) want = two;
            if (m(i, j) != want) return false;
        }
    return true;
}

// 7. certificates for every bundled generalized ADE diagram
static bool criterion7() {
    bool ok = true;
    auto all = graphs::bundled_graphs();
    if (all.size() != 22) ok = false;
    for (auto& g : all) {
        if (!graphs::is_admissible(g)) ok = false;
        auto cert = graphs::annihilation_test(g, g.level);
        if (!cert.ok || cert.max_abs_entry != 0) ok = false;
        if (!graphs::spectrum_check(g, g.level, 1e-6).ok) ok = false;
    }
    return ok;
}

// 8. classification: exhaustive (e <= 2), verification (e = 3), groebner data
static bool criterion8() {
    bool ok = true;
    for (int e = 0; e <= 2; ++e) {
        auto rep = classify::verify_theorem(e);
        if (!rep.matches_expected) ok = false;
        if (e == 0 && rep.classes_found != 3) ok = false;
        if (e > 0 && rep.classes_found != 1) ok = false;
    }
    auto r3 = classify::verify_theorem(3);
    if (!r3.matches_expected || r3.classes_found != 8) ok = false;
    if (classify::elimination_polynomial(3) != term(1, 3, 0) - term(5, 2, 0) + term(4, 1, 0))
        ok = false;
    auto basis = buchberger(koornwinder::rewrite_in_xy(3));
    std::vector<BivarPoly> expected{
        term(1, 3, 0) - term(5, 2, 0) + term(4, 1, 0),
        term(1, 1, 1) - term(1, 0, 1) - term(2, 2, 0) + term(2, 1, 0),
        term(1, 0, 2) - term(1, 0, 1) - term(5, 2, 0) + term(6, 1, 0)};
    if (basis != expected) ok = false;
    return ok;
}

// 9. type D counting and the quantum-dimension identity
static bool criterion9() {
    auto r3 = graphs::type_D_counting(3, 1e-8);
    auto r6 = graphs::type_D_counting(6, 1e-8);
    bool ok = r3.rank == 6 && r6.rank == 12 && r3.ok && r6.ok;
    std::vector<double> want{3, 3, 3, 3, 6, 6};
    if (r3.module_qdims.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (std::abs(r3.module_qdims[i] - want[i]) > 1e-8) ok = false;
    return ok;
}

// 10. zigzag algebra
static bool criterion10() {
    bool ok = true;
    LaurentPoly diag = LaurentPoly(1) + LaurentPoly(2, 2) + LaurentPoly(2, 4) + LaurentPoly(1, 6);
    for (int e = 0; e <= 3; ++e) {
        auto cartan = zigzag::graded_cartan(e);
        for (std::size_t i = 0; i < cartan.rows(); ++i)
            if (cartan(i, i) != diag) ok = false;
        if (!zigzag::gram_nondegenerate(e)) ok = false;
        graphs::GraphRep rep = graphs::m_gamma(graphs::type_A(e));
        for (Color u : {Color::g, Color::o, Color::p})
            if (!(zigzag::theta_action(u, e) == rep.M(u))) ok = false;
    }
    for (int e = 0; e <= 2 && ok; ++e) {
        auto basis = zigzag::algebra_basis(e);
        for (const auto& a : basis)
            for (const auto& b : basis) {
                if (!(b.dst == a.src)) continue;
                zigzag::ZigzagElement ea = zigzag::ZigzagElement::mono(a);
                zigzag::ZigzagElement eb = zigzag::ZigzagElement::mono(b);
                zigzag::ZigzagElement ab = zigzag::multiply(ea, eb, e);
                for (const auto& c : basis) {
                    if (!(c.dst == b.src)) continue;
                    zigzag::ZigzagElement ec = zigzag::ZigzagElement::mono(c);
                    if (!(zigzag::multiply(ab, ec, e) ==
                          zigzag::multiply(ea, zigzag::multiply(eb, ec, e), e)))
                        ok = false;
                }
            }
    }
    return ok;
}

// 11. determinism of verify-all
static bool criterion11() {
    verify::Options o;
    o.level = 3;
    auto first = verify::verify_all(o);
    auto second = verify::verify_all(o);
    return first.ok && second.ok && first.report == second.report;
}

int main() {
    Timer total;
    struct Case {
        int num;
        const char* name;
        bool (*fn)();
        double budget;
    };
    std::vector<Case> cases = {
        {1, "polynomial-tables", criterion1, 1.0},
        {2, "root-counting", criterion2, 5.0},
        {3, "hecke-structure", criterion3, 60.0},
        {4, "representation-oracle", criterion4, 120.0},
        {5, "simple-classification", criterion5, 60.0},
        {6, "printed-matrix", criterion6, 10.0},
        {7, "ade-certificates", criterion7, 120.0},
        {8, "classification", criterion8, 120.0},
        {9, "type-d-counting", criterion9, 30.0},
        {10, "zigzag", criterion10, 60.0},
        {11, "determinism", criterion11, 300.0},
    };
    for (const auto& c : cases) {
        Timer t;
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::printf("  exception: %s\n", e.what());
            ok = false;
        }
        report(c.num, c.name, ok, t.seconds(), c.budget);
    }
    std::printf("%s: %d criteria failed, total %.1fs\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures, total.seconds());
    return failures == 0 ? 0 : 1;
}
