#include "trihedral/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "trihedral/classify.hpp"
#include "trihedral/graphs.hpp"
#include "trihedral/hecke.hpp"
#include "trihedral/koornwinder.hpp"
#include "trihedral/reps.hpp"
#include "trihedral/zigzag.hpp"

namespace trihedral {
namespace verify {

namespace {

struct Table {
    std::ostringstream os;
    bool all_ok = true;
    void line(const std::string& name, bool ok, const std::string& detail = "") {
        os << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) os << ": " << detail;
        os << "\n";
        if (!ok) all_ok = false;
    }
};

bool hecke_is_laurent_nonneg(const hecke::HeckeElement& x) {
    for (const auto& [l, c] : x.terms())
        if (!c.is_laurent() || !c.as_laurent().nonneg_coeffs()) return false;
    return true;
}

}  // namespace

Outcome verify_all(const Options& opt) {
    const int e = opt.level;
    Table t;

    // polynomials: recursion agrees with the fusion-coefficient definition
    {
        bool ok = true;
        for (int s = 0; s <= e + 1 && ok; ++s)
            for (int m = 0; m <= s && ok; ++m) {
                BivarPoly p = koornwinder::chebyshev_sl3(m, s - m);
                for (const auto& [kl, d] : fusion::d_coefficients(m, s - m))
                    if (p.coeff(kl.first, kl.second) != d) ok = false;
                std::size_t nd = fusion::d_coefficients(m, s - m).size();
                if (p.coeffs().size() != nd) ok = false;
            }
        t.line("chebyshev-recursion-vs-inversion", ok);
    }

    // vanishing set: count, vanishing, separation
    {
        auto pts = koornwinder::vanishing_set(e);
        bool count_ok = static_cast<long>(pts.size()) == koornwinder::t_number(e);
        bool vanish_ok = true;
        for (const auto& gen : koornwinder::vanishing_generators(e))
            for (const auto& p : pts)
                if (std::abs(gen.eval(p.z(), std::conj(p.z()))) > 1e-8) vanish_ok = false;
        bool sep_ok = true;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (std::abs(pts[i].z() - pts[j].z()) <= 1e-6) sep_ok = false;
        t.line("vanishing-set", count_ok && vanish_ok && sep_ok,
               "t_e=" + std::to_string(pts.size()));
    }

    // hecke dimension and cells
    {
        bool dim_ok = hecke::dimension(e) == 3 * koornwinder::t_number(e) + 1;
        auto cd = hecke::cells(e);
        long te = koornwinder::t_number(e);
        bool cells_ok = true;
        // trivial cell
        long trivial = 0, left_te = 0;
        for (const auto& c : cd.left) {
            if (c.size() == 1 && c[0].unit) ++trivial;
            if (static_cast<long>(c.size()) == te) ++left_te;
        }
        if (e >= 1) {
            cells_ok = trivial == 1 && left_te == 3 && cd.left.size() == 4;
            bool two_ok = cd.two_sided.size() == 2;
            for (const auto& c : cd.two_sided)
                if (!(c.size() == 1 || static_cast<long>(c.size()) == 3 * te)) two_ok = false;
            cells_ok = cells_ok && two_ok && cd.right.size() == 4;
        } else {
            // degenerate level 0: generators annihilate each other, so the
            // two-sided cells are three singletons as well
            cells_ok = cd.left.size() == 4 && cd.right.size() == 4 && cd.two_sided.size() == 4;
        }
        t.line("hecke-dimension-cells", dim_ok && cells_ok,
               "dim=" + std::to_string(hecke::dimension(e)));
    }

    // associativity: exhaustive for e <= 2, deterministic sample otherwise
    {
        auto labels = hecke::basis(std::min(e, 3));
        int lvl = std::min(e, 3);
        bool ok = true;
        auto mk = [&](const hecke::KLLabel& l) {
            hecke::HeckeElement x(lvl);
            x.add(l, FracLaurent(LaurentPoly(1)));
            return x;
        };
        if (lvl <= 2) {
            for (const auto& a : labels)
                for (const auto& b : labels)
                    for (const auto& c : labels) {
                        auto lhs = hecke::multiply(hecke::multiply(mk(a), mk(b)), mk(c));
                        auto rhs = hecke::multiply(mk(a), hecke::multiply(mk(b), mk(c)));
                        if (!(lhs == rhs)) ok = false;
                    }
        } else {
            std::mt19937 rng(12345);
            for (int trial = 0; trial < 200; ++trial) {
                const auto& a = labels[rng() % labels.size()];
                const auto& b = labels[rng() % labels.size()];
                const auto& c = labels[rng() % labels.size()];
                auto lhs = hecke::multiply(hecke::multiply(mk(a), mk(b)), mk(c));
                auto rhs = hecke::multiply(mk(a), hecke::multiply(mk(b), mk(c)));
                if (!(lhs == rhs)) ok = false;
            }
        }
        t.line("hecke-associativity", ok, lvl <= 2 ? "exhaustive" : "200 random triples");
    }

    // positivity of structure constants (exhaustive up to level 4)
    {
        int lvl = std::min(e, 4);
        auto labels = hecke::basis(lvl);
        bool ok = true;
        for (const auto& a : labels)
            for (const auto& b : labels) {
                hecke::HeckeElement xa(lvl), xb(lvl);
                xa.add(a, FracLaurent(LaurentPoly(1)));
                xb.add(b, FracLaurent(LaurentPoly(1)));
                if (!hecke_is_laurent_nonneg(hecke::multiply(xa, xb))) ok = false;
            }
        t.line("hecke-positivity", ok, "level " + std::to_string(lvl) + " exhaustive");
    }

    // representation oracle: M_Gamma symbolic and M_z numeric homomorphisms
    {
        int lvl = std::min(e, 3);
        auto labels = hecke::basis(lvl);
        graphs::TricoloredGraph gA = graphs::type_A(lvl);
        bool ok = true;
        auto act = [&](const hecke::HeckeElement& x) {
            std::size_t n = gA.size();
            Matrix<LaurentPoly> total(n, n);
            for (const auto& [l, c] : x.terms()) {
                Matrix<LaurentPoly> m =
                    l.unit ? Matrix<LaurentPoly>::identity(n, LaurentPoly(1))
                           : graphs::kl_action(gA, l.m, l.n, l.right);
                total = total + m * c.as_laurent();
            }
            return total;
        };
        for (const auto& a : labels)
            for (const auto& b : labels) {
                hecke::HeckeElement xa(lvl), xb(lvl);
                xa.add(a, FracLaurent(LaurentPoly(1)));
                xb.add(b, FracLaurent(LaurentPoly(1)));
                if (!(act(hecke::multiply(xa, xb)) == act(xa) * act(xb))) ok = false;
            }
        t.line("graph-rep-homomorphism", ok, "symbolic, level " + std::to_string(lvl));

        bool okz = true;
        for (const auto& pt : koornwinder::vanishing_set(lvl)) {
            reps::ThreeDimRep rep = reps::three_dim(pt.z());
            for (double v : {1.3, 2.0}) {
                for (const auto& a : labels)
                    for (const auto& b : labels) {
                        hecke::HeckeElement xa(lvl), xb(lvl);
                        xa.add(a, FracLaurent(LaurentPoly(1)));
                        xb.add(b, FracLaurent(LaurentPoly(1)));
                        Matrix<Cplx> lhs = rep.act(hecke::multiply(xa, xb), v);
                        Matrix<Cplx> rhs = rep.act(xa, v) * rep.act(xb, v);
                        for (int i = 0; i < 3; ++i)
                            for (int j = 0; j < 3; ++j)
                                if (std::abs(lhs(i, j) - rhs(i, j)) > 1e-8 *
                                        std::max(1.0, std::abs(rhs(i, j))))
                                    okz = false;
                    }
            }
        }
        t.line("three-dim-rep-homomorphism", okz, "numeric at v in {1.3, 2.0}");
    }

    // simple classification
    {
        auto st = reps::simple_table(e);
        bool ok = st.sum_of_squares == hecke::dimension(e);
        long chars = static_cast<long>(reps::admitted_characters(e).size());
        ok = ok && chars == st.one_dim;
        t.line("simple-table", ok,
               std::to_string(st.one_dim) + " one-dim, " + std::to_string(st.three_dim) +
                   " three-dim, sum " + std::to_string(st.sum_of_squares));
    }

    // graph certificates at this level
    {
        bool ok = true;
        std::ostringstream names;
        for (auto& g : graphs::bundled_graphs()) {
            if (g.level != e) continue;
            names << g.name << " ";
            if (!graphs::is_admissible(g)) ok = false;
            if (!graphs::annihilation_test(g, g.level).ok) ok = false;
            if (!graphs::spectrum_check(g, g.level).ok) ok = false;
        }
        t.line("graph-certificates", ok, names.str());
    }

    // type D counting
    if (e > 0 && e % 3 == 0) {
        auto rep = graphs::type_D_counting(e);
        t.line("type-D-counting", rep.ok, "rank " + std::to_string(rep.rank));
    }

    // classification
    if (e <= 2) {
        auto rep = classify::verify_theorem(e);
        t.line("classification-exhaustive", rep.matches_expected,
               std::to_string(rep.classes_found) + " classes");
    } else if (e == 3) {
        auto rep = classify::verify_theorem(3);
        t.line("classification-verification", rep.matches_expected,
               std::to_string(rep.classes_found) + " classes incl. special solution");
        BivarPoly q = classify::elimination_polynomial(3);
        BivarPoly want = BivarPoly(Rat(1), 3, 0) - BivarPoly(Rat(5), 2, 0) + BivarPoly(Rat(4), 1, 0);
        t.line("elimination-polynomial", q == want, q.str("x", "y"));
    }

    // zigzag
    {
        int lvl = std::min(e, 3);
        bool dims_ok = true;
        LaurentPoly diag = LaurentPoly(1) + LaurentPoly(2, 2) + LaurentPoly(2, 4) + LaurentPoly(1, 6);
        auto cartan = zigzag::graded_cartan(lvl);
        for (std::size_t i = 0; i < cartan.rows(); ++i)
            if (cartan(i, i) != diag) dims_ok = false;
        bool gram_ok = zigzag::gram_nondegenerate(std::min(lvl, 3));
        bool theta_ok = true;
        graphs::GraphRep mg = graphs::m_gamma(graphs::type_A(lvl));
        for (Color u : {Color::g, Color::o, Color::p})
            if (!(zigzag::theta_action(u, lvl) == mg.M(u))) theta_ok = false;
        t.line("zigzag", dims_ok && gram_ok && theta_ok,
               "level " + std::to_string(lvl) + " cartan/gram/theta");
    }

    Outcome out;
    out.ok = t.all_ok;
    out.report = t.os.str();
    return out;
}

}  // namespace verify
}  // namespace trihedral
