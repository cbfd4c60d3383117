#include "trihedral/reps.hpp"

#include <stdexcept>

#include "trihedral/koornwinder.hpp"

namespace trihedral {
namespace reps {

namespace {

const LaurentPoly& three_fact() {
    static const LaurentPoly v = quantum_factorial(3);
    return v;
}

bool valid_value(const LaurentPoly& l) { return l.is_zero() || l == three_fact(); }

}  // namespace

bool character_is_rep(const Character& c, int e) {
    // quadratic relation forces each value into {0, [3]!}
    for (Color u : {Color::g, Color::o, Color::p})
        if (!valid_value(c.value(u))) return false;
    // braid-like relation: lambda_u^2 lambda_v = lambda_u^2 lambda_w
    for (Color u : {Color::g, Color::o, Color::p}) {
        LaurentPoly lu = c.value(u);
        if (lu * lu * c.value(rho(u)) != lu * lu * c.value(rho(u, -1))) return false;
    }
    // must kill the vanishing ideal generators; extend multiplicatively over
    // the Bott-Samelson words
    for (int m = 0; m <= e + 1; ++m) {
        int n = e + 1 - m;
        for (Color u : {Color::g, Color::o, Color::p}) {
            FracLaurent total;
            for (const auto& term : hecke::bs_expansion(m, n, u)) {
                FracLaurent val(LaurentPoly(1));
                for (Color w : term.word) val *= FracLaurent(c.value(w));
                total += term.coeff * val;
            }
            if (!total.is_zero()) return false;
        }
    }
    return true;
}

std::vector<Character> admitted_characters(int e) {
    std::vector<Character> out;
    const LaurentPoly zero, full = three_fact();
    for (int bits = 0; bits < 8; ++bits) {
        Character c{(bits & 1) ? full : zero, (bits & 2) ? full : zero, (bits & 4) ? full : zero};
        if (character_is_rep(c, e)) out.push_back(c);
    }
    return out;
}

Matrix<Cplx> ThreeDimRep::matrix(Color u, double v) const {
    double q2 = quantum_integer(2).eval(v);
    double q3 = quantum_integer(3).eval(v);
    Matrix<Cplx> m(3, 3, Cplx(0));
    int row = static_cast<int>(u);
    Cplx zb = std::conj(z);
    // row pattern ([3], zbar, z) cyclically shifted so the diagonal carries [3]
    m(row, row) = q3;
    m(row, (row + 1) % 3) = zb;
    m(row, (row + 2) % 3) = z;
    return m * Cplx(q2);
}

Matrix<Cplx> ThreeDimRep::act(const hecke::KLLabel& label, double v) const {
    if (label.unit) return Matrix<Cplx>::identity(3, Cplx(1));
    Matrix<Cplx> total(3, 3, Cplx(0));
    for (const auto& term : hecke::bs_expansion(label.m, label.n, label.right)) {
        Matrix<Cplx> prod = Matrix<Cplx>::identity(3, Cplx(1));
        for (Color w : term.word) prod = matrix(w, v) * prod;
        total = total + prod * Cplx(term.coeff.eval(v));
    }
    return total;
}

Matrix<Cplx> ThreeDimRep::act(const hecke::HeckeElement& x, double v) const {
    Matrix<Cplx> total(3, 3, Cplx(0));
    for (const auto& [l, c] : x.terms()) total = total + act(l, v) * Cplx(c.eval(v));
    return total;
}

ThreeDimRep three_dim(Cplx z) { return ThreeDimRep{z}; }

namespace {

double matrix_norm(const Matrix<Cplx>& m) {
    double r = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}

}  // namespace

bool three_dim_is_rep(Cplx z, int e, double tol) {
    ThreeDimRep rep = three_dim(z);
    for (double v : {1.3, 2.0}) {
        for (int m = 0; m <= e + 1; ++m) {
            int n = e + 1 - m;
            for (Color u : {Color::g, Color::o, Color::p}) {
                if (matrix_norm(rep.act(hecke::KLLabel::rkl(m, n, u), v)) > tol * 100) return false;
            }
        }
    }
    return true;
}

bool equivalent(Cplx z, Cplx z2, double tol) {
    const Cplx zeta = std::polar(1.0, 2.0 * M_PI / 3.0);
    int sign = 0;
    if (std::abs(z2 - z) < tol) return true;
    if (std::abs(z2 - zeta * z) < tol) sign = 1;
    else if (std::abs(z2 - std::conj(zeta) * z) < tol) sign = -1;
    else return false;
    // certify with the diagonal base change D = diag(zeta^-s, 1, zeta^s):
    // D M_z(u) D^-1 == M_{z'}(u) for all generators
    Cplx d1 = (sign == 1) ? std::conj(zeta) : zeta;
    Cplx d3 = (sign == 1) ? zeta : std::conj(zeta);
    ThreeDimRep a = three_dim(z), b = three_dim(z2);
    for (double v : {1.3, 2.0}) {
        for (Color u : {Color::g, Color::o, Color::p}) {
            Matrix<Cplx> lhs = a.matrix(u, v), rhs = b.matrix(u, v);
            Cplx d[3] = {d1, Cplx(1), d3};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    Cplx conj_entry = d[i] * lhs(i, j) / d[j];
                    if (std::abs(conj_entry - rhs(i, j)) > 1e-8)
                        throw std::logic_error("equivalent: base-change certificate failed");
                }
        }
    }
    return true;
}

bool is_simple(Cplx z, double tol) { return std::abs(z) > tol; }

SimpleTable simple_table(int e) {
    SimpleTable t;
    long te = koornwinder::t_number(e);
    if (e % 3 == 0) {
        t.one_dim = 4;
        t.three_dim = (te - 1) / 3;
    } else {
        t.one_dim = 1;
        t.three_dim = te / 3;
    }
    t.sum_of_squares = t.one_dim + 9 * t.three_dim;
    if (t.sum_of_squares != hecke::dimension(e))
        throw std::logic_error("simple_table: sum of squares mismatch");
    return t;
}

}  // namespace reps
}  // namespace trihedral
