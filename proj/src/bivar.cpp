#include "trihedral/bivar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace trihedral {

Rat BivarPoly::coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Rat(0) : it->second;
}

bool BivarPoly::is_integral() const {
    for (const auto& [m, c] : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

int BivarPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : coeffs_) d = std::max(d, m.first + m.second);
    return d;
}

bool BivarPoly::depends_on_second() const {
    for (const auto& [m, c] : coeffs_)
        if (m.second > 0) return true;
    return false;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [m, c] : o.coeffs_) {
        Rat& t = coeffs_[m];
        t += c;
        if (t == 0) coeffs_.erase(m);
    }
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [m, c] : o.coeffs_) {
        Rat& t = coeffs_[m];
        t -= c;
        if (t == 0) coeffs_.erase(m);
    }
    return *this;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [m, c] : coeffs_) r.coeffs_[m] = -c;
    return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (const auto& [m1, c1] : coeffs_)
        for (const auto& [m2, c2] : o.coeffs_) {
            Mono m{m1.first + m2.first, m1.second + m2.second};
            Rat& t = r.coeffs_[m];
            t += c1 * c2;
        }
    for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
        it = (it->second == 0) ? r.coeffs_.erase(it) : std::next(it);
    return r;
}

BivarPoly BivarPoly::operator*(const Rat& s) const {
    BivarPoly r;
    if (s == 0) return r;
    for (const auto& [m, c] : coeffs_) r.coeffs_[m] = c * s;
    return r;
}

BivarPoly BivarPoly::shifted(int di, int dj) const {
    BivarPoly r;
    for (const auto& [m, c] : coeffs_) r.coeffs_[{m.first + di, m.second + dj}] = c;
    return r;
}

Cplx BivarPoly::eval(Cplx x, Cplx y) const {
    Cplx r = 0.0;
    for (const auto& [m, c] : coeffs_)
        r += c.get_d() * std::pow(x, m.first) * std::pow(y, m.second);
    return r;
}

namespace {

// lex with x < y: the y-exponent dominates
bool mono_less(const Mono& a, const Mono& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
}

Mono leading_mono(const BivarPoly& p) {
    Mono best{-1, -1};
    bool have = false;
    for (const auto& [m, c] : p.coeffs()) {
        if (!have || mono_less(best, m)) {
            best = m;
            have = true;
        }
    }
    return best;
}

bool divides(const Mono& a, const Mono& b) {
    return a.first <= b.first && a.second <= b.second;
}

}  // namespace

BivarPoly BivarPoly::primitive() const {
    if (is_zero()) return *this;
    Int lcm = 1;
    for (const auto& [m, c] : coeffs_)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    Int gcd = 0;
    for (const auto& [m, c] : coeffs_) {
        Int n = Int(c.get_num()) * (lcm / Int(c.get_den()));
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale = Rat(lcm) / Rat(gcd);
    if (coeff(leading_mono(*this).first, leading_mono(*this).second) < 0) scale = -scale;
    return *this * scale;
}

std::string BivarPoly::str(const std::string& xname, const std::string& yname) const {
    if (coeffs_.empty()) return "0";
    std::vector<std::pair<Mono, Rat>> terms(coeffs_.begin(), coeffs_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && (m.first != 0 || m.second != 0);
        if (!unit) os << a.get_str();
        if (m.first != 0) {
            os << xname;
            if (m.first != 1) os << "^" << m.first;
        }
        if (m.second != 0) {
            os << yname;
            if (m.second != 1) os << "^" << m.second;
        }
        first = false;
    }
    return os.str();
}

BivarPoly reduce_mod(const BivarPoly& p, const std::vector<BivarPoly>& basis, MonomialOrder) {
    BivarPoly rem;
    BivarPoly work = p;
    while (!work.is_zero()) {
        Mono lm = leading_mono(work);
        Rat lc = work.coeff(lm.first, lm.second);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            Mono gm = leading_mono(g);
            if (!divides(gm, lm)) continue;
            Rat f = lc / g.coeff(gm.first, gm.second);
            work -= g.shifted(lm.first - gm.first, lm.second - gm.second) * f;
            reduced = true;
            break;
        }
        if (!reduced) {
            BivarPoly t(lc, lm.first, lm.second);
            rem += t;
            work -= t;
        }
    }
    return rem;
}

std::vector<BivarPoly> buchberger(std::vector<BivarPoly> gens, MonomialOrder order) {
    std::vector<BivarPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return {};

    // Buchberger pair loop
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        Mono mi = leading_mono(basis[i]), mj = leading_mono(basis[j]);
        Mono l{std::max(mi.first, mj.first), std::max(mi.second, mj.second)};
        // product criterion
        if (mi.first + mj.first == l.first && mi.second + mj.second == l.second) continue;
        Rat ci = basis[i].coeff(mi.first, mi.second), cj = basis[j].coeff(mj.first, mj.second);
        BivarPoly s = basis[i].shifted(l.first - mi.first, l.second - mi.second) * (Rat(1) / ci) -
                      basis[j].shifted(l.first - mj.first, l.second - mj.second) * (Rat(1) / cj);
        BivarPoly r = reduce_mod(s, basis, order);
        if (!r.is_zero()) {
            for (size_t k = 0; k < basis.size(); ++k) pairs.push_back({k, basis.size()});
            basis.push_back(r);
        }
    }

    // minimalize: drop generators whose leading monomial is divisible by another's
    std::vector<BivarPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        Mono mi = leading_mono(basis[i]);
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            Mono mj = leading_mono(basis[j]);
            if (divides(mj, mi) && mj != mi) { redundant = true; break; }
            if (mj == mi && j < i) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // inter-reduce tails until stable, normalize, sort
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<BivarPoly> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Mono lm = leading_mono(minimal[i]);
            BivarPoly lead(minimal[i].coeff(lm.first, lm.second), lm.first, lm.second);
            BivarPoly r = lead + reduce_mod(minimal[i] - lead, others, order);
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }
    for (auto& g : minimal) g = g.primitive();
    std::sort(minimal.begin(), minimal.end(), [](const BivarPoly& a, const BivarPoly& b) {
        return mono_less(leading_mono(a), leading_mono(b));
    });
    return minimal;
}

}  // namespace trihedral
