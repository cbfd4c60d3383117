#include "trihedral/hecke.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace trihedral {
namespace hecke {

std::string KLLabel::str() const {
    if (unit) return "1";
    std::ostringstream os;
    os << m << "," << n << "," << color_char(right);
    return os.str();
}

FracLaurent HeckeElement::coeff(const KLLabel& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? FracLaurent() : it->second;
}

void HeckeElement::add(const KLLabel& label, const FracLaurent& c) {
    if (c.is_zero()) return;
    if (!label.unit && level_ != level_infinity && label.m + label.n > level_) return;
    auto it = terms_.find(label);
    if (it == terms_.end()) {
        terms_.emplace(label, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    HeckeElement r = *this;
    for (const auto& [l, c] : o.terms_) r.add(l, c);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    HeckeElement r = *this;
    for (const auto& [l, c] : o.terms_) r.add(l, -c);
    return r;
}

HeckeElement HeckeElement::operator*(const FracLaurent& c) const {
    HeckeElement r(level_);
    if (c.is_zero()) return r;
    for (const auto& [l, x] : terms_) r.add(l, x * c);
    return r;
}

std::string HeckeElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*[" << l.str() << "]";
        first = false;
    }
    return os.str();
}

HeckeElement generator(Color u, int level) {
    HeckeElement r(level);
    r.add(KLLabel::rkl(0, 0, u), FracLaurent(LaurentPoly(1)));
    return r;
}

HeckeElement unit_element(int level) {
    HeckeElement r(level);
    r.add(KLLabel::one(), FracLaurent(LaurentPoly(1)));
    return r;
}

namespace {

const LaurentPoly& two() {
    static const LaurentPoly v = quantum_integer(2);
    return v;
}
const LaurentPoly& three_fact() {
    static const LaurentPoly v = quantum_factorial(3);
    return v;
}

using LaurentTerms = std::map<KLLabel, LaurentPoly>;

void laurent_add(LaurentTerms& acc, const KLLabel& l, const LaurentPoly& c, int level) {
    if (c.is_zero()) return;
    if (!l.unit && level != level_infinity && l.m + l.n > level) return;
    auto it = acc.find(l);
    if (it == acc.end()) {
        acc.emplace(l, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// theta_u . label with Laurent bookkeeping; the unit becomes theta_u itself
void gen_left_laurent(Color u, const KLLabel& label, const LaurentPoly& c, int level,
                      LaurentTerms& out) {
    if (label.unit) {
        laurent_add(out, KLLabel::rkl(0, 0, u), c, level);
        return;
    }
    Color lc = label.left_color();
    Color rc = label.right;
    if (u == lc) {
        laurent_add(out, label, c * three_fact(), level);
    } else if (u == rho(lc)) {  // X-type step
        LaurentPoly c2 = c * two();
        laurent_add(out, KLLabel::rkl(label.m + 1, label.n, rc), c2, level);
        if (label.m >= 1) laurent_add(out, KLLabel::rkl(label.m - 1, label.n + 1, rc), c2, level);
        if (label.n >= 1) laurent_add(out, KLLabel::rkl(label.m, label.n - 1, rc), c2, level);
    } else {  // u == rho^{-1}(lc): Y-type step
        LaurentPoly c2 = c * two();
        laurent_add(out, KLLabel::rkl(label.m, label.n + 1, rc), c2, level);
        if (label.n >= 1) laurent_add(out, KLLabel::rkl(label.m + 1, label.n - 1, rc), c2, level);
        if (label.m >= 1) laurent_add(out, KLLabel::rkl(label.m - 1, label.n, rc), c2, level);
    }
}

// word applied from the left to a single label; stays in Z[v,v^-1]
LaurentTerms apply_word(const std::vector<Color>& word, const KLLabel& start, int level) {
    LaurentTerms acc;
    acc.emplace(start, LaurentPoly(1));
    for (Color w : word) {
        LaurentTerms next;
        for (const auto& [l, c] : acc) gen_left_laurent(w, l, c, level, next);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

HeckeElement mult_gen_right(const KLLabel& label, Color u, int level) {
    if (label.unit) throw std::invalid_argument("mult_gen_right on the unit");
    HeckeElement r(level);
    Color rc = label.right;
    FracLaurent f2{two()}, f6{three_fact()};
    if (rc == u) {
        r.add(label, f6);
    } else if (rc == rho(u)) {  // X-type step
        r.add(KLLabel::rkl(label.m + 1, label.n, u), f2);
        if (label.m >= 1) r.add(KLLabel::rkl(label.m - 1, label.n + 1, u), f2);
        if (label.n >= 1) r.add(KLLabel::rkl(label.m, label.n - 1, u), f2);
    } else {  // rc == rho^{-1}(u): Y-type step
        r.add(KLLabel::rkl(label.m, label.n + 1, u), f2);
        if (label.n >= 1) r.add(KLLabel::rkl(label.m + 1, label.n - 1, u), f2);
        if (label.m >= 1) r.add(KLLabel::rkl(label.m - 1, label.n, u), f2);
    }
    return r;
}

HeckeElement mult_gen_left(Color u, const KLLabel& label, int level) {
    if (label.unit) throw std::invalid_argument("mult_gen_left on the unit");
    HeckeElement r(level);
    LaurentTerms acc;
    gen_left_laurent(u, label, LaurentPoly(1), level, acc);
    for (const auto& [l, c] : acc) r.add(l, FracLaurent(c));
    return r;
}

std::vector<BSTerm> bs_expansion(int m, int n, Color u) {
    std::vector<BSTerm> out;
    for (const auto& [kl, d] : fusion::d_coefficients(m, n)) {
        auto [k, l] = kl;
        BSTerm t;
        t.word.reserve(k + l + 1);
        Color c = u;
        t.word.push_back(c);
        for (int i = 0; i < k; ++i) {
            c = rho(c);
            t.word.push_back(c);
        }
        for (int i = 0; i < l; ++i) {
            c = rho(c, -1);
            t.word.push_back(c);
        }
        t.coeff = FracLaurent(LaurentPoly(d), two().pow(k + l));
        out.push_back(std::move(t));
    }
    return out;
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
    if (a.level() != b.level()) throw std::invalid_argument("multiply: level mismatch");
    int level = a.level();
    HeckeElement result(level);
    for (const auto& [la, ca] : a.terms()) {
        if (la.unit) {
            result = result + b * ca;
            continue;
        }
        for (const auto& term : bs_expansion(la.m, la.n, la.right)) {
            FracLaurent pre = ca * term.coeff;
            for (const auto& [lb, cb] : b.terms()) {
                LaurentTerms w = apply_word(term.word, lb, level);
                FracLaurent scale = pre * cb;
                for (const auto& [l, c] : w) result.add(l, scale * FracLaurent(c));
            }
        }
    }
    return result;
}

long dimension(int e) { return 3L * (e + 1) * (e + 2) / 2 + 1; }

std::vector<KLLabel> basis(int e) {
    std::vector<KLLabel> out{KLLabel::one()};
    for (int s = 0; s <= e; ++s)
        for (int m = 0; m <= s; ++m)
            for (Color u : {Color::g, Color::o, Color::p})
                out.push_back(KLLabel::rkl(m, s - m, u));
    return out;
}

namespace {

std::vector<std::vector<KLLabel>> scc_cells(const std::vector<KLLabel>& labels,
                                            const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(labels.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> onstack(n, false);
    std::vector<int> stack;
    int counter = 0, ncomp = 0;
    std::function<void(int)> dfs = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        onstack[v] = true;
        for (int w : adj[v]) {
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (onstack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                onstack[w] = false;
                comp[w] = ncomp;
                if (w == v) break;
            }
            ++ncomp;
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] < 0) dfs(v);
    std::vector<std::vector<KLLabel>> cells(ncomp);
    for (int v = 0; v < n; ++v) cells[comp[v]].push_back(labels[v]);
    for (auto& c : cells) std::sort(c.begin(), c.end());
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cells;
}

}  // namespace

CellDecomposition cells(int e) {
    std::vector<KLLabel> labels = basis(e);
    int n = static_cast<int>(labels.size());
    std::map<KLLabel, int> idx;
    for (int i = 0; i < n; ++i) idx[labels[i]] = i;

    // one-step containments; structure constants are in N[v,v^-1], so there is
    // no cancellation and the two-sided preorder is generated by these edges
    std::vector<std::vector<int>> left_adj(n), right_adj(n), two_adj(n);
    for (int zi = 0; zi < n; ++zi) {
        HeckeElement z(e);
        z.add(labels[zi], FracLaurent(LaurentPoly(1)));
        for (int yi = 0; yi < n; ++yi) {
            HeckeElement y(e);
            y.add(labels[yi], FracLaurent(LaurentPoly(1)));
            HeckeElement prod = multiply(z, y);
            for (const auto& [l, c] : prod.terms()) {
                int li = idx.at(l);
                left_adj[yi].push_back(li);   // l >=_L y
                right_adj[zi].push_back(li);  // l >=_R z
                two_adj[yi].push_back(li);
                two_adj[zi].push_back(li);
            }
        }
    }

    CellDecomposition out;
    out.left = scc_cells(labels, left_adj);
    out.right = scc_cells(labels, right_adj);
    out.two_sided = scc_cells(labels, two_adj);
    return out;
}

}  // namespace hecke
}  // namespace trihedral
