#include "trihedral/zigzag.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "trihedral/graphs.hpp"

namespace trihedral {
namespace zigzag {

Letter vertex_letter(int m, int n) {
    return static_cast<Letter>(static_cast<int>(fusion::central_character(m, n)));
}

Letter next_letter(Letter l) { return static_cast<Letter>((static_cast<int>(l) + 1) % 3); }
Letter prev_letter(Letter l) { return static_cast<Letter>((static_cast<int>(l) + 2) % 3); }

char letter_char(Letter l) { return l == Letter::x ? 'x' : (l == Letter::y ? 'y' : 'z'); }

int PathMonomial::degree() const {
    switch (kind) {
        case MonKind::Idem: return 0;
        case MonKind::Li:
        case MonKind::Lj:
        case MonKind::P: return 2;
        case MonKind::LiLj:
        case MonKind::LiLk:
        case MonKind::PLi: return 4;
        case MonKind::Omega: return 6;
    }
    return 0;
}

std::string PathMonomial::str() const {
    std::ostringstream os;
    Letter i = vertex_letter(src.m, src.n);
    char ci = letter_char(i), cj = letter_char(next_letter(i)), ck = letter_char(prev_letter(i));
    os << "[" << src.m << "," << src.n << "->" << dst.m << "," << dst.n << ":";
    switch (kind) {
        case MonKind::Idem: os << "1"; break;
        case MonKind::Li: os << "l" << ci; break;
        case MonKind::Lj: os << "l" << cj; break;
        case MonKind::LiLj: os << "l" << ci << ".l" << cj; break;
        case MonKind::LiLk: os << "l" << ci << ".l" << ck; break;
        case MonKind::Omega: os << "l" << ci << "^2.l" << ck; break;
        case MonKind::P: os << "p"; break;
        case MonKind::PLi: os << "p.l" << ci; break;
    }
    os << "]";
    return os.str();
}

ZigzagElement ZigzagElement::mono(const PathMonomial& m, const Rat& c) {
    ZigzagElement e;
    e.add(m, c);
    return e;
}

void ZigzagElement::add(const PathMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ZigzagElement ZigzagElement::operator+(const ZigzagElement& o) const {
    ZigzagElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

ZigzagElement ZigzagElement::operator-(const ZigzagElement& o) const {
    ZigzagElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, -c);
    return r;
}

ZigzagElement ZigzagElement::operator*(const Rat& c) const {
    ZigzagElement r;
    if (c == 0) return r;
    for (const auto& [m, x] : terms_) r.add(m, x * c);
    return r;
}

std::string ZigzagElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str() << "*" << m.str();
        first = false;
    }
    return os.str();
}

bool adjacent_weights(const Weight& a, const Weight& b) {
    int dm = a.m - b.m, dn = a.n - b.n;
    static const int steps[6][2] = {{1, 0}, {-1, 0}, {-1, 1}, {1, -1}, {0, -1}, {0, 1}};
    for (auto& s : steps)
        if (dm == s[0] && dn == s[1]) return true;
    return false;
}

std::vector<PathMonomial> normal_basis(const Weight& v1, const Weight& v2, int e) {
    if (v1.m < 0 || v1.n < 0 || v1.m + v1.n > e || v2.m < 0 || v2.n < 0 || v2.m + v2.n > e)
        throw std::invalid_argument("normal_basis: vertex outside level");
    std::vector<PathMonomial> out;
    if (v1 == v2) {
        for (MonKind k : {MonKind::Idem, MonKind::Li, MonKind::Lj, MonKind::LiLj, MonKind::LiLk,
                          MonKind::Omega})
            out.push_back({v1, v2, k});
    } else if (adjacent_weights(v1, v2)) {
        out.push_back({v1, v2, MonKind::P});
        out.push_back({v1, v2, MonKind::PLi});
    }
    return out;
}

std::vector<PathMonomial> algebra_basis(int e) {
    std::vector<Weight> verts;
    for (int s = 0; s <= e; ++s)
        for (int m = 0; m <= s; ++m) verts.push_back({m, s - m});
    std::vector<PathMonomial> out;
    for (const auto& v1 : verts)
        for (const auto& v2 : verts)
            for (const auto& m : normal_basis(v1, v2, e)) out.push_back(m);
    return out;
}

namespace {

// Loop algebra at a vertex of letter i (successor j, predecessor k), basis
// (1, l_i, l_j, l_i l_j, l_i l_k, omega); reduction comes from the symmetric
// function relations e1 = e2 = e3 = 0 of the three loops.
using LoopVec = std::array<Rat, 6>;

LoopVec loop_zero() { return {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}; }

// multiply basis element idx by a local degree-1 generator (0 = l_i, 1 = l_j)
LoopVec loop_gen_mult(int idx, int gen) {
    LoopVec r = loop_zero();
    if (gen == 0) {  // times l_i
        switch (idx) {
            case 0: r[1] = 1; break;
            case 1: r[3] = -1; r[4] = -1; break;  // l_i^2 = -l_il_j - l_il_k
            case 2: r[3] = 1; break;              // l_j l_i
            case 3: r[5] = -1; break;             // l_i^2 l_j = -omega
            case 4: r[5] = 1; break;              // l_i^2 l_k = omega
            default: break;
        }
    } else {  // times l_j
        switch (idx) {
            case 0: r[2] = 1; break;
            case 1: r[3] = 1; break;
            case 2: r[4] = 1; break;   // l_j^2 = l_i l_k
            case 3: r[5] = 1; break;   // l_i l_j^2 = omega
            case 4: break;             // l_i l_j l_k = 0
            default: break;
        }
    }
    return r;
}

// multiply basis element idx by a GLOBAL letter t at a vertex of letter i
LoopVec loop_letter_mult(Letter i, int idx, Letter t) {
    int rel = ((static_cast<int>(t) - static_cast<int>(i)) % 3 + 3) % 3;
    if (rel == 0) return loop_gen_mult(idx, 0);
    if (rel == 1) return loop_gen_mult(idx, 1);
    // l_k = -l_i - l_j
    LoopVec a = loop_gen_mult(idx, 0), b = loop_gen_mult(idx, 1);
    LoopVec r = loop_zero();
    for (int t2 = 0; t2 < 6; ++t2) r[t2] = -a[t2] - b[t2];
    return r;
}

// generator words (in local generators 0 = l_i, 1 = l_j) for the loop basis
const std::vector<int>& loop_word(int idx) {
    static const std::vector<int> words[6] = {{}, {0}, {1}, {0, 1}, {1, 1}, {1, 1, 0}};
    return words[idx];
}

LoopVec loop_times_loop(int idxa, int idxb) {
    LoopVec acc = loop_zero();
    acc[idxa] = 1;
    for (int gen : loop_word(idxb)) {
        LoopVec next = loop_zero();
        for (int t = 0; t < 6; ++t) {
            if (acc[t] == 0) continue;
            LoopVec r = loop_gen_mult(t, gen);
            for (int s = 0; s < 6; ++s) next[s] += acc[t] * r[s];
        }
        acc = next;
    }
    return acc;
}

struct ArrowState {
    Rat coef;
    int eps;  // number of source loops l_src attached, 0 or 1; >= 2 means dead
};

// push a single global letter t (a dst-side loop) through the arrow with the
// given source/destination letters: l_dst p = -p l_src, l_src p = p l_src,
// l_third p = 0
bool push_letter(Letter src, Letter dst, Letter t, ArrowState& st) {
    if (t == dst) {
        st.coef = -st.coef;
    } else if (t == src) {
        // sign +1
    } else {
        return false;
    }
    st.eps += 1;
    return st.eps <= 1;
}

}  // namespace

namespace {

ZigzagElement mono_mult(const PathMonomial& a, const PathMonomial& b) {
    ZigzagElement out;
    if (!(a.src == b.dst)) return out;  // not composable
    const Weight u = b.src, v = b.dst, w = a.dst;
    const Letter lu = vertex_letter(u.m, u.n);
    const Letter lv = vertex_letter(v.m, v.n);
    const Letter lw = vertex_letter(w.m, w.n);

    if (a.is_loop() && b.is_loop()) {
        LoopVec r = loop_times_loop(static_cast<int>(a.kind), static_cast<int>(b.kind));
        for (int t = 0; t < 6; ++t)
            if (r[t] != 0) out.add({u, u, static_cast<MonKind>(t)}, r[t]);
        return out;
    }

    if (a.is_loop() && !b.is_loop()) {
        // loop at v after arrow u -> v: push the loop's letters to the source
        ArrowState st{Rat(1), b.kind == MonKind::PLi ? 1 : 0};
        // local letters of the loop word at v
        for (int gen : loop_word(static_cast<int>(a.kind))) {
            Letter t = (gen == 0) ? lv : next_letter(lv);
            if (!push_letter(lu, lv, t, st)) return out;
        }
        out.add({u, v, st.eps ? MonKind::PLi : MonKind::P}, st.coef);
        return out;
    }

    if (!a.is_loop() && b.is_loop()) {
        // arrow v -> w after loop at v: p (s . L), then p maps the loop part;
        // s is either the idempotent or the local l_i at v
        int sidx = (a.kind == MonKind::PLi) ? 1 : 0;
        LoopVec sl = loop_times_loop(sidx, static_cast<int>(b.kind));
        for (int t = 0; t < 6; ++t) {
            if (sl[t] == 0) continue;
            // p . (loop basis t at v): only 1, l_i, l_j survive
            if (t == 0) {
                out.add({v, w, MonKind::P}, sl[t]);
            } else if (t == 1) {
                out.add({v, w, MonKind::PLi}, sl[t]);
            } else if (t == 2) {
                // l_j with j = next(lv): p l_dst = -p l_src, p l_third = 0
                if (next_letter(lv) == lw) out.add({v, w, MonKind::PLi}, -sl[t]);
            }
        }
        return out;
    }

    // arrow after arrow: u -> v -> w
    ArrowState st{Rat(1), 0};
    if (a.kind == MonKind::PLi) {
        // s2 = l_{lv} is a dst-side loop of the first arrow: push it
        if (!push_letter(lu, lv, lv, st)) return out;
    }
    int src_loops = st.eps + (b.kind == MonKind::PLi ? 1 : 0);
    if (src_loops >= 2) return out;
    if (w == u) {
        // p_{i|j|i} = l_i l_j at u, times the accumulated source loops
        int pair_idx = (lv == next_letter(lu)) ? 3 : 4;  // l_u l_v in the local basis
        LoopVec r = loop_zero();
        r[pair_idx] = st.coef;
        if (src_loops == 1) {
            LoopVec rr = loop_zero();
            for (int t = 0; t < 6; ++t) {
                if (r[t] == 0) continue;
                LoopVec m = loop_gen_mult(t, 0);  // times l_u
                for (int s = 0; s < 6; ++s) rr[s] += r[t] * m[s];
            }
            r = rr;
        }
        for (int t = 0; t < 6; ++t)
            if (r[t] != 0) out.add({u, u, static_cast<MonKind>(t)}, r[t]);
        return out;
    }
    if (lw == lu) return out;  // distinct vertices of equal color: never adjacent
    if (!adjacent_weights(u, w)) return out;  // leaving the face is zero
    // zigzig: p_{i|j|k} = p_{i|k} l_i ; with an extra source loop it dies
    if (src_loops == 1) return out;  // p l_i l_i component: degree too high
    out.add({u, w, MonKind::PLi}, st.coef);
    return out;
}

}  // namespace

ZigzagElement multiply(const ZigzagElement& a, const ZigzagElement& b, int e) {
    (void)e;  // elements already live inside the level
    ZigzagElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            ZigzagElement prod = mono_mult(ma, mb);
            for (const auto& [m, c] : prod.terms()) out.add(m, c * ca * cb);
        }
    return out;
}

Rat trace(const ZigzagElement& a) {
    Rat r(0);
    for (const auto& [m, c] : a.terms())
        if (m.kind == MonKind::Omega) r += c;
    return r;
}

bool gram_nondegenerate(int e) {
    auto basis = algebra_basis(e);
    std::size_t n = basis.size();
    std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram[i][j] = trace(multiply(ZigzagElement::mono(basis[i]),
                                        ZigzagElement::mono(basis[j]), e));
    // rational Gaussian elimination
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && gram[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(gram[piv], gram[rank]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            if (gram[r][col] == 0) continue;
            Rat f = gram[r][col] / gram[rank][col];
            for (std::size_t c2 = col; c2 < n; ++c2) gram[r][c2] -= f * gram[rank][c2];
        }
        ++rank;
    }
    return rank == n;
}

namespace {

std::vector<Weight> ordered_vertices(int e) {
    // same global order as the type_A graph: color blocks x, y, z, each by
    // (total degree, m)
    std::vector<Weight> by_letter[3];
    for (int s = 0; s <= e; ++s)
        for (int m = 0; m <= s; ++m)
            by_letter[static_cast<int>(vertex_letter(m, s - m))].push_back({m, s - m});
    std::vector<Weight> out;
    for (auto& v : by_letter)
        for (const auto& w : v) out.push_back(w);
    return out;
}

}  // namespace

Matrix<LaurentPoly> graded_cartan(int e) {
    auto verts = ordered_vertices(e);
    std::size_t n = verts.size();
    Matrix<LaurentPoly> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly entry;
            for (const auto& mono : normal_basis(verts[j], verts[i], e))
                entry += LaurentPoly(1, mono.degree());
            m(i, j) = entry;
        }
    return m;
}

Matrix<LaurentPoly> theta_action(Color color, int e) {
    auto verts = ordered_vertices(e);
    std::size_t n = verts.size();
    Letter want = static_cast<Letter>(static_cast<int>(color));
    Matrix<LaurentPoly> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (vertex_letter(verts[i].m, verts[i].n) != want) continue;
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly entry;
            for (const auto& mono : normal_basis(verts[i], verts[j], e))
                entry += LaurentPoly(1, mono.degree() - 3);
            m(i, j) = entry;
        }
    }
    return m;
}

}  // namespace zigzag
}  // namespace trihedral
