#include "trihedral/graphs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <json.hpp>

#include "trihedral/koornwinder.hpp"

namespace trihedral {
namespace graphs {

namespace {

bool weights_adjacent(const Weight& a, const Weight& b) {
    int dm = a.m - b.m, dn = a.n - b.n;
    static const int steps[6][2] = {{1, 0}, {-1, 0}, {-1, 1}, {1, -1}, {0, -1}, {0, 1}};
    for (auto& s : steps)
        if (dm == s[0] && dn == s[1]) return true;
    return false;
}

std::string data_dir() {
    if (const char* env = std::getenv("TRIHEDRAL_DATA")) return env;
    return TRIHEDRAL_DATA_DIR;
}

}  // namespace

Matrix<Int> gamma_X(const TricoloredGraph& g) {
    std::size_t nG = g.n_green(), nO = g.n_orange(), nP = g.n_purple();
    Matrix<Int> m(g.size(), g.size(), Int(0));
    for (std::size_t i = 0; i < nO; ++i)
        for (std::size_t j = 0; j < nG; ++j) m(nG + i, j) = g.A(i, j);
    for (std::size_t i = 0; i < nP; ++i)
        for (std::size_t j = 0; j < nO; ++j) m(nG + nO + i, nG + j) = g.B(i, j);
    for (std::size_t i = 0; i < nG; ++i)
        for (std::size_t j = 0; j < nP; ++j) m(i, nG + nO + j) = g.C(i, j);
    return m;
}

Matrix<Int> gamma_Y(const TricoloredGraph& g) { return gamma_X(g).transpose(); }

Matrix<Int> adjacency(const TricoloredGraph& g) {
    Matrix<Int> x = gamma_X(g);
    return x + x.transpose();
}

TricoloredGraph type_A(int e, Color corner) {
    TricoloredGraph g;
    g.name = "A" + std::to_string(e);
    if (corner != Color::g) g.name += std::string("^") + color_char(corner);
    g.level = e;
    std::vector<Weight> byc[3];
    for (int s = 0; s <= e; ++s)
        for (int m = 0; m <= s; ++m) {
            Weight w{m, s - m};
            Color c = rho(corner, (w.m + 2 * w.n) % 3);
            byc[static_cast<int>(c)].push_back(w);
        }
    for (auto& v : byc) std::sort(v.begin(), v.end());
    g.green_weights = byc[0];
    g.orange_weights = byc[1];
    g.purple_weights = byc[2];
    auto block = [](const std::vector<Weight>& rows, const std::vector<Weight>& cols) {
        Matrix<Int> m(rows.size(), cols.size(), Int(0));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (weights_adjacent(rows[i], cols[j])) m(i, j) = 1;
        return m;
    };
    g.A = block(g.orange_weights, g.green_weights);
    g.B = block(g.purple_weights, g.orange_weights);
    g.C = block(g.green_weights, g.purple_weights);
    return g;
}

TricoloredGraph type_D(int e, Color corner) {
    if (e <= 0 || e % 3 != 0) throw std::invalid_argument("type_D needs e = 0 mod 3, e > 0");
    auto sigma = [e](const Weight& w) { return Weight{e - w.m - w.n, w.m}; };
    const Weight fixed{e / 3, e / 3};

    // orbit representatives, keyed by the minimal member
    std::map<Weight, std::vector<Weight>> orbits;
    for (int s = 0; s <= e; ++s)
        for (int m = 0; m <= s; ++m) {
            Weight w{m, s - m};
            Weight a = w, b = sigma(w), c = sigma(b);
            Weight key = std::min({a, b, c});
            if (!orbits.count(key)) {
                if (a == b)
                    orbits[key] = {a};
                else
                    orbits[key] = {key, sigma(key), sigma(sigma(key))};
            }
        }

    struct Vertex {
        Weight rep;
        bool split = false;  // one of the three copies of the fixed point
        int copy = 0;
    };
    std::vector<Vertex> byc[3];
    for (const auto& [key, orb] : orbits) {
        int c = static_cast<int>(rho(corner, (key.m + 2 * key.n) % 3));
        if (orb.size() == 1) {
            for (int i = 0; i < 3; ++i) byc[c].push_back({key, true, i});
        } else {
            byc[c].push_back({key, false, 0});
        }
    }

    auto mult = [&](const Vertex& a, const Vertex& b) -> Int {
        if (!a.split && !b.split) {
            long cnt = 0;
            for (const Weight& t : orbits.at(b.rep))
                if (weights_adjacent(a.rep, t)) ++cnt;
            return cnt;
        }
        if (a.split && b.split) return 0;
        // split copy <-> free orbit: one edge per sigma-orbit of the fixed
        // point's incident edges; the neighbor orbit has all three members
        // adjacent to the fixed point, so each copy receives exactly one
        const Vertex& orb = a.split ? b : a;
        return weights_adjacent(fixed, orbits.at(orb.rep).front()) ? 1 : 0;
    };

    TricoloredGraph g;
    g.name = "D" + std::to_string(e);
    if (corner != Color::g) g.name += std::string("^") + color_char(corner);
    g.level = e;
    for (int c = 0; c < 3; ++c) {
        auto& dst = (c == 0) ? g.green_weights : (c == 1) ? g.orange_weights : g.purple_weights;
        for (const auto& v : byc[c]) dst.push_back(v.rep);
    }
    auto block = [&](const std::vector<Vertex>& rows, const std::vector<Vertex>& cols) {
        Matrix<Int> m(rows.size(), cols.size(), Int(0));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = mult(rows[i], cols[j]);
        return m;
    };
    g.A = block(byc[1], byc[0]);
    g.B = block(byc[2], byc[1]);
    g.C = block(byc[0], byc[2]);
    return g;
}

TricoloredGraph load_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph data file " + path);
    nlohmann::json j;
    in >> j;
    TricoloredGraph g;
    g.name = j.at("name").get<std::string>();
    g.level = j.at("level").get<int>();
    auto mat = [&](const char* key, std::size_t rows, std::size_t cols) {
        Matrix<Int> m(rows, cols, Int(0));
        const auto& arr = j.at(key);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < cols; ++c) m(i, c) = arr.at(i).at(c).get<long>();
        return m;
    };
    std::size_t nG = j.at("green").get<std::size_t>();
    std::size_t nO = j.at("orange").get<std::size_t>();
    std::size_t nP = j.at("purple").get<std::size_t>();
    g.A = mat("A", nO, nG);
    g.B = mat("B", nP, nO);
    g.C = mat("C", nG, nP);
    return g;
}

namespace {

TricoloredGraph load_graph_file(const std::string& stem) {
    return load_graph_json(data_dir() + "/" + stem + ".json");
}

}  // namespace

TricoloredGraph type_C(int e) {
    if (e < 1 || e > 5) throw std::invalid_argument("type_C is bundled for 1 <= e <= 5 only");
    return load_graph_file("c" + std::to_string(e));
}

TricoloredGraph type_E(const std::string& name) {
    static const std::set<std::string> known{"E5", "E9_1", "E9_2", "E9_3", "E9_4", "E21"};
    if (!known.count(name)) throw std::invalid_argument("unknown type E graph " + name);
    std::string stem = name;
    for (auto& ch : stem) ch = static_cast<char>(std::tolower(ch));
    return load_graph_file(stem);
}

std::vector<TricoloredGraph> bundled_graphs() {
    std::vector<TricoloredGraph> out;
    for (int e = 0; e <= 8; ++e) out.push_back(type_A(e));
    out.push_back(type_D(3));
    out.push_back(type_D(6));
    for (int e = 1; e <= 5; ++e) out.push_back(type_C(e));
    for (const char* n : {"E5", "E9_1", "E9_2", "E9_3", "E9_4", "E21"}) out.push_back(type_E(n));
    return out;
}

TricoloredGraph rotate_colors(const TricoloredGraph& g) {
    TricoloredGraph r;
    r.name = g.name + "~rot";
    r.level = g.level;
    r.A = g.C;
    r.B = g.A;
    r.C = g.B;
    r.green_weights = g.purple_weights;
    r.orange_weights = g.green_weights;
    r.purple_weights = g.orange_weights;
    return r;
}

bool is_quasi_regular(const TricoloredGraph& g) {
    Matrix<Int> At = g.A.transpose(), Bt = g.B.transpose(), Ct = g.C.transpose();
    return At * g.A == g.C * Ct && g.A * At == Bt * g.B && Ct * g.C == g.B * Bt;
}

bool is_strongly_connected(const TricoloredGraph& g) {
    std::size_t n = g.size();
    if (n <= 1) return true;
    Matrix<Int> x = gamma_X(g);
    auto reach_all = [n](const Matrix<Int>& m) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w)
                if (!seen[w] && m(u, w) != 0) {
                    seen[w] = true;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == n;
    };
    // Gamma^Y is the reverse of Gamma^X, so this covers both orientations
    return reach_all(x) && reach_all(x.transpose());
}

bool is_admissible(const TricoloredGraph& g) {
    return is_quasi_regular(g) && is_strongly_connected(g);
}

GraphRep m_gamma(const TricoloredGraph& g) {
    if (!is_quasi_regular(g)) throw std::invalid_argument("m_gamma on non-quasi-regular graph");
    const LaurentPoly two = quantum_integer(2), three = quantum_integer(3);
    std::size_t nG = g.n_green(), nO = g.n_orange(), nP = g.n_purple();
    std::size_t n = g.size();
    GraphRep rep{Matrix<LaurentPoly>(n, n), Matrix<LaurentPoly>(n, n), Matrix<LaurentPoly>(n, n)};
    auto put = [&](Matrix<LaurentPoly>& m, std::size_t r0, std::size_t c0, const Matrix<Int>& blk) {
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j)
                if (blk(i, j) != 0) m(r0 + i, c0 + j) = two * LaurentPoly(blk(i, j));
    };
    for (std::size_t i = 0; i < nG; ++i) rep.Mg(i, i) = two * three;
    put(rep.Mg, 0, nG, g.A.transpose());
    put(rep.Mg, 0, nG + nO, g.C);
    for (std::size_t i = 0; i < nO; ++i) rep.Mo(nG + i, nG + i) = two * three;
    put(rep.Mo, nG, 0, g.A);
    put(rep.Mo, nG, nG + nO, g.B.transpose());
    for (std::size_t i = 0; i < nP; ++i) rep.Mp(nG + nO + i, nG + nO + i) = two * three;
    put(rep.Mp, nG + nO, 0, g.C.transpose());
    put(rep.Mp, nG + nO, nG, g.B);
    return rep;
}

Matrix<LaurentPoly> kl_action(const TricoloredGraph& g, int m, int n, Color u) {
    if (!is_quasi_regular(g)) throw std::invalid_argument("kl_action on non-quasi-regular graph");
    // Each generator matrix factors as [2] P_w ([3]Id + A(Gamma)) with P_w the
    // projector onto the w-block. In a bs_expansion word the inner projector
    // sandwiches extract exactly one Gamma^X or Gamma^Y step per letter, so
    // the whole sum telescopes to
    //   [2] * p_{m,n}(Gamma^X, Gamma^Y) * P_u * ([3]Id + A(Gamma)),
    // an exact Laurent matrix with no fractions at any point. Agreement with
    // the literal word products is certified in the test suite.
    std::size_t sz = g.size();
    Matrix<Int> X = gamma_X(g), Y = X.transpose();
    std::map<std::pair<int, int>, Matrix<Int>> mono;
    mono[{0, 0}] = Matrix<Int>::identity(sz, Int(1));
    std::function<const Matrix<Int>&(int, int)> get = [&](int k, int l) -> const Matrix<Int>& {
        auto it = mono.find({k, l});
        if (it != mono.end()) return it->second;
        Matrix<Int> t = (k > 0) ? X * get(k - 1, l) : Y * get(k, l - 1);
        return mono.emplace(std::make_pair(k, l), std::move(t)).first->second;
    };
    Matrix<Int> transport(sz, sz, Int(0));
    for (const auto& [kl, d] : fusion::d_coefficients(m, n))
        transport = transport + get(kl.first, kl.second) * Int(d);

    // P_u ([3]Id + A(Gamma)): only the u-block rows survive
    std::size_t lo = 0, hi = 0;
    switch (u) {
        case Color::g: lo = 0; hi = g.n_green(); break;
        case Color::o: lo = g.n_green(); hi = g.n_green() + g.n_orange(); break;
        case Color::p: lo = g.n_green() + g.n_orange(); hi = sz; break;
    }
    Matrix<Int> adj = adjacency(g);
    const LaurentPoly two = quantum_integer(2), three = quantum_integer(3);
    Matrix<LaurentPoly> total(sz, sz);
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j) {
            Int acc3 = 0, acc1 = 0;  // coefficients of [3] and of 1
            for (std::size_t t = lo; t < hi; ++t) {
                if (transport(i, t) == 0) continue;
                acc3 += transport(i, t) * (t == j ? 1 : 0);
                acc1 += transport(i, t) * adj(t, j);
            }
            LaurentPoly entry = three * LaurentPoly(acc3) + LaurentPoly(acc1);
            if (!entry.is_zero()) total(i, j) = two * entry;
        }
    return total;
}

AnnihilationCertificate annihilation_test(const TricoloredGraph& g, int e) {
    AnnihilationCertificate cert;
    cert.max_abs_entry = 0;
    if (!is_quasi_regular(g)) throw std::invalid_argument("annihilation_test needs quasi-regularity");
    Matrix<Int> X = gamma_X(g), Y = gamma_Y(g);
    std::size_t n = g.size();
    // cache X^k Y^l  (X and Y commute by quasi-regularity)
    std::map<std::pair<int, int>, Matrix<Int>> mono;
    mono[{0, 0}] = Matrix<Int>::identity(n, Int(1));
    std::function<const Matrix<Int>&(int, int)> get = [&](int k, int l) -> const Matrix<Int>& {
        auto it = mono.find({k, l});
        if (it != mono.end()) return it->second;
        Matrix<Int> m = (k > 0) ? X * get(k - 1, l) : Y * get(k, l - 1);
        return mono.emplace(std::make_pair(k, l), std::move(m)).first->second;
    };
    bool ok = true;
    for (int m = 0; m <= e + 1; ++m) {
        const BivarPoly p = koornwinder::chebyshev_sl3(m, e + 1 - m);
        Matrix<Int> s(n, n, Int(0));
        for (const auto& [mono_kl, c] : p.coeffs()) {
            if (c.get_den() != 1) throw std::logic_error("annihilation_test: non-integer coefficient");
            s = s + get(mono_kl.first, mono_kl.second) * Int(c.get_num());
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int a = abs(s(i, j));
                if (a > cert.max_abs_entry) cert.max_abs_entry = a;
                if (a != 0) ok = false;
            }
    }
    cert.ok = ok;
    return cert;
}

namespace {

std::vector<Cplx> integer_matrix_eigenvalues(const Matrix<Int>& m) {
    std::size_t n = m.rows();
    Eigen::MatrixXd em(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) em(i, j) = m(i, j).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(em, false);
    std::vector<Cplx> ev;
    for (int i = 0; i < solver.eigenvalues().size(); ++i) ev.push_back(solver.eigenvalues()[i]);
    std::sort(ev.begin(), ev.end(), [](const Cplx& a, const Cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return ev;
}

}  // namespace

SpectrumReport spectrum_check(const TricoloredGraph& g, int e, double tol) {
    SpectrumReport rep;
    rep.eigenvalues = integer_matrix_eigenvalues(gamma_X(g));
    std::vector<Cplx> roots;
    for (const auto& p : koornwinder::vanishing_set(e)) roots.push_back(p.z());
    bool type_a = g.size() == static_cast<std::size_t>(koornwinder::t_number(e)) &&
                  rep.eigenvalues.size() == roots.size();
    rep.ok = true;
    if (type_a) {
        // multiset match: greedily pair each eigenvalue with the nearest
        // unused root
        std::vector<bool> used(roots.size(), false);
        for (const Cplx& ev : rep.eigenvalues) {
            double best = 1e18;
            std::size_t bi = 0;
            for (std::size_t i = 0; i < roots.size(); ++i) {
                if (used[i]) continue;
                double d = std::abs(ev - roots[i]);
                if (d < best) {
                    best = d;
                    bi = i;
                }
            }
            if (best > tol) {
                rep.ok = false;
                rep.unmatched.push_back(ev);
            } else {
                used[bi] = true;
            }
        }
    } else {
        for (const Cplx& ev : rep.eigenvalues) {
            if (std::abs(ev) <= tol) continue;  // zero multiplicities are free
            bool found = false;
            for (const Cplx& r : roots)
                if (std::abs(ev - r) <= tol) {
                    found = true;
                    break;
                }
            if (!found) {
                rep.ok = false;
                rep.unmatched.push_back(ev);
            }
        }
    }
    return rep;
}

TypeDReport type_D_counting(int e, double tol) {
    if (e <= 0 || e % 3 != 0) throw std::invalid_argument("type_D_counting needs e = 0 mod 3");
    TypeDReport r;
    long te = koornwinder::t_number(e);
    r.rank = (te - 1) / 3 + 3;
    TricoloredGraph d = type_D(e);
    if (static_cast<long>(d.size()) != r.rank)
        throw std::logic_error("type_D vertex count disagrees with the rank formula");

    // module simples: one per free sigma-orbit with qdim 3*qdim(rep), plus
    // three copies of the fixed point with qdim(L_{e/3,e/3}) each
    auto sigma = [e](const Weight& w) { return Weight{e - w.m - w.n, w.m}; };
    std::set<Weight> seen;
    double rhs = 0;
    for (int s = 0; s <= e; ++s)
        for (int m = 0; m <= s; ++m) {
            Weight w{m, s - m};
            if (seen.count(w)) continue;
            Weight a = w, b = sigma(w), c = sigma(b);
            seen.insert(a);
            seen.insert(b);
            seen.insert(c);
            if (a == b) {
                double q = fusion::qdim(a.m, a.n, e);
                for (int i = 0; i < 3; ++i) {
                    r.module_qdims.push_back(q);
                    rhs += q * q;
                }
            } else {
                double q = 3.0 * fusion::qdim(a.m, a.n, e);
                r.module_qdims.push_back(q);
                rhs += q * q;
            }
        }
    double lhs = 0;
    for (int s = 0; s <= e; ++s)
        for (int m = 0; m <= s; ++m) {
            double q = fusion::qdim(m, s - m, e);
            lhs += q * q;
        }
    r.lhs = 3.0 * lhs;  // qdim of the algebra object is 3
    r.rhs = rhs;
    r.ok = std::abs(r.lhs - r.rhs) < tol * std::max(1.0, std::abs(r.lhs));
    std::sort(r.module_qdims.begin(), r.module_qdims.end());
    return r;
}

}  // namespace graphs
}  // namespace trihedral
