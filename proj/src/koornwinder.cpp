#include "trihedral/koornwinder.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace trihedral {
namespace koornwinder {

long t_number(int e) { return static_cast<long>(e + 1) * (e + 2) / 2; }

Cplx VanishingPoint::z() const {
    double sigma = 2.0 * M_PI * (2 * k + l + 3) / (3.0 * (e + 3));
    double tau = 2.0 * M_PI * (k + 2 * l + 3) / (3.0 * (e + 3));
    return std::polar(1.0, sigma) + std::polar(1.0, -tau) + std::polar(1.0, tau - sigma);
}

BivarPoly chebyshev_sl3(int m, int n) {
    static std::map<Weight, BivarPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        cache[{0, 0}] = BivarPoly(1);
        cache[{1, 0}] = BivarPoly::X();
        cache[{0, 1}] = BivarPoly::Y();
    }
    struct Rec {
        static const BivarPoly& get(std::map<Weight, BivarPoly>& cache, int m, int n) {
            if (m < 0 || n < 0) {
                static const BivarPoly zero;
                return zero;
            }
            auto it = cache.find({m, n});
            if (it != cache.end()) return it->second;
            // step down in m when possible, else in n; both recursions of the
            // lemma are used so every (m, n) is reachable from the seeds
            BivarPoly p;
            if (m > 0) {
                // X p_{m-1,n} = p_{m,n} + p_{m-2,n+1} + p_{m-1,n-1}
                p = BivarPoly::X() * get(cache, m - 1, n) - get(cache, m - 2, n + 1) -
                    get(cache, m - 1, n - 1);
            } else {
                // Y p_{0,n-1} = p_{0,n} + p_{1,n-2} + p_{-1,n-1}
                p = BivarPoly::Y() * get(cache, 0, n - 1) - get(cache, 1, n - 2);
            }
            return cache.emplace(Weight{m, n}, std::move(p)).first->second;
        }
    };
    return Rec::get(cache, m, n);
}

std::vector<BivarPoly> vanishing_generators(int e) {
    std::vector<BivarPoly> gens;
    for (int m = e + 1; m >= 0; --m) gens.push_back(chebyshev_sl3(m, e + 1 - m));
    return gens;
}

std::vector<VanishingPoint> vanishing_set(int e) {
    std::vector<VanishingPoint> pts;
    for (int s = 0; s <= e; ++s)
        for (int k = 0; k <= s; ++k) pts.push_back({k, s - k, e});
    return pts;
}

std::vector<std::vector<VanishingPoint>> zeta_orbits(int e) {
    auto step = [e](const VanishingPoint& p) { return VanishingPoint{e - p.k - p.l, p.k, e}; };
    std::map<std::pair<int, int>, bool> seen;
    std::vector<std::vector<VanishingPoint>> orbits;
    for (const auto& p : vanishing_set(e)) {
        if (seen[{p.k, p.l}]) continue;
        std::vector<VanishingPoint> orbit;
        VanishingPoint q = p;
        do {
            orbit.push_back(q);
            seen[{q.k, q.l}] = true;
            q = step(q);
        } while (!(q.k == p.k && q.l == p.l));
        orbits.push_back(orbit);
    }
    return orbits;
}

BivarPoly rewrite_in_xy(const BivarPoly& p) {
    if (p.is_zero()) return p;
    // all monomials X^k Y^l share k-l mod 3; t is the smallest non-negative
    // integer in that class with l+t >= k throughout
    int residue = 0;
    bool have = false;
    int need = 0;
    for (const auto& [m, c] : p.coeffs()) {
        int d = m.first - m.second;
        int r = ((d % 3) + 3) % 3;
        if (!have) {
            residue = r;
            have = true;
        } else if (r != residue) {
            throw std::invalid_argument("rewrite_in_xy: mixed X-Y degree classes");
        }
        need = std::max(need, d);
    }
    int t = residue;
    while (t < need) t += 3;
    BivarPoly out;
    for (const auto& [m, c] : p.coeffs()) {
        int k = m.first, l = m.second + t;
        if ((l - k) % 3 != 0 || l < k) throw std::logic_error("rewrite_in_xy: not expressible");
        out += BivarPoly(c, k, (l - k) / 3);  // X^k Y^l = x^k y^{(l-k)/3}
    }
    return out;
}

std::vector<BivarPoly> rewrite_in_xy(int e) {
    std::vector<BivarPoly> out;
    for (const auto& p : vanishing_generators(e)) out.push_back(rewrite_in_xy(p));
    return out;
}

}  // namespace koornwinder
}  // namespace trihedral
