#include "trihedral/fusion.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace trihedral {

Color rho(Color u, int k) {
    int i = ((static_cast<int>(u) + k) % 3 + 3) % 3;
    return static_cast<Color>(i);
}

char color_char(Color u) {
    switch (u) {
        case Color::g: return 'g';
        case Color::o: return 'o';
        case Color::p: return 'p';
    }
    return '?';
}

Color color_from_char(char c) {
    switch (c) {
        case 'g': return Color::g;
        case 'o': return Color::o;
        case 'p': return Color::p;
    }
    throw std::invalid_argument("unknown color");
}

namespace fusion {

namespace {

void add_term(FusionDecomposition& out, int m, int n, long c) {
    if (m < 0 || n < 0) return;
    out[{m, n}] += c;
}

}  // namespace

FusionDecomposition tensor_X(const FusionDecomposition& dec) {
    FusionDecomposition out;
    for (const auto& [w, c] : dec) {
        add_term(out, w.m + 1, w.n, c);
        add_term(out, w.m - 1, w.n + 1, c);
        add_term(out, w.m, w.n - 1, c);
    }
    return out;
}

FusionDecomposition tensor_Y(const FusionDecomposition& dec) {
    FusionDecomposition out;
    for (const auto& [w, c] : dec) {
        add_term(out, w.m, w.n + 1, c);
        add_term(out, w.m + 1, w.n - 1, c);
        add_term(out, w.m - 1, w.n, c);
    }
    return out;
}

FusionDecomposition decompose_monomial(int k, int l) {
    FusionDecomposition dec{{{0, 0}, 1}};
    for (int i = 0; i < k; ++i) dec = tensor_X(dec);
    for (int i = 0; i < l; ++i) dec = tensor_Y(dec);
    return dec;
}

std::map<std::pair<int, int>, long> d_coefficients(int m, int n) {
    static std::map<Weight, std::map<std::pair<int, int>, long>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    // iterative worklist so deep recursions are avoided
    struct Rec {
        static const std::map<std::pair<int, int>, long>& get(
            std::map<Weight, std::map<std::pair<int, int>, long>>& cache, int m, int n) {
            Weight key{m, n};
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
            std::map<std::pair<int, int>, long> d{{{m, n}, 1}};
            for (const auto& [w, mult] : decompose_monomial(m, n)) {
                if (w == key) continue;
                for (const auto& [kl, c] : get(cache, w.m, w.n)) d[kl] -= mult * c;
            }
            for (auto dit = d.begin(); dit != d.end();)
                dit = (dit->second == 0) ? d.erase(dit) : std::next(dit);
            return cache.emplace(key, std::move(d)).first->second;
        }
    };
    return Rec::get(cache, m, n);
}

Color central_character(int m, int n) {
    return static_cast<Color>(((m + 2 * n) % 3 + 3) % 3);
}

double qdim(int m, int n, int e) {
    if (m < 0 || n < 0 || m + n > e) throw std::invalid_argument("qdim: weight outside level");
    auto qn = [&](int s) { return std::sin(s * M_PI / (e + 3)) / std::sin(M_PI / (e + 3)); };
    return qn(m + 1) * qn(n + 1) * qn(m + n + 2) / qn(2);
}

}  // namespace fusion
}  // namespace trihedral
