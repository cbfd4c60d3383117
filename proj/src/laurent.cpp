#include "trihedral/laurent.hpp"

#include <sstream>
#include <vector>

namespace trihedral {

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

bool LaurentPoly::nonneg_coeffs() const {
    for (const auto& [e, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        Int& t = coeffs_[e];
        t += c;
        if (t == 0) coeffs_.erase(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        Int& t = coeffs_[e];
        t -= c;
        if (t == 0) coeffs_.erase(e);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            Int& t = r.coeffs_[e1 + e2];
            t += c1 * c2;
        }
    for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
        it = (it->second == 0) ? r.coeffs_.erase(it) : std::next(it);
    return r;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + dexp] = c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

bool LaurentPoly::divide_exact(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& out) {
    if (den.is_zero()) return false;
    out = LaurentPoly();
    if (num.is_zero()) return true;
    // shift both to ordinary polynomials; units v^k are invertible so the
    // quotient just picks up the exponent difference
    int sn = num.min_exp(), sd = den.min_exp();
    LaurentPoly rem = num.shifted(-sn);
    LaurentPoly d = den.shifted(-sd);
    LaurentPoly q;
    while (!rem.is_zero() && rem.max_exp() >= d.max_exp()) {
        Int f = rem.leading() / d.leading();
        if (f * d.leading() != rem.leading()) return false;
        LaurentPoly t(f, rem.max_exp() - d.max_exp());
        q += t;
        rem -= t * d;
    }
    if (!rem.is_zero()) return false;
    out = q.shifted(sn - sd);
    return true;
}

Cplx LaurentPoly::eval(Cplx x) const {
    Cplx r = 0.0;
    for (const auto& [e, c] : coeffs_) r += c.get_d() * std::pow(x, e);
    return r;
}

double LaurentPoly::eval(double x) const {
    double r = 0.0;
    for (const auto& [e, c] : coeffs_) r += c.get_d() * std::pow(x, e);
    return r;
}

Int LaurentPoly::eval_at_one() const {
    Int r = 0;
    for (const auto& [e, c] : coeffs_) r += c;
    return r;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Int c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            os << "v";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly quantum_integer(long s) {
    if (s < 0) return -quantum_integer(-s);
    LaurentPoly r;
    // [s] = v^{s-1} + v^{s-3} + ... + v^{1-s}
    for (long e = s - 1; e >= 1 - s; e -= 2) r += LaurentPoly(1, static_cast<int>(e));
    return r;
}

LaurentPoly quantum_factorial(long t) {
    if (t < 0) throw std::invalid_argument("quantum_factorial of negative argument");
    LaurentPoly r(1);
    for (long i = 1; i <= t; ++i) r *= quantum_integer(i);
    return r;
}

LaurentPoly quantum_binomial(long s, long t) {
    if (t < 0) throw std::invalid_argument("quantum_binomial with negative t");
    if (t == 0) return LaurentPoly(1);
    LaurentPoly num(1);
    for (long i = 0; i < t; ++i) num *= quantum_integer(s - i);
    LaurentPoly q;
    if (!LaurentPoly::divide_exact(num, quantum_factorial(t), q))
        throw std::logic_error("quantum_binomial: exact division failed");
    return q;
}

// ---- FracLaurent ----

namespace {

// Dense rational polynomial helpers for gcd computation; index = exponent.
std::vector<Rat> to_dense(const LaurentPoly& p, int shift) {
    std::vector<Rat> d(p.max_exp() + shift + 1, Rat(0));
    for (const auto& [e, c] : p.coeffs()) d[e + shift] = Rat(c);
    return d;
}

void trim(std::vector<Rat>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

LaurentPoly from_dense_primitive(const std::vector<Rat>& d) {
    // clear denominators, divide by content, positive leading coefficient
    Int lcm = 1;
    for (const auto& c : d)
        if (c != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    LaurentPoly p;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        Rat scaled = d[i] * Rat(lcm);
        p += LaurentPoly(Int(scaled.get_num()), static_cast<int>(i));
    }
    if (p.is_zero()) return p;
    Int cont = p.content();
    if (p.leading() < 0) cont = -cont;
    LaurentPoly q;
    LaurentPoly::divide_exact(p, LaurentPoly(cont), q);
    return q;
}

LaurentPoly primitive_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<Rat> x = to_dense(a, -a.min_exp());
    std::vector<Rat> y = to_dense(b, -b.min_exp());
    while (!y.empty()) {
        auto r = poly_rem(x, y);
        x = y;
        y = r;
    }
    return from_dense_primitive(x);
}

}  // namespace

FracLaurent::FracLaurent(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::invalid_argument("FracLaurent with zero denominator");
    normalize();
}

void FracLaurent::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // den: shift to lowest exponent 0, pulling the shift into num
    int sh = den_.min_exp();
    den_ = den_.shifted(-sh);
    num_ = num_.shifted(-sh);
    // cancel polynomial gcd of primitive parts
    LaurentPoly g = primitive_gcd(num_, den_);
    if (!g.is_one()) {
        LaurentPoly qn, qd;
        bool okn = LaurentPoly::divide_exact(num_, g, qn);
        bool okd = LaurentPoly::divide_exact(den_, g, qd);
        if (!okn || !okd) throw std::logic_error("FracLaurent: gcd division failed");
        num_ = qn;
        den_ = qd;
        sh = den_.min_exp();
        den_ = den_.shifted(-sh);
        num_ = num_.shifted(-sh);
    }
    // integer content: reduce gcd(content(num), content(den)); positive leading den
    Int cn = num_.content(), cd = den_.content();
    Int g2;
    mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading() < 0) g2 = -g2;
    if (g2 != 1) {
        LaurentPoly qn, qd;
        LaurentPoly::divide_exact(num_, LaurentPoly(g2), qn);
        LaurentPoly::divide_exact(den_, LaurentPoly(g2), qd);
        num_ = qn;
        den_ = qd;
    }
}

const LaurentPoly& FracLaurent::as_laurent() const {
    if (!is_laurent()) throw std::logic_error("FracLaurent::as_laurent on non-trivial denominator: " + str());
    return num_;
}

FracLaurent FracLaurent::operator+(const FracLaurent& o) const {
    return FracLaurent(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FracLaurent FracLaurent::operator-(const FracLaurent& o) const {
    return FracLaurent(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FracLaurent FracLaurent::operator*(const FracLaurent& o) const {
    return FracLaurent(num_ * o.num_, den_ * o.den_);
}

FracLaurent FracLaurent::operator/(const FracLaurent& o) const {
    if (o.is_zero()) throw std::invalid_argument("FracLaurent division by zero");
    return FracLaurent(num_ * o.den_, den_ * o.num_);
}

FracLaurent FracLaurent::operator-() const {
    FracLaurent r = *this;
    r.num_ = -r.num_;
    return r;
}

bool FracLaurent::operator<(const FracLaurent& o) const {
    if (num_ < o.num_) return true;
    if (o.num_ < num_) return false;
    return den_ < o.den_;
}

Cplx FracLaurent::eval(Cplx x) const { return num_.eval(x) / den_.eval(x); }
double FracLaurent::eval(double x) const { return num_.eval(x) / den_.eval(x); }

std::string FracLaurent::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace trihedral
