#include "hbl/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hbl {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim_z(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_primitive(ZPoly& a) {
    if (a.empty()) return;
    mpz_class g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (a.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Clears denominators and content; the result has positive leading coefficient.
ZPoly to_primitive(const std::vector<Rational>& a) {
    mpz_class l = 1;
    for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        z[i] = a[i].get_num() * (l / a[i].get_den());
    }
    make_primitive(z);
    return z;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const mpz_class& lb = b.back();
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim_z(a);
    }
    return a;
}

}  // namespace

Poly::Poly(long c) {
    if (c != 0) c_.emplace_back(c);
}

Poly::Poly(Rational c) {
    if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rational c, std::size_t degree) {
    Poly r;
    if (c == 0) return r;
    r.c_.assign(degree + 1, Rational(0));
    r.c_[degree] = std::move(c);
    return r;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    return 0;
}

Rational Poly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() == 1) return b * a.c_[0];
    if (b.c_.size() == 1) return a * b.c_[0];
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(k, Rational(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::shifted_down(std::size_t k) const {
    if (k == 0) return *this;
    if (valuation() < k && !is_zero()) throw std::logic_error("Poly::shifted_down: not divisible by p^k");
    Poly r;
    if (k < c_.size()) r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    Rational inv = 1 / leading();
    return *this * inv;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational inv = 1 / b.leading();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational f = rem[k + db] * inv;
        if (f == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= f * b.c_[i];
        quo[k] = std::move(f);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    if (b.c_.size() == 1) return a * (1 / b.c_[0]);
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("Poly::exact_div: inexact division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const std::size_t va = a.valuation();
    const std::size_t vb = b.valuation();
    const std::size_t v = std::min(va, vb);
    // Strip powers of p first: most scalars met here are p^k times a small factor.
    const long da = a.degree() - static_cast<long>(va);
    const long db = b.degree() - static_cast<long>(vb);
    if (da == 0 || db == 0) return monomial(Rational(1), v);

    ZPoly x = to_primitive(std::vector<Rational>(a.c_.begin() + static_cast<std::ptrdiff_t>(va), a.c_.end()));
    ZPoly y = to_primitive(std::vector<Rational>(b.c_.begin() + static_cast<std::ptrdiff_t>(vb), b.c_.end()));
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) {
            x = ZPoly{1};
            break;
        }
        ZPoly r = pseudo_rem(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    // x is the primitive gcd.
    std::vector<Rational> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = Rational(x[i]);
    return Poly(std::move(g)).monic().shifted_up(v);
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (c < 0)
            out += "-";
        else if (!first)
            out += "+";
        first = false;
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "p";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace hbl
