#include "hbl/hecke_algebra.hpp"

#include <stdexcept>

namespace hbl {

HeckeElement HeckeElement::basis(const Permutation& w, Scalar c) {
    HeckeElement e(w.size());
    e.add_term(w, c);
    return e;
}

Scalar HeckeElement::coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const Scalar& c) {
    if (w.size() != n_) throw std::invalid_argument("HeckeElement: permutation size mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (o.n_ != n_) throw std::invalid_argument("HeckeElement: size mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    if (o.n_ != n_) throw std::invalid_argument("HeckeElement: size mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

HeckeElement& HeckeElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

std::string HeckeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")*T" + w.to_string();
    }
    return s;
}

HeckeElement hecke_times_generator(const HeckeElement& a, std::size_t i, const Scalar& q) {
    HeckeElement r(a.n());
    const Scalar qm1 = q - Scalar(1);
    for (const auto& [w, c] : a.terms()) {
        Permutation ws = w.times_transposition(i);
        if (w.right_ascent(i)) {
            r.add_term(ws, c);
        } else {
            // T_w T_s = T_{ws} T_s^2 = q T_{ws} + (q-1) T_w
            r.add_term(ws, c * q);
            r.add_term(w, c * qm1);
        }
    }
    return r;
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b, const Scalar& q) {
    if (a.n() != b.n()) throw std::invalid_argument("hecke_multiply: size mismatch");
    HeckeElement result(a.n());
    for (const auto& [v, c] : b.terms()) {
        HeckeElement part = a;
        for (std::size_t i : v.reduced_word()) part = hecke_times_generator(part, i, q);
        result += part * c;
    }
    return result;
}

HeckeElement symmetrizer(std::size_t n, const Scalar& q) {
    if (n == 0) throw std::invalid_argument("symmetrizer: n must be positive");
    if (q_factorial(static_cast<unsigned>(n), q).is_zero())
        throw std::domain_error("symmetrizer: [n]_q! vanishes");
    HeckeElement x = HeckeElement::one(1);
    for (std::size_t m = 2; m <= n; ++m) {
        // embed x_{m-1} into H_m
        HeckeElement prev(m);
        for (const auto& [w, c] : x.terms()) prev.add_term(w.extended(m), c);
        // 1 + T_{v_{m-1}} + T_{v_{m-1}}T_{v_{m-2}} + ... + T_{v_{m-1}}...T_{v_1}
        HeckeElement tail = HeckeElement::one(m);
        HeckeElement chain = HeckeElement::one(m);
        for (std::size_t i = m - 1; i >= 1; --i) {
            chain = hecke_times_generator(chain, i, q);
            tail += chain;
        }
        x = hecke_multiply(prev, tail, q) * q_integer(static_cast<unsigned>(m), q).inverse();
    }
    return x;
}

HeckeElement symmetrizer_direct(std::size_t n, const Scalar& q) {
    Scalar f = q_factorial(static_cast<unsigned>(n), q);
    if (f.is_zero()) throw std::domain_error("symmetrizer: [n]_q! vanishes");
    Scalar inv = f.inverse();
    HeckeElement x(n);
    for (const auto& w : Permutation::all(n)) x.add_term(w, inv);
    return x;
}

HeckeElement antisymmetrizer(std::size_t n, const Scalar& q) {
    if (n == 0) throw std::invalid_argument("antisymmetrizer: n must be positive");
    if (q.is_zero()) throw std::domain_error("antisymmetrizer: q must be nonzero");
    const Scalar qinv = q.inverse();
    const Scalar mqinv = -qinv;
    Scalar norm;
    HeckeElement y(n);
    for (const auto& w : Permutation::all(n)) {
        const long l = static_cast<long>(w.length());
        norm += qinv.pow(l);
        y.add_term(w, mqinv.pow(l));
    }
    if (norm.is_zero()) throw std::domain_error("antisymmetrizer: normalizer vanishes");
    return y * norm.inverse();
}

}  // namespace hbl
