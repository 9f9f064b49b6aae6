#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "hbl/permutation.hpp"
#include "hbl/scalar.hpp"

namespace hbl {

/// Element of the Hecke algebra H_{q,n}: a finite combination of basis
/// symbols T_w. Zero coefficients are never stored.
class HeckeElement {
public:
    explicit HeckeElement(std::size_t n) : n_(n) {}
    /// The basis element T_w.
    static HeckeElement basis(const Permutation& w, Scalar c = Scalar(1));
    static HeckeElement one(std::size_t n) { return basis(Permutation(n)); }

    std::size_t n() const { return n_; }
    const std::map<Permutation, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Permutation& w) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Permutation& w, const Scalar& c);

    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    HeckeElement& operator*=(const Scalar& c);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(HeckeElement a, const Scalar& c) { return a *= c; }
    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    std::size_t n_;
    std::map<Permutation, Scalar> terms_;
};

/// a*b using T_w T_v = T_{wv} when lengths add and T_s^2 = q + (q-1) T_s,
/// applying the generators of each T_v one at a time along a reduced word.
HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b, const Scalar& q);

/// a * T_{v_i}.
HeckeElement hecke_times_generator(const HeckeElement& a, std::size_t i, const Scalar& q);

/// q-symmetrizer x_n, built by x_1 = 1 and [n]_q x_n = x_{n-1}(1 + T_{v_{n-1}} + ... + T_{v_{n-1}}...T_{v_1}).
/// Throws std::domain_error when [n]_q! vanishes.
HeckeElement symmetrizer(std::size_t n, const Scalar& q);
/// Direct definition (1/[n]_q!) sum_w T_w, used to cross-check the recursion.
HeckeElement symmetrizer_direct(std::size_t n, const Scalar& q);

/// q-antisymmetrizer y_n = (1/N) sum_w (-q)^(-l(w)) T_w with N = sum_w q^(-l(w)),
/// the normalization that makes y_n idempotent. Throws std::domain_error when N vanishes.
HeckeElement antisymmetrizer(std::size_t n, const Scalar& q);

}  // namespace hbl
