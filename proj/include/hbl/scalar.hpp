#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hbl/polynomial.hpp"

namespace hbl {

/// Raised when a rational function is evaluated at a root of its reduced denominator.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by Scalar::parse on malformed input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element of Q(p): a reduced quotient of polynomials in p. The deformation
/// parameter is q = p^2, so sqrt(q) is the polynomial `p`.
///
/// Canonical form: gcd(num, den) = 1 and den is monic. Zero is 0/1. Equality
/// of Scalars is equality of canonical forms. A denominator equal to 1 is
/// stored as an empty polynomial.
class Scalar {
public:
    Scalar() = default;
    Scalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(Rational c) : num_(std::move(c)) {}
    explicit Scalar(Poly num) : num_(std::move(num)) {}
    Scalar(Poly num, Poly den);

    static Scalar p() { return Scalar(Poly::p()); }
    static Scalar q() { return Scalar(Poly::monomial(Rational(1), 2)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_zero() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_zero(); }
    bool is_constant() const { return den_.is_zero() && num_.is_constant(); }
    /// Value of a constant Scalar; throws std::logic_error otherwise.
    Rational constant_value() const;

    const Poly& numerator() const { return num_; }
    Poly denominator() const { return den_.is_zero() ? Poly(1) : den_; }

    /// Value at p = x on the reduced representation; throws PoleError at a pole.
    Rational eval(const Rational& x) const;
    /// The specialization p = 1 (equivalently q = 1).
    Rational eval_at_one() const { return eval(Rational(1)); }

    /// Rough size measure used for pivot selection.
    std::size_t complexity() const { return num_.size() + den_.size(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    /// Canonical text form, e.g. `(p^2-1)/(p^2+1)`. Round-trips through parse().
    std::string to_string() const;
    /// Grammar: rational literals, `p`, `+ - * / ^` (integer exponents), parentheses.
    static Scalar parse(std::string_view text);

private:
    void normalize();
    Poly num_;
    Poly den_;  // empty means 1
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline std::size_t complexity(const Scalar& s) { return s.complexity(); }
inline std::size_t complexity(const Rational& r) {
    return mpz_size(r.get_num_mpz_t()) + mpz_size(r.get_den_mpz_t());
}

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
Scalar q_integer(unsigned n, const Scalar& q);
/// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
Scalar q_factorial(unsigned n, const Scalar& q);

std::string to_string(const Rational& r);

}  // namespace hbl
