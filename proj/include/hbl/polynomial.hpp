#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hbl {

using Rational = mpq_class;

/// Dense univariate polynomial in `p` with arbitrary-precision rational
/// coefficients. Coefficients are stored lowest degree first with no
/// trailing zeros, so the zero polynomial is the empty vector.
class Poly {
public:
    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    explicit Poly(Rational c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(Rational c, std::size_t degree);
    static Poly p() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    std::size_t valuation() const;
    std::size_t size() const { return c_.size(); }

    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const Rational& leading() const { return c_.back(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Multiply or divide by p^k (the latter requires valuation() >= k).
    Poly shifted_up(std::size_t k) const;
    Poly shifted_down(std::size_t k) const;

    /// Scale to leading coefficient 1. Zero stays zero.
    Poly monic() const;

    /// Euclidean division over Q. Throws std::domain_error on division by zero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Division known to be exact; throws std::logic_error otherwise.
    static Poly exact_div(const Poly& a, const Poly& b);
    /// Monic gcd (gcd(0, 0) = 0). Uses a primitive pseudo-remainder sequence
    /// over Z so intermediate coefficients stay content-free.
    static Poly gcd(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace hbl
