#include "hbl/scalar.hpp"

#include <cctype>

namespace hbl {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly();
        return;
    }
    if (den_.is_zero()) return;
    if (!den_.is_constant()) {
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = Poly::exact_div(num_, g);
            den_ = Poly::exact_div(den_, g);
        }
    }
    if (den_.leading() != 1) {
        Rational inv = 1 / den_.leading();
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.is_one()) den_ = Poly();
}

Rational Scalar::constant_value() const {
    if (!is_constant()) throw std::logic_error("Scalar::constant_value: not a constant: " + to_string());
    return num_.coeff(0);
}

Rational Scalar::eval(const Rational& x) const {
    if (den_.is_zero()) return num_.eval(x);
    Rational d = den_.eval(x);
    if (d == 0) throw PoleError("Scalar::eval: pole of " + to_string() + " at p = " + x.get_str());
    return num_.eval(x) / d;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_zero() && o.den_.is_zero()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    Poly od = o.denominator();
    Poly md = denominator();
    Poly g = Poly::gcd(md, od);
    Poly od_g = Poly::exact_div(od, g);
    Poly md_g = Poly::exact_div(md, g);
    num_ = num_ * od_g + o.num_ * md_g;
    den_ = md * od_g;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    if (den_.is_zero() && o.den_.is_zero()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // Cross-cancel before multiplying so the product is already reduced.
    Poly a = num_;
    Poly b = denominator();
    Poly c = o.num_;
    Poly d = o.denominator();
    Poly g1 = Poly::gcd(a, d);
    Poly g2 = Poly::gcd(c, b);
    if (!g1.is_one()) {
        a = Poly::exact_div(a, g1);
        d = Poly::exact_div(d, g1);
    }
    if (!g2.is_one()) {
        c = Poly::exact_div(c, g2);
        b = Poly::exact_div(b, g2);
    }
    num_ = a * c;
    den_ = b * d;
    if (den_.leading() != 1) {
        Rational inv = 1 / den_.leading();
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.is_one()) den_ = Poly();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
    Scalar r;
    r.num_ = denominator();
    r.den_ = num_;
    if (r.den_.leading() != 1) {
        Rational inv = 1 / r.den_.leading();
        r.num_ *= inv;
        r.den_ *= inv;
    }
    if (r.den_.is_one()) r.den_ = Poly();
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

std::string Scalar::to_string() const {
    if (den_.is_zero()) return num_.to_string();
    std::string n = num_.to_string();
    // A single term needs no parentheses: `-3/2*p^2/(...)` parses left to right.
    std::size_t terms = 0;
    for (const auto& c : num_.coeffs())
        if (c != 0) ++terms;
    if (terms > 1) n = "(" + n + ")";
    std::size_t den_terms = 0;
    for (const auto& c : den_.coeffs())
        if (c != 0) ++den_terms;
    std::string d = den_.to_string();
    if (den_terms > 1) d = "(" + d + ")";
    return n + "/" + d;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Scalar parse_all() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("Scalar::parse: " + what + " at position " + std::to_string(pos_) + " in '" +
                         std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (accept('^')) {
            bool neg = accept('-');
            skip();
            long e = integer();
            if (neg) e = -e;
            if (e < 0 && base.is_zero()) fail("zero to a negative power");
            return base.pow(e);
        }
        return base;
    }

    long integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'p') {
            ++pos_;
            return Scalar::p();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse_all(); }

Scalar q_integer(unsigned n, const Scalar& q) {
    Scalar sum;
    Scalar term(1);
    for (unsigned k = 0; k < n; ++k) {
        sum += term;
        term *= q;
    }
    return sum;
}

Scalar q_factorial(unsigned n, const Scalar& q) {
    Scalar f(1);
    for (unsigned k = 1; k <= n; ++k) f *= q_integer(k, q);
    return f;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hbl
