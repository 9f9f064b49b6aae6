#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hbl/scalar.hpp"

namespace hbl {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N, exact through
/// order N. Binary operations on operands of different orders truncate to
/// the smaller order; no operation ever reports a coefficient beyond the
/// order at which it is known.
///
/// F is Rational or Scalar.
template <class F>
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : c_(order + 1, F(0)) {}
    PowerSeries(std::vector<F> coeffs) : c_(std::move(coeffs)) {  // NOLINT(google-explicit-constructor)
        if (c_.empty()) throw std::invalid_argument("PowerSeries: need at least one coefficient");
    }

    /// sum_k f(k) t^k for k = 0..order.
    template <class Fn>
    static PowerSeries generate(std::size_t order, Fn&& f) {
        std::vector<F> c;
        c.reserve(order + 1);
        for (std::size_t k = 0; k <= order; ++k) c.push_back(F(f(k)));
        return PowerSeries(std::move(c));
    }

    std::size_t order() const { return c_.size() - 1; }
    const F& operator[](std::size_t k) const { return c_.at(k); }
    F& operator[](std::size_t k) { return c_.at(k); }
    const std::vector<F>& coeffs() const { return c_; }

    PowerSeries truncated(std::size_t order) const {
        if (order > this->order()) throw std::out_of_range("PowerSeries::truncated: cannot extend a truncated series");
        return PowerSeries(std::vector<F>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<F> c(n + 1);
        for (std::size_t k = 0; k <= n; ++k) c[k] = a.c_[k] + b.c_[k];
        return PowerSeries(std::move(c));
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<F> c(n + 1);
        for (std::size_t k = 0; k <= n; ++k) c[k] = a.c_[k] - b.c_[k];
        return PowerSeries(std::move(c));
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<F> c(n + 1, F(0));
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return PowerSeries(std::move(c));
    }

    /// 1/P; requires an invertible constant term.
    PowerSeries reciprocal() const {
        if (is_zero(c_[0])) throw std::domain_error("PowerSeries::reciprocal: zero constant term");
        const std::size_t n = order();
        std::vector<F> r(n + 1, F(0));
        F inv0 = F(1) / c_[0];
        r[0] = inv0;
        for (std::size_t k = 1; k <= n; ++k) {
            F s(0);
            for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r[k - j];
            r[k] = -(s * inv0);
        }
        return PowerSeries(std::move(r));
    }

    /// d/dt; the result is known one order lower.
    PowerSeries derivative() const {
        if (order() == 0) throw std::domain_error("PowerSeries::derivative: order 0 series has no known derivative");
        std::vector<F> d(order());
        for (std::size_t k = 1; k <= order(); ++k) d[k - 1] = c_[k] * F(static_cast<long>(k));
        return PowerSeries(std::move(d));
    }

    /// Termwise antiderivative with zero constant term; known one order higher.
    PowerSeries integral() const {
        std::vector<F> r(order() + 2, F(0));
        for (std::size_t k = 0; k <= order(); ++k) r[k + 1] = c_[k] / F(static_cast<long>(k + 1));
        return PowerSeries(std::move(r));
    }

    /// exp(P) for P with zero constant term, via E' = P'E.
    PowerSeries exp() const {
        if (!is_zero(c_[0])) throw std::domain_error("PowerSeries::exp: constant term must be zero");
        const std::size_t n = order();
        std::vector<F> e(n + 1, F(0));
        e[0] = F(1);
        for (std::size_t m = 1; m <= n; ++m) {
            F s(0);
            for (std::size_t k = 1; k <= m; ++k) {
                if (is_zero(c_[k])) continue;
                s += F(static_cast<long>(k)) * c_[k] * e[m - k];
            }
            e[m] = s / F(static_cast<long>(m));
        }
        return PowerSeries(std::move(e));
    }

    /// log(P) for P with constant term 1.
    PowerSeries log() const {
        if (!(c_[0] == F(1))) throw std::domain_error("PowerSeries::log: constant term must be 1");
        if (order() == 0) return PowerSeries(0);
        return log_derivative().integral();
    }

    /// P'/P for P with constant term 1; known through order N-1.
    PowerSeries log_derivative() const {
        if (!(c_[0] == F(1))) throw std::domain_error("PowerSeries::log_derivative: constant term must be 1");
        PowerSeries d = derivative();
        return d * truncated(d.order()).reciprocal();
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<F> c_;
};

using RationalSeries = PowerSeries<Rational>;

/// P'/P; throws std::domain_error unless the constant term is 1 and the order is at least 1.
RationalSeries series_log_derivative(const RationalSeries& P);
/// exp(integral_0^t P2), known through order P2.order() + 1.
RationalSeries series_exp_integral(const RationalSeries& P2);

/// Value of f at p = 1; throws PoleError when the reduced denominator vanishes there.
Rational rf_eval_at_one(const Scalar& f);

}  // namespace hbl
