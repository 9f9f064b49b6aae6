#include "hbl/power_series.hpp"

namespace hbl {

RationalSeries series_log_derivative(const RationalSeries& P) {
    if (P.order() < 1) throw std::domain_error("series_log_derivative: truncation order must be at least 1");
    if (P[0] != 1) throw std::domain_error("series_log_derivative: constant term must be 1");
    return P.log_derivative();
}

RationalSeries series_exp_integral(const RationalSeries& P2) { return P2.integral().exp(); }

Rational rf_eval_at_one(const Scalar& f) { return f.eval_at_one(); }

}  // namespace hbl
