#include "hbl/poincare.hpp"

#include <algorithm>
#include <stdexcept>

#include "hbl/hecke_algebra.hpp"

namespace hbl {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::direct_rank: return "direct-rank";
        case Provenance::formula: return "formula";
        case Provenance::both_agree: return "both-agree";
    }
    return "?";
}

DimensionTable DimensionTable::single(std::string label, std::vector<long> values, Provenance p) {
    DimensionTable t{std::move(label), std::move(values), {}};
    t.provenance.assign(t.values.size(), p);
    return t;
}

MergedTable merge_tables(std::string label, const std::vector<long>& direct, const std::vector<long>& formula) {
    MergedTable m;
    m.table.label = std::move(label);
    const std::size_t n = std::max(direct.size(), formula.size());
    for (std::size_t k = 0; k < n; ++k) {
        const bool hd = k < direct.size();
        const bool hf = k < formula.size();
        if (hd && hf) {
            m.table.values.push_back(direct[k]);
            if (direct[k] == formula[k]) {
                m.table.provenance.push_back(Provenance::both_agree);
            } else {
                m.table.provenance.push_back(Provenance::direct_rank);
                m.disagreements.push_back(k);
            }
        } else if (hd) {
            m.table.values.push_back(direct[k]);
            m.table.provenance.push_back(Provenance::direct_rank);
        } else {
            m.table.values.push_back(formula[k]);
            m.table.provenance.push_back(Provenance::formula);
        }
    }
    return m;
}

std::vector<long> to_naturals(const std::vector<Rational>& v) {
    std::vector<long> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (x.get_den() != 1 || x < 0 || !x.get_num().fits_slong_p())
            throw std::domain_error("to_naturals: " + to_string(x) + " is not a natural number");
        out.push_back(x.get_num().get_si());
    }
    return out;
}

std::vector<Rational> p_sequence_from_s(const RationalSeries& PS, std::size_t N) {
    if (PS.order() < N + 1) throw std::invalid_argument("p_sequence_from_s: series order must be at least N+1");
    auto L = series_log_derivative(PS);
    return std::vector<Rational>(L.coeffs().begin(), L.coeffs().begin() + static_cast<std::ptrdiff_t>(N + 1));
}

RationalSeries poincare_E(const std::vector<Rational>& p, std::size_t N) {
    if (N == 0) return RationalSeries(std::vector<Rational>{Rational(1)});
    if (p.size() < N) throw std::invalid_argument("poincare_E: need p_0..p_{N-1}");
    auto P2 = RationalSeries::generate(N - 1, [&](std::size_t k) { return p[k] * p[k]; });
    return series_exp_integral(P2);
}

std::vector<Rational> b_sequence(const std::vector<Rational>& p, std::size_t N) {
    if (p.size() < N) throw std::invalid_argument("b_sequence: need p_0..p_{N-1}");
    std::vector<Rational> b{Rational(1)};
    for (std::size_t n = 1; n <= N; ++n) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) {
            Rational term = p[k] * p[k] * b[n - k - 1];
            if (k % 2) s -= term;
            else s += term;
        }
        b.push_back(s / Rational(static_cast<long>(n)));
    }
    return b;
}

std::vector<Scalar> cycle_characters(const HeckeOperator& op, std::size_t K) {
    std::vector<Scalar> p{Scalar(static_cast<long>(op.d))};
    for (std::size_t k = 1; k <= K; ++k) p.push_back(character(op, Permutation::cycle_element(k + 1, k + 1)));
    return p;
}

std::vector<Rational> t_specialize_p_from_operator(const HeckeOperator& op, std::size_t N) {
    std::vector<Rational> out;
    for (const auto& c : cycle_characters(op, N)) out.push_back(rf_eval_at_one(c));
    return out;
}

std::vector<Scalar> symmetrizer_characters(const HeckeOperator& op, std::size_t N) {
    std::vector<Scalar> s{Scalar(1)};
    for (std::size_t n = 1; n <= N; ++n) {
        Representation rep(op, n);
        s.push_back(rep.character(symmetrizer(n, op.q)));
    }
    return s;
}

namespace {

std::size_t first_failure(const std::vector<RecursionRow>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return r.n;
    return 0;
}

}  // namespace

bool CharacterRecursionReport::pass() const { return first_failure(rows) == 0; }
std::size_t CharacterRecursionReport::unit_p0_first_failure() const { return first_failure(unit_p0_rows); }
std::size_t CharacterRecursionReport::scaled_first_failure() const { return first_failure(scaled_rows); }

CharacterRecursionReport verify_character_recursion(const HeckeOperator& op, std::size_t N) {
    if (N < 1) throw std::invalid_argument("verify_character_recursion: N must be at least 1");
    CharacterRecursionReport rep;
    rep.s = symmetrizer_characters(op, N);
    rep.p = cycle_characters(op, N - 1);
    const Scalar d(static_cast<long>(op.d));
    for (std::size_t n = 1; n <= N; ++n) {
        const Scalar lhs = q_integer(static_cast<unsigned>(n), op.q) * rep.s[n];
        Scalar tail;  // sum over 1 <= k < n of p_k s_{n-1-k}
        for (std::size_t k = 1; k < n; ++k) tail += rep.p[k] * rep.s[n - 1 - k];
        const Scalar rhs = rep.p[0] * rep.s[n - 1] + tail;
        rep.rows.push_back({n, lhs, rhs, lhs == rhs});
        const Scalar unit_rhs = rep.s[n - 1] + tail;
        rep.unit_p0_rows.push_back({n, lhs, unit_rhs, lhs == unit_rhs});
        Scalar middle;
        for (std::size_t k = 2; k < n; ++k) middle += rep.p[k - 1] * rep.s[n - k];
        Scalar scaled_rhs = rep.p[0] * rep.s[n - 1] + middle * d.pow(-static_cast<long>(n));
        if (n >= 2) scaled_rhs += rep.p[n - 1];
        rep.scaled_rows.push_back({n, lhs, scaled_rhs, lhs == scaled_rhs});
    }
    return rep;
}

}  // namespace hbl
