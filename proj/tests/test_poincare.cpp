#include <doctest.h>

#include "hbl/poincare.hpp"
#include "hbl/quadratic_algebra.hpp"

using namespace hbl;

namespace {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Rational> constant(long c, std::size_t len) { return std::vector<Rational>(len, Rational(c)); }

std::vector<Rational> alternating(std::size_t len) {
    std::vector<Rational> v;
    for (std::size_t k = 0; k < len; ++k) v.emplace_back(k % 2 ? 0 : 2);
    return v;
}

std::vector<Rational> as_rationals(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

RationalSeries graded_series(const QuadraticAlgebra& a, std::size_t order) {
    return RationalSeries::generate(order, [&](std::size_t n) { return Rational(static_cast<long>(graded_dimension(a, n))); });
}

}  // namespace

TEST_SUITE("poincare") {

TEST_CASE("log-derivative sequences") {
    const auto inv_sq = RationalSeries::generate(5, [](std::size_t k) { return Rational(static_cast<long>(k + 1)); });
    CHECK(p_sequence_from_s(inv_sq, 4) == constant(2, 5));
    CHECK(p_sequence_from_s(RationalSeries(as_rationals({1, 1, 0, 0})), 2) == as_rationals({1, -1, 1}));
    CHECK(p_sequence_from_s(RationalSeries(as_rationals({1, 0, 0, 0})), 2) == constant(0, 3));
    CHECK_THROWS(p_sequence_from_s(inv_sq, 5));
}

TEST_CASE("exp-formula and b-recursion examples") {
    CHECK(poincare_E(constant(2, 4), 4).coeffs() == as_rationals({1, 4, 10, 20, 35}));
    CHECK(poincare_E(alternating(4), 4).coeffs() == as_rationals({1, 4, 8, 12, 16}));
    CHECK(poincare_E(constant(0, 4), 4).coeffs() == as_rationals({1, 0, 0, 0, 0}));
    CHECK(b_sequence(constant(2, 5), 5) == as_rationals({1, 4, 6, 4, 1, 0}));
    CHECK(b_sequence(alternating(4), 4) == as_rationals({1, 4, 8, 12, 16}));
    CHECK(b_sequence(constant(0, 3), 3) == as_rationals({1, 0, 0, 0}));
}

TEST_CASE("classical closed forms for constant p") {
    // p_k = d gives (1-t)^{-d^2} and (1+t)^{d^2}.
    for (long d = 1; d <= 4; ++d) {
        const auto e = poincare_E(constant(d, 6), 6);
        const auto b = b_sequence(constant(d, 6), 6);
        for (long n = 0; n <= 6; ++n) {
            CAPTURE(d);
            CAPTURE(n);
            CHECK(e[static_cast<std::size_t>(n)] == binomial(d * d + n - 1, n));
            CHECK(b[static_cast<std::size_t>(n)] == binomial(d * d, n));
        }
    }
}

TEST_CASE("Koszul duality closes the two recursions") {
    for (const auto& p : {constant(2, 6), constant(3, 6), alternating(6), as_rationals({1, 3, -1, 2, 0, 5})}) {
        const std::size_t N = 6;
        const auto e = poincare_E(p, N);
        const auto b = b_sequence(p, N);
        std::vector<Rational> signed_b;
        for (std::size_t n = 0; n <= N; ++n) signed_b.push_back(n % 2 ? -b[n] : b[n]);
        const auto prod = e * RationalSeries(signed_b);
        for (std::size_t n = 0; n <= N; ++n) CHECK(prod[n] == (n == 0 ? 1 : 0));
    }
}

TEST_CASE("trace-specialized sequences") {
    CHECK(t_specialize_p_from_operator(dj_r_matrix(2), 4) == constant(2, 5));
    CHECK(t_specialize_p_from_operator(dj_r_matrix(3), 3) == constant(3, 4));
    CHECK(t_specialize_p_from_operator(flip_operator(3), 3) == constant(3, 4));
    CHECK(t_specialize_p_from_operator(super_flip(1, 1), 4) == as_rationals({2, 0, 2, 0, 2}));
    const auto c = cycle_characters(dj_r_matrix(2), 1);
    CHECK(c[0] == Scalar(2));
    CHECK(c[1] == Scalar(3) * Scalar::q() - Scalar(1));
    const auto s = symmetrizer_characters(dj_r_matrix(2), 4);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(s[n] == Scalar(static_cast<long>(n + 1)));
}

TEST_CASE("pipeline consistency: symmetric part against traces") {
    for (const char* name : {"dj:2", "dj:3", "flip:2", "flip:3", "superflip:1|1"}) {
        CAPTURE(name);
        const auto op = builtin_operator(name);
        const std::size_t K = op.d == 3 ? 3 : 4;
        CHECK(p_sequence_from_s(graded_series(build_s(op), K + 1), K) == t_specialize_p_from_operator(op, K));
    }
}

TEST_CASE("formulas against direct ranks") {
    for (const char* name : {"dj:2", "flip:2", "superflip:1|1"}) {
        CAPTURE(name);
        const auto op = builtin_operator(name);
        const auto p = t_specialize_p_from_operator(op, 4);
        const auto e = to_naturals(poincare_E(p, 3).coeffs());
        const auto b = to_naturals(b_sequence(p, 4));
        const auto E = build_e(op);
        for (std::size_t n = 0; n <= 3; ++n) CHECK(e[n] == static_cast<long>(graded_dimension(E, n)));
        for (std::size_t n = 0; n <= 4; ++n) CHECK(b[n] == static_cast<long>(dual_graded_dimension(E, n)));
    }
}

TEST_CASE("character recursion") {
    const auto rep = verify_character_recursion(dj_r_matrix(2), 5);
    CHECK(rep.pass());
    REQUIRE(rep.rows.size() == 5);
    const Scalar q = Scalar::q();
    CHECK(rep.rows[1].n == 2);
    CHECK(rep.rows[1].lhs == (Scalar(1) + q) * Scalar(3));
    CHECK(rep.rows[1].rhs == Scalar(3) * q + Scalar(3));
    // With p_0 = 1 the base case already fails; the d^{-n} weights first fail at n = 3.
    CHECK(rep.unit_p0_first_failure() == 1);
    CHECK(rep.scaled_first_failure() == 3);

    for (const char* name : {"dj:3", "superflip:1|1", "flip:2"}) {
        CAPTURE(name);
        CHECK(verify_character_recursion(builtin_operator(name), 3).pass());
    }
    CHECK(verify_character_recursion(specialize(dj_r_matrix(2), Rational(5, 3)), 4).pass());
}

TEST_CASE("integrality guard and table merging") {
    CHECK(to_naturals(as_rationals({1, 4, 6})) == std::vector<long>{1, 4, 6});
    CHECK_THROWS_AS(to_naturals({Rational(1, 2)}), std::domain_error);
    CHECK_THROWS_AS(to_naturals({Rational(-1)}), std::domain_error);

    const auto m = merge_tables("E", {1, 4, 10}, {1, 4, 10, 20, 35});
    CHECK(m.disagreements.empty());
    CHECK(m.table.values == std::vector<long>{1, 4, 10, 20, 35});
    CHECK(m.table.provenance[2] == Provenance::both_agree);
    CHECK(m.table.provenance[4] == Provenance::formula);
    const auto bad = merge_tables("E", {1, 4, 9}, {1, 4, 10});
    CHECK(bad.disagreements == std::vector<std::size_t>{2});
    CHECK(bad.table.values[2] == 9);
    CHECK(bad.table.provenance[2] == Provenance::direct_rank);
    CHECK(to_string(Provenance::both_agree) == "both-agree");
}

}  // TEST_SUITE
