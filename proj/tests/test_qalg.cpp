#include <doctest.h>

#include "hbl/hecke_algebra.hpp"
#include "hbl/quadratic_algebra.hpp"
#include "test_support.hpp"

using namespace hbl;

namespace {

using Dense = std::vector<std::vector<Rational>>;

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::size_t dense_rank(Dense a) {
    std::size_t rank = 0;
    const std::size_t n = a.empty() ? 0 : a[0].size();
    for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// The standard operator at a rational p, written out from its defining formula.
Dense dense_dj(std::size_t d, const Rational& p) {
    const Rational q = p * p;
    Dense r(d * d, std::vector<Rational>(d * d, 0));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            const std::size_t a = k * d + l;
            if (k == l) r[a][a] = q;
            if (k > l) r[a][l * d + k] = p;
            if (k < l) {
                r[a][a] = q - 1;
                r[a][l * d + k] = p;
            }
        }
    return r;
}

/// dim of V^(x)n modulo the ideal generated by Im(R - c) in degree n, via dense ranks.
std::size_t dense_quotient_dim(const Dense& r, std::size_t d, const Rational& c, std::size_t n) {
    Dense rel;
    for (std::size_t a = 0; a < d * d; ++a) {
        auto row = r[a];
        row[a] -= c;
        rel.push_back(row);
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= d;
    if (n < 2) return total;
    Dense rows;
    for (std::size_t pos = 0; pos + 1 < n; ++pos) {
        std::size_t left = 1, right = 1;
        for (std::size_t i = 0; i < pos; ++i) left *= d;
        for (std::size_t i = pos + 2; i < n; ++i) right *= d;
        for (std::size_t a = 0; a < left; ++a)
            for (const auto& g : rel)
                for (std::size_t b = 0; b < right; ++b) {
                    std::vector<Rational> v(total, 0);
                    for (std::size_t c2 = 0; c2 < d * d; ++c2) v[(a * d * d + c2) * right + b] = g[c2];
                    rows.push_back(std::move(v));
                }
    }
    return total - dense_rank(rows);
}

/// Coefficients of (1+t)^a / (1-t)^b through degree N.
std::vector<long> super_series(long a, long b, std::size_t N) {
    // [t^k] (1-t)^{-b} = C(b+k-1, k), which is 1 at k = 0 for every b.
    auto inv = [b](long k) { return k == 0 ? 1 : binomial(b + k - 1, k); };
    std::vector<long> out;
    for (long n = 0; n <= static_cast<long>(N); ++n) {
        long s = 0;
        for (long i = 0; i <= n; ++i) s += binomial(a, i) * inv(n - i);
        out.push_back(s);
    }
    return out;
}

ScalarSubspace line(std::initializer_list<long> v) {
    SparseRow<Scalar> r;
    std::uint32_t c = 0;
    for (long x : v) {
        if (x != 0) r.push_back({c, Scalar(x)});
        ++c;
    }
    return ScalarSubspace::span(v.size(), {r});
}

}  // namespace

TEST_SUITE("qalg") {

TEST_CASE("relation spaces") {
    const auto dj2 = dj_r_matrix(2);
    CHECK(build_s(dj2).relations.dim() == 1);
    CHECK(build_lambda(dj2).relations.dim() == 3);
    CHECK(build_e(dj2).m == 4);
    CHECK(build_e(dj2).relations.dim() == 6);
    const auto e1 = build_e(flip_operator(1));
    CHECK(e1.m == 1);
    CHECK(e1.relations.dim() == 0);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(graded_dimension(e1, n) == 1);
    CHECK(build_algebra(dj2, "lambda").label == build_lambda(dj2).label);
    CHECK_THROWS_AS(build_algebra(dj2, "T"), std::invalid_argument);
    auto bad = flip_operator(2);
    bad.r *= Scalar(2);
    CHECK_THROWS_AS(build_s(bad), AxiomError);
}

TEST_CASE("graded dimensions of the standard family") {
    const auto dj2 = dj_r_matrix(2);
    const auto S = build_s(dj2), L = build_lambda(dj2), E = build_e(dj2);
    for (std::size_t n = 0; n <= 5; ++n) {
        CAPTURE(n);
        const long nl = static_cast<long>(n);
        CHECK(graded_dimension(S, n) == static_cast<std::size_t>(binomial(nl + 1, nl)));
        CHECK(graded_dimension(L, n) == static_cast<std::size_t>(binomial(2, nl)));
    }
    for (std::size_t n = 0; n <= 3; ++n)
        CHECK(graded_dimension(E, n) == static_cast<std::size_t>(binomial(static_cast<long>(n) + 3, static_cast<long>(n))));
    const std::vector<std::size_t> b{1, 4, 6, 4, 1};
    for (std::size_t n = 0; n < b.size(); ++n) CHECK(dual_graded_dimension(E, n) == b[n]);
    CHECK(dual_graded_dimension(S, 2) == 1);

    const auto dj3 = dj_r_matrix(3);
    const auto S3 = build_s(dj3), L3 = build_lambda(dj3);
    for (std::size_t n = 0; n <= 4; ++n) {
        const long nl = static_cast<long>(n);
        CHECK(graded_dimension(S3, n) == static_cast<std::size_t>(binomial(nl + 2, nl)));
        CHECK(graded_dimension(L3, n) == static_cast<std::size_t>(binomial(3, nl)));
    }
}

TEST_CASE("dimensions agree with a dense oracle at rational points") {
    for (const Rational& p0 : {Rational(2), Rational(-3, 5)}) {
        for (std::size_t d = 2; d <= 3; ++d) {
            const auto op = specialize(dj_r_matrix(d), p0);
            const auto dense = dense_dj(d, p0);
            const auto S = build_s(op), L = build_lambda(op);
            for (std::size_t n = 2; n <= (d == 2 ? 4u : 3u); ++n) {
                CAPTURE(d);
                CAPTURE(n);
                CHECK(graded_dimension(S, n) == dense_quotient_dim(dense, d, p0 * p0, n));
                CHECK(graded_dimension(L, n) == dense_quotient_dim(dense, d, Rational(-1), n));
            }
        }
    }
}

TEST_CASE("dimensions do not depend on the specialization") {
    const auto dj2 = dj_r_matrix(2);
    const auto E = build_e(dj2);
    for (int trial = 0; trial < 2; ++trial) {
        Rational p0 = hbl::test::random_point();
        const auto Ep = build_e(specialize(dj2, p0));
        for (std::size_t n = 0; n <= 3; ++n) {
            CHECK(graded_dimension(Ep, n) == graded_dimension(E, n));
            CHECK(dual_graded_dimension(Ep, n) == dual_graded_dimension(E, n));
        }
    }
}

TEST_CASE("super flip matches its closed forms") {
    const auto E = build_e(super_flip(1, 1));
    const auto e = super_series(2, 2, 3);   // (1+t)^2/(1-t)^2
    CHECK(e == std::vector<long>{1, 4, 8, 12});
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(graded_dimension(E, n) == static_cast<std::size_t>(e[n]));
        CHECK(dual_graded_dimension(E, n) == static_cast<std::size_t>(e[n]));
    }
    const auto S = build_s(super_flip(1, 1));
    const auto s = super_series(1, 1, 4);  // (1+t)/(1-t)
    for (std::size_t n = 0; n <= 4; ++n) CHECK(graded_dimension(S, n) == static_cast<std::size_t>(s[n]));
}

TEST_CASE("symmetric and exterior parts match the symmetrizer images") {
    for (const char* name : {"dj:2", "dj:3"}) {
        const auto op = builtin_operator(name);
        const auto S = build_s(op), L = build_lambda(op);
        for (std::size_t n = 1; n <= (op.d == 2 ? 4u : 3u); ++n) {
            CAPTURE(name);
            CAPTURE(n);
            Representation rep(op, n);
            CHECK(graded_dimension(S, n) == rank(rep.of_element(symmetrizer(n, op.q))));
            CHECK(graded_dimension(L, n) == rank(rep.of_element(antisymmetrizer(n, op.q))));
        }
    }
}

TEST_CASE("Koszul series identity") {
    const auto dj2 = dj_r_matrix(2);
    CHECK(koszul_series_check(build_s(dj2), 4));
    CHECK(koszul_series_check(build_lambda(dj2), 4));
    CHECK(koszul_series_check(build_e(dj2), 4));
    CHECK(koszul_series_check(build_e(super_flip(1, 1)), 3));
    CHECK(koszul_series_identity({1, 2, 3, 4, 5}, {1, 2, 1, 0, 0}, 4));
    CHECK_FALSE(koszul_series_identity({1, 2, 3, 4, 5}, {1, 2, 2, 0, 0}, 4));
}

TEST_CASE("distributivity verdicts") {
    // Three lines in a plane.
    std::vector<ScalarSubspace> lines{line({1, 0}), line({0, 1}), line({1, 1})};
    const auto bad = distributivity_check(lines);
    CHECK(bad.verdict == Distributivity::non_distributive);
    REQUIRE(bad.witness.has_value());
    const auto [u, v, w] = *bad.witness;
    CHECK(bad.dims[u] == 1);
    CHECK(bad.dims[v] == 1);
    CHECK(bad.dims[w] == 1);

    // Coordinate subspaces generate a Boolean lattice.
    std::vector<ScalarSubspace> coords{line({1, 0, 0}), line({0, 1, 0}), line({0, 0, 1})};
    CHECK(distributivity_check(coords).verdict == Distributivity::distributive);

    const auto dj2 = dj_r_matrix(2);
    for (const auto& a : {build_s(dj2), build_lambda(dj2), build_e(dj2)})
        CHECK(distributivity_check(a, 3).verdict == Distributivity::distributive);
    CHECK(distributivity_check(build_s(dj2), 4).verdict == Distributivity::distributive);

    ClosureLimits tiny;
    tiny.max_elements = 2;
    CHECK(distributivity_check(build_s(dj2), 4, tiny).verdict == Distributivity::inconclusive);
    CHECK_THROWS(distributivity_check(build_s(dj2), 2));
    CHECK(to_string(Distributivity::non_distributive) == "non_distributive");
}

}  // TEST_SUITE
