#include <doctest.h>

#include <omp.h>

#include "hbl/kernels.hpp"
#include "hbl/linalg.hpp"
#include "test_support.hpp"

using namespace hbl;
using hbl::test::random_qmatrix;
using hbl::test::random_rows;
using QSub = Subspace<Rational>;

namespace {

/// Dense Gaussian elimination, independent of the sparse kernels.
std::size_t dense_rank(const std::vector<SparseRow<Rational>>& rows, std::size_t n) {
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows) {
        std::vector<Rational> v(n, 0);
        for (const auto& e : r) v[e.col] = e.val;
        a.push_back(std::move(v));
    }
    std::size_t rank = 0;
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

std::vector<SparseRow<Rational>> concat(const QSub& u, const QSub& w) {
    auto rows = u.basis();
    rows.insert(rows.end(), w.basis().begin(), w.basis().end());
    return rows;
}

struct ThreadScope {
    explicit ThreadScope(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~ThreadScope() { omp_set_num_threads(saved); }
    int saved;
};

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank agrees with a dense oracle") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(hbl::test::small_int(1, 12));
        const std::size_t k = static_cast<std::size_t>(hbl::test::small_int(0, 14));
        auto m = random_qmatrix(k, n, 0.4);
        CHECK(rank(m) == dense_rank(m.row_data(), n));
        CHECK(echelonize(m).dim() == rank(m));
    }
}

TEST_CASE("canonical subspaces compare by span") {
    auto rows = random_rows(8, 4, 0.6);
    QSub u = QSub::span(8, rows);
    std::vector<SparseRow<Rational>> mixed;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseRow<Rational> r = rows[i];
        row_scale(r, Rational(static_cast<long>(i) + 2));
        if (i > 0) row_axpy(r, Rational(-3), rows[i - 1]);
        mixed.push_back(std::move(r));
    }
    std::reverse(mixed.begin(), mixed.end());
    CHECK(QSub::span(8, mixed) == u);
    for (const auto& r : rows) CHECK(u.contains(r));
}

TEST_CASE("dimension laws on random subspaces") {
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(hbl::test::small_int(2, 10));
        QSub u = QSub::span(n, random_rows(n, static_cast<std::size_t>(hbl::test::small_int(0, static_cast<long>(n))), 0.5));
        QSub w = QSub::span(n, random_rows(n, static_cast<std::size_t>(hbl::test::small_int(0, static_cast<long>(n))), 0.5));
        QSub s = subspace_sum(u, w);
        QSub i = subspace_intersect(u, w);
        CHECK(s.dim() == dense_rank(concat(u, w), n));
        CHECK(s.dim() + i.dim() == u.dim() + w.dim());
        CHECK(i.is_subspace_of(u));
        CHECK(i.is_subspace_of(w));
        CHECK(u.is_subspace_of(s));
        CHECK(w.is_subspace_of(s));
        CHECK(subspace_sum(w, u) == s);
        CHECK(subspace_intersect(w, u) == i);
        CHECK(subspace_intersect(u, s) == u);
    }
}

TEST_CASE("kernel has complementary dimension and is annihilated") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(hbl::test::small_int(1, 9));
        const std::size_t cols = static_cast<std::size_t>(hbl::test::small_int(1, 9));
        auto m = random_qmatrix(rows, cols, 0.5);
        auto ker = kernel(m);
        CHECK(ker.dim() + rank(m) == cols);
        for (const auto& v : ker.basis())
            for (std::size_t i = 0; i < rows; ++i) {
                Rational dot = 0;
                for (const auto& e : v) dot += m.at(i, e.col) * e.val;
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("commutant dimensions") {
    // Nothing to commute with: the full matrix algebra.
    CHECK(commutant(std::vector<QMatrix>{}, 3).dimension == 9);
    // diag(1,2,3) commutes only with diagonal matrices.
    QMatrix diag(3, 3);
    for (std::size_t i = 0; i < 3; ++i) diag.set(i, i, Rational(static_cast<long>(i + 1)));
    CHECK(commutant(std::vector<QMatrix>{diag}, 3).dimension == 3);
    // A single Jordan block: polynomials in it.
    QMatrix jordan(3, 3);
    jordan.set(0, 1, Rational(1));
    jordan.set(1, 2, Rational(1));
    auto c = commutant(std::vector<QMatrix>{jordan}, 3);
    CHECK(c.dimension == 3);
    for (const auto& x : c.basis_matrices())
        CHECK(kernels::multiply(x, jordan) == kernels::multiply(jordan, x));
}

TEST_CASE("inverse and lifts") {
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_qmatrix(5, 5, 0.7, 4);
        if (rank(m) < 5) {
            CHECK_THROWS_AS(inverse(m), std::domain_error);
            continue;
        }
        CHECK(kernels::multiply(m, inverse(m)) == QMatrix::identity(5));
    }
    auto r = random_qmatrix(4, 4, 0.6);
    CHECK(lift_to_position(r, 1, 3, 2) == kernels::kron(r, QMatrix::identity(2)));
    CHECK(lift_to_position(r, 2, 3, 2) == kernels::kron(QMatrix::identity(2), r));
    CHECK(lift_to_position(r, 1, 2, 2) == r);
}

TEST_CASE("trace of product matches the product's trace") {
    auto a = random_qmatrix(7, 7, 0.5), b = random_qmatrix(7, 7, 0.5);
    CHECK(kernels::trace_of_product(a, b) == kernels::multiply(a, b).trace());
}

TEST_CASE("serial and parallel kernels agree") {
    ThreadScope threads(4);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_qmatrix(30, 30, 0.2), b = random_qmatrix(30, 30, 0.2);
        CHECK(kernels::multiply(a, b, Exec::serial) == kernels::multiply(a, b, Exec::parallel));
        CHECK(kernels::kron(a, b, Exec::serial) == kernels::kron(a, b, Exec::parallel));
        CHECK(kernels::row_echelon(a.row_data(), true, Exec::serial) ==
              kernels::row_echelon(a.row_data(), true, Exec::parallel));
        CHECK(kernels::trace_of_product(a, b, Exec::serial) == kernels::trace_of_product(a, b, Exec::parallel));
    }
    // Scalar entries exercise the rational-function arithmetic under threads.
    Matrix s(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if ((i + 2 * j) % 3 == 0) s.set(i, j, hbl::test::random_scalar(2));
    CHECK(echelonize(s, Exec::serial) == echelonize(s, Exec::parallel));
    CHECK(kernels::multiply(s, s, Exec::serial) == kernels::multiply(s, s, Exec::parallel));
}

TEST_CASE("parallel_for rethrows on the calling thread") {
    ThreadScope threads(4);
    CHECK_THROWS_AS(parallel_for(100, Exec::parallel,
                                 [](std::size_t i) {
                                     if (i == 37) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
}

}  // TEST_SUITE
