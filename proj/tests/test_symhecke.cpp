#include <doctest.h>

#include "hbl/hecke_algebra.hpp"
#include "hbl/permutation.hpp"

using namespace hbl;

namespace {

std::size_t inversions(const Permutation& w) {
    std::size_t c = 0;
    for (std::size_t i = 1; i <= w.size(); ++i)
        for (std::size_t j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++c;
    return c;
}

HeckeElement T(const Permutation& w) { return HeckeElement::basis(w); }

}  // namespace

TEST_SUITE("symhecke") {

TEST_CASE("permutation basics") {
    CHECK(Permutation::all(4).size() == 24);
    const auto w = Permutation::from_images({3, 1, 2});
    CHECK(w(1) == 3);
    CHECK(w.length() == 2);
    CHECK(w.cycle_type() == std::vector<std::size_t>{3});
    CHECK(Permutation::from_images({2, 1, 4, 3}).cycle_type() == std::vector<std::size_t>{2, 2});
    CHECK(Permutation(3).is_identity());
    CHECK_THROWS(Permutation::from_images({1, 1, 2}));
    // (w*v)(i) = v(w(i)).
    const auto v = Permutation::transposition(3, 1);
    CHECK((w * v)(1) == v(w(1)));
    CHECK(Permutation::cycle_element(4, 4).cycle_type() == std::vector<std::size_t>{4});
    CHECK(Permutation::cycle_element(4, 4).length() == 3);
    CHECK(Permutation::cycle_element(4, 1).is_identity());
}

TEST_CASE("length and reduced words over all of S_5") {
    for (const auto& w : Permutation::all(5)) {
        CHECK(w.length() == inversions(w));
        const auto word = w.reduced_word();
        CHECK(word.size() == w.length());
        CHECK(Permutation::from_word(5, word) == w);
        CHECK(w * w.inverse() == Permutation(5));
        for (std::size_t i = 1; i < 5; ++i) {
            CHECK(w.times_transposition(i) == w * Permutation::transposition(5, i));
            CHECK(w.transposition_times(i) == Permutation::transposition(5, i) * w);
            CHECK(w.right_ascent(i) == (w.times_transposition(i).length() > w.length()));
        }
    }
}

TEST_CASE("Hecke relations") {
    const Scalar q = Scalar::q();
    const auto s1 = Permutation::transposition(3, 1), s2 = Permutation::transposition(3, 2);
    HeckeElement t1 = T(s1), t2 = T(s2);
    HeckeElement quad = HeckeElement::one(3) * q + t1 * (q - Scalar(1));
    CHECK(hecke_multiply(t1, t1, q) == quad);
    CHECK(hecke_multiply(hecke_multiply(t1, t2, q), t1, q) == hecke_multiply(hecke_multiply(t2, t1, q), t2, q));
    // T_w T_v = T_{wv} when lengths add.
    for (const auto& w : Permutation::all(3))
        for (const auto& v : Permutation::all(3))
            if ((w * v).length() == w.length() + v.length()) CHECK(hecke_multiply(T(w), T(v), q) == T(w * v));
}

TEST_CASE("multiplication is associative") {
    const Scalar q = Scalar::q();
    const auto all = Permutation::all(3);
    HeckeElement a(3), b(3), c(3);
    for (std::size_t i = 0; i < all.size(); ++i) {
        a.add_term(all[i], Scalar(static_cast<long>(i + 1)));
        b.add_term(all[i], Scalar::p().pow(static_cast<long>(i)) - Scalar(2));
        if (i % 2) c.add_term(all[i], q.inverse());
    }
    CHECK(hecke_multiply(hecke_multiply(a, b, q), c, q) == hecke_multiply(a, hecke_multiply(b, c, q), q));
}

TEST_CASE("symmetrizer and antisymmetrizer identities, n <= 4") {
    const Scalar q = Scalar::q();
    for (std::size_t n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const HeckeElement x = symmetrizer(n, q);
        const HeckeElement y = antisymmetrizer(n, q);
        CHECK(x == symmetrizer_direct(n, q));
        CHECK(hecke_multiply(x, x, q) == x);
        CHECK(hecke_multiply(y, y, q) == y);
        if (n >= 2) CHECK(hecke_multiply(x, y, q).is_zero());
        for (const auto& w : Permutation::all(n)) {
            const long l = static_cast<long>(w.length());
            CHECK(hecke_multiply(T(w), x, q) == x * q.pow(l));
            CHECK(hecke_multiply(x, T(w), q) == x * q.pow(l));
            CHECK(hecke_multiply(T(w), y, q) == y * Scalar(l % 2 ? -1 : 1));
            CHECK(hecke_multiply(y, T(w), q) == y * Scalar(l % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("symmetrizer needs invertible q-factorials") {
    // q = -1 kills [2]_q.
    CHECK_THROWS_AS(symmetrizer(2, Scalar(-1)), std::domain_error);
    CHECK_THROWS_AS(antisymmetrizer(2, Scalar(0)), std::domain_error);
}

}  // TEST_SUITE
