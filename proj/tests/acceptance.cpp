// Acceptance gate: one PASS/FAIL line per criterion, each with its runtime
// against the allowed wall-clock limit. Exit status is 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hbl/commands.hpp"
#include "hbl/hecke_algebra.hpp"
#include "hbl/poincare.hpp"
#include "hbl/quadratic_algebra.hpp"
#include "hbl/rmatrix_io.hpp"
#include "hbl/schur.hpp"

using namespace hbl;

namespace {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Collects the first failed expectation of a criterion.
struct Probe {
    std::string failure;
    bool expect(bool ok, const std::string& what) {
        if (!ok && failure.empty()) failure = what;
        return ok;
    }
    template <class A, class B>
    bool equal(const A& got, const B& want, const std::string& what) {
        std::ostringstream s;
        s << what << ": got " << got << ", expected " << want;
        return expect(got == want, s.str());
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_s;
    std::function<void(Probe&)> body;
};

long rank_of(const HeckeOperator& op, std::size_t n, bool symmetric) {
    Representation rep(op, n);
    return static_cast<long>(rank(rep.of_element(symmetric ? symmetrizer(n, op.q) : antisymmetrizer(n, op.q))));
}

void axioms(Probe& pr) {
    for (const char* name : {"dj:2", "dj:3", "flip:1", "flip:2", "flip:3", "superflip:1|1"}) {
        const auto op = builtin_operator(name);
        const auto h = check_hecke(op);
        pr.expect(h.ok, std::string(name) + " Hecke: " + h.detail);
        const auto yb = check_yang_baxter(op);
        pr.expect(yb.ok, std::string(name) + " braid: " + yb.detail);
    }
}

void quantum_planes(Probe& pr) {
    for (std::size_t d : {2u, 3u}) {
        const auto op = dj_r_matrix(d);
        const auto S = build_s(op), L = build_lambda(op);
        const std::size_t top = d == 2 ? 5 : 4;
        for (std::size_t n = 0; n <= top; ++n) {
            const long dl = static_cast<long>(d), nl = static_cast<long>(n);
            const std::string at = "d=" + std::to_string(d) + " n=" + std::to_string(n);
            pr.equal(static_cast<long>(graded_dimension(S, n)), binomial(dl + nl - 1, nl), "s_n direct " + at);
            pr.equal(static_cast<long>(graded_dimension(L, n)), binomial(dl, nl), "lambda_n direct " + at);
            if (n == 0) continue;
            pr.equal(rank_of(op, n, true), binomial(dl + nl - 1, nl), "rank rho(x_n) " + at);
            pr.equal(rank_of(op, n, false), binomial(dl, nl), "rank rho(y_n) " + at);
        }
    }
}

void bialgebra_dims(Probe& pr) {
    const auto op = dj_r_matrix(2);
    const auto E = build_e(op);
    const auto e = to_naturals(poincare_E(t_specialize_p_from_operator(op, 4), 4).coeffs());
    const std::vector<long> want{1, 4, 10, 20, 35};
    for (std::size_t n = 0; n <= 3; ++n) {
        const std::string at = " n=" + std::to_string(n);
        pr.equal(static_cast<long>(graded_dimension(E, n)), want[n], "direct rank" + at);
        pr.equal(n == 0 ? 1L : static_cast<long>(centralizer_dimension(op, n)), want[n], "centralizer" + at);
        pr.equal(e[n], want[n], "exp-formula" + at);
    }
    pr.equal(e[4], want[4], "exp-formula n=4");
    pr.equal(e[4], binomial(4 + 4 - 1, 4), "C(d^2+n-1,n) n=4");
}

void dual_dims(Probe& pr) {
    const auto op = dj_r_matrix(2);
    const auto b = to_naturals(b_sequence(t_specialize_p_from_operator(op, 5), 5));
    for (std::size_t n = 0; n <= 5; ++n) {
        const long want = binomial(4, static_cast<long>(n));
        pr.equal(b[n], want, "b-recursion n=" + std::to_string(n));
        if (n >= 1) pr.equal(rf_eval_at_one(phi_n_trace(op, n)), Rational(want), "(tr Phi_n)_t n=" + std::to_string(n));
    }
    const auto E = build_e(op);
    for (std::size_t n = 1; n <= 3; ++n)
        pr.expect(echelonize(phi_n(op, n)) == lifted_relation_intersection(E, n),
                  "Im Phi_n differs from the intersection at n=" + std::to_string(n));
}

void character_recursion(Probe& pr) {
    const auto rep = verify_character_recursion(dj_r_matrix(2), 5);
    pr.equal(rep.rows.size(), std::size_t{5}, "rows");
    for (const auto& row : rep.rows)
        pr.expect(row.pass, "recursion fails at n=" + std::to_string(row.n) + ": " + row.lhs.to_string() +
                                " vs " + row.rhs.to_string());
    // The report must show the p_0 = 1 form failing at n = 1.
    pr.equal(rep.unit_p0_first_failure(), std::size_t{1}, "first failure with p_0 = 1");
    const auto report = cmd_poincare(load_operator(OperatorSource{"dj:2", std::nullopt, std::nullopt}), 5, RunOptions{});
    bool documented = false;
    for (const auto& note : report.notes) documented = documented || note["topic"] == "character-recursion.p0";
    pr.expect(documented, "report lacks the p_0 note");
}

void super_case(Probe& pr) {
    const auto op = super_flip(1, 1);
    const auto E = build_e(op);
    const auto p = t_specialize_p_from_operator(op, 3);
    for (std::size_t k = 0; k <= 3; ++k) pr.equal(p[k], Rational(k % 2 ? 0 : 2), "p_k k=" + std::to_string(k));
    const auto e = to_naturals(poincare_E(p, 3).coeffs());
    const std::vector<long> want{1, 4, 8, 12};
    for (std::size_t n = 0; n <= 3; ++n) {
        pr.equal(static_cast<long>(graded_dimension(E, n)), want[n], "direct rank n=" + std::to_string(n));
        pr.equal(e[n], want[n], "exp-formula n=" + std::to_string(n));
    }
    // No C(m+n-1,n) sequence passes through 1, 4, 8.
    for (long m = 1; m <= 8; ++m)
        pr.expect(!(binomial(m, 1) == 4 && binomial(m + 1, 2) == 8), "binomial coincidence at m=" + std::to_string(m));
}

void koszul(Probe& pr) {
    const auto op = dj_r_matrix(2);
    for (const char* which : {"S", "Lambda", "E"}) {
        const auto A = build_algebra(op, which);
        const auto v = distributivity_check(A, 4);
        pr.expect(v.verdict == Distributivity::distributive,
                  std::string("distributivity ") + which + ": " + to_string(v.verdict));
        pr.expect(koszul_series_check(A, 4), std::string("Koszul series ") + which);
    }
    pr.expect(koszul_series_check(build_e(super_flip(1, 1)), 4), "Koszul series E of superflip:1|1");
}

void schur_side(Probe& pr) {
    const struct {
        HeckeOperator op;
        std::size_t n;
        long want;
    } cases[] = {{dj_r_matrix(2), 2, 10}, {dj_r_matrix(2), 3, 20}, {super_flip(1, 1), 2, 8}};
    for (const auto& c : cases) {
        const auto s = schur_dimension_check(c.op, c.n);
        const std::string at = c.op.name + " n=" + std::to_string(c.n);
        pr.equal(s.sum_m_squared, c.want, "sum m^2 " + at);
        pr.equal(static_cast<long>(s.centralizer), c.want, "centralizer " + at);
        pr.equal(static_cast<long>(s.graded_dim_E), c.want, "dim E_n " + at);
        long dn = 1;
        for (std::size_t i = 0; i < c.n; ++i) dn *= static_cast<long>(c.op.d);
        pr.equal(s.sum_m_f, dn, "sum m f " + at);
    }
    const auto op = dj_r_matrix(2);
    for (std::size_t n = 1; n <= 3; ++n)
        pr.equal(bicommutant_dimension(op, n), hecke_image_dimension(op, n), "bicommutant n=" + std::to_string(n));
}

void properties(Probe& pr) {
    const Scalar q = Scalar::q();
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto x = symmetrizer(n, q), y = antisymmetrizer(n, q);
        const std::string at = " n=" + std::to_string(n);
        pr.expect(hecke_multiply(x, x, q) == x, "x_n idempotent" + at);
        pr.expect(hecke_multiply(y, y, q) == y, "y_n idempotent" + at);
        pr.expect(x == symmetrizer_direct(n, q), "x_n recursion vs definition" + at);
        for (const auto& w : Permutation::all(n)) {
            const auto T = HeckeElement::basis(w);
            const long l = static_cast<long>(w.length());
            pr.expect(hecke_multiply(T, x, q) == x * q.pow(l) && hecke_multiply(x, T, q) == x * q.pow(l),
                      "T_w x_n" + at);
            pr.expect(hecke_multiply(T, y, q) == y * Scalar(l % 2 ? -1 : 1), "T_w y_n" + at);
        }
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 6;
        auto random_space = [&] {
            std::vector<SparseRow<Rational>> rows(3);
            for (auto& r : rows)
                for (std::uint32_t c = 0; c < n; ++c)
                    if (long v = coef(rng); v != 0) r.push_back({c, Rational(v)});
            return Subspace<Rational>::span(n, rows);
        };
        const auto u = random_space(), w = random_space();
        pr.expect(subspace_sum(u, w).dim() + subspace_intersect(u, w).dim() == u.dim() + w.dim(),
                  "dimension law, trial " + std::to_string(trial));
    }
    for (const char* name : {"dj:2", "dj:3", "superflip:1|1"}) {
        const auto op = builtin_operator(name);
        const auto back = parse_rmatrix(serialize_rmatrix(op));
        pr.expect(back.r == op.r && back.q == op.q, std::string("round trip ") + name);
    }
    const auto report = cmd_report(load_operator(OperatorSource{"dj:2", std::nullopt, std::nullopt}), 3, RunOptions{});
    pr.expect(report.pass(), "report --builtin dj:2 -N 3 has failing checks");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "axioms for dj:2,3 flip:1,2,3 superflip:1|1", 10, axioms},
        {2, "quantum-plane dimensions by rank and by symmetrizer images", 120, quantum_planes},
        {3, "E dimensions of dj:2 by three routes", 600, bialgebra_dims},
        {4, "dual dimensions and Im Phi_n for dj:2", 900, dual_dims},
        {5, "character recursion for dj:2, n <= 5", 300, character_recursion},
        {6, "superflip:1|1 direct ranks against the exp-formula", 300, super_case},
        {7, "distributivity and Koszul series at n = 4", 1800, koszul},
        {8, "multiplicities, centralizer and double centralizer", 600, schur_side},
        {9, "Hecke, linalg and serialization properties; report dj:2 -N 3", 900, properties},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Probe pr;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(pr);
        } catch (const std::exception& e) {
            pr.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        pr.expect(secs < c.limit_s, "over the time limit");
        const bool ok = pr.failure.empty();
        failures += ok ? 0 : 1;
        std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                    c.limit_s, ok ? "" : " -- ", pr.failure.c_str());
    }
    return failures == 0 ? 0 : 1;
}
