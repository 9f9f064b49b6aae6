#include "hbl/quadratic_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hbl {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

void require_axioms(const HeckeOperator& op) {
    if (auto c = check_hecke(op); !c.ok) throw AxiomError(op.name + ": Hecke relation fails: " + c.detail);
    if (auto c = check_yang_baxter(op); !c.ok) throw AxiomError(op.name + ": braid relation fails: " + c.detail);
}

}  // namespace

QuadraticAlgebra build_lambda(const HeckeOperator& op) {
    require_axioms(op);
    const std::size_t n = op.d * op.d;
    return {"Lambda(" + op.name + ")", op.d, echelonize(op.r + Matrix::identity(n))};
}

QuadraticAlgebra build_s(const HeckeOperator& op) {
    require_axioms(op);
    const std::size_t n = op.d * op.d;
    return {"S(" + op.name + ")", op.d, echelonize(op.r - Matrix::scalar(n, op.q))};
}

QuadraticAlgebra build_e(const HeckeOperator& op) {
    require_axioms(op);
    const std::size_t m = op.d * op.d;
    return {"E(" + op.name + ")", m, echelonize(rbar(op) - Matrix::identity(m * m))};
}

QuadraticAlgebra build_algebra(const HeckeOperator& op, const std::string& which) {
    std::string w = which;
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return std::tolower(c); });
    if (w == "s") return build_s(op);
    if (w == "lambda") return build_lambda(op);
    if (w == "e") return build_e(op);
    throw std::invalid_argument("unknown algebra '" + which + "' (expected S, Lambda or E)");
}

std::vector<ScalarSubspace> relation_lifts(const QuadraticAlgebra& a, std::size_t n) {
    std::vector<ScalarSubspace> lifts;
    if (n < 2) return lifts;
    const std::size_t m = a.m;
    const std::size_t m2 = m * m;
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t left = ipow(m, i - 1);
        const std::size_t right = ipow(m, n - i - 1);
        std::vector<SparseRow<Scalar>> rows;
        rows.reserve(left * right * a.relations.dim());
        for (std::size_t l = 0; l < left; ++l)
            for (const auto& b : a.relations.basis())
                for (std::size_t r = 0; r < right; ++r) {
                    SparseRow<Scalar> row;
                    row.reserve(b.size());
                    for (const auto& e : b)
                        row.push_back({static_cast<std::uint32_t>((l * m2 + e.col) * right + r), e.val});
                    rows.push_back(std::move(row));
                }
        lifts.push_back(ScalarSubspace::span(ipow(m, n), std::move(rows)));
    }
    return lifts;
}

std::size_t graded_dimension(const QuadraticAlgebra& a, std::size_t n) {
    if (n == 0) return 1;
    if (n == 1) return a.m;
    auto lifts = relation_lifts(a, n);
    ScalarSubspace sum = lifts.front();
    for (std::size_t i = 1; i < lifts.size(); ++i) sum = subspace_sum(sum, lifts[i]);
    return ipow(a.m, n) - sum.dim();
}

ScalarSubspace lifted_relation_intersection(const QuadraticAlgebra& a, std::size_t n) {
    if (n < 2) return ScalarSubspace::whole(ipow(a.m, n));
    auto lifts = relation_lifts(a, n);
    ScalarSubspace meet = lifts.front();
    for (std::size_t i = 1; i < lifts.size() && !meet.is_zero(); ++i) meet = subspace_intersect(meet, lifts[i]);
    return meet;
}

std::size_t dual_graded_dimension(const QuadraticAlgebra& a, std::size_t n) {
    if (n == 0) return 1;
    if (n == 1) return a.m;
    return lifted_relation_intersection(a, n).dim();
}

bool koszul_series_identity(const std::vector<long>& dims, const std::vector<long>& dual_dims, std::size_t N) {
    if (dims.size() <= N || dual_dims.size() <= N)
        throw std::invalid_argument("koszul_series_identity: sequences shorter than N+1");
    for (std::size_t n = 1; n <= N; ++n) {
        long s = 0;
        for (std::size_t i = 0; i <= n; ++i) s += ((i % 2) ? -1 : 1) * dual_dims[i] * dims[n - i];
        if (s != 0) return false;
    }
    return true;
}

bool koszul_series_check(const QuadraticAlgebra& a, std::size_t N) {
    if (N < 1) throw std::invalid_argument("koszul_series_check: N must be at least 1");
    std::vector<long> dims, duals;
    for (std::size_t n = 0; n <= N; ++n) {
        dims.push_back(static_cast<long>(graded_dimension(a, n)));
        duals.push_back(static_cast<long>(dual_graded_dimension(a, n)));
    }
    return koszul_series_identity(dims, duals, N);
}

std::string to_string(Distributivity d) {
    switch (d) {
        case Distributivity::distributive: return "distributive";
        case Distributivity::non_distributive: return "non_distributive";
        case Distributivity::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

class LatticeClosure {
public:
    explicit LatticeClosure(ClosureLimits limits) : limits_(limits) {}

    // Index of s, inserting it if new; nullopt if the element cap is hit.
    std::optional<std::size_t> intern(ScalarSubspace s) {
        auto key = std::make_pair(s.dim(), s.pivot_columns());
        auto& bucket = index_[key];
        for (std::size_t idx : bucket)
            if (elements_[idx] == s) return idx;
        if (elements_.size() >= limits_.max_elements) return std::nullopt;
        elements_.push_back(std::move(s));
        bucket.push_back(elements_.size() - 1);
        return elements_.size() - 1;
    }

    // Fills join/meet for the pair; false if the cap is hit.
    bool combine(std::size_t i, std::size_t j) {
        const auto& u = elements_[i];
        const auto& w = elements_[j];
        ScalarSubspace sum = subspace_sum(u, w);
        std::size_t join_idx, meet_idx;
        if (sum.dim() == w.dim()) {  // u inside w
            join_idx = j;
            meet_idx = i;
        } else if (sum.dim() == u.dim()) {
            join_idx = i;
            meet_idx = j;
        } else {
            auto jn = intern(std::move(sum));
            if (!jn) return false;
            join_idx = *jn;
            const std::size_t meet_dim = elements_[i].dim() + elements_[j].dim() - elements_[join_idx].dim();
            ScalarSubspace meet = meet_dim == 0 ? ScalarSubspace(elements_[i].ambient())
                                                : subspace_intersect(elements_[i], elements_[j]);
            auto mt = intern(std::move(meet));
            if (!mt) return false;
            meet_idx = *mt;
        }
        join_[{i, j}] = join_[{j, i}] = join_idx;
        meet_[{i, j}] = meet_[{j, i}] = meet_idx;
        return true;
    }

    DistributivityVerdict run(const std::vector<ScalarSubspace>& gens) {
        DistributivityVerdict v;
        for (const auto& g : gens) {
            if (!intern(g)) return finish(v, Distributivity::inconclusive);
        }
        std::size_t done = 0;  // elements [0, done) have all pairs among themselves combined
        for (v.rounds = 1; v.rounds <= limits_.max_rounds; ++v.rounds) {
            const std::size_t size = elements_.size();
            for (std::size_t j = done; j < size; ++j)
                for (std::size_t i = 0; i <= j; ++i)
                    if (i == j) {
                        join_[{i, i}] = meet_[{i, i}] = i;
                    } else if (!combine(i, j)) {
                        return finish(v, Distributivity::inconclusive);
                    }
            done = size;
            if (elements_.size() == size) return check_law(v);
        }
        v.rounds = limits_.max_rounds;
        return finish(v, Distributivity::inconclusive);
    }

private:
    DistributivityVerdict check_law(DistributivityVerdict& v) {
        const std::size_t n = elements_.size();
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) {
                    const std::size_t lhs = meet_.at({u, join_.at({a, b})});
                    const std::size_t rhs = join_.at({meet_.at({u, a}), meet_.at({u, b})});
                    if (lhs != rhs) {
                        v.witness = std::array<std::size_t, 3>{u, a, b};
                        return finish(v, Distributivity::non_distributive);
                    }
                }
        return finish(v, Distributivity::distributive);
    }

    DistributivityVerdict finish(DistributivityVerdict& v, Distributivity d) {
        v.verdict = d;
        v.lattice_size = elements_.size();
        v.dims.clear();
        for (const auto& e : elements_) v.dims.push_back(e.dim());
        return v;
    }

    ClosureLimits limits_;
    std::vector<ScalarSubspace> elements_;
    std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::vector<std::size_t>> index_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> join_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> meet_;
};

}  // namespace

DistributivityVerdict distributivity_check(const std::vector<ScalarSubspace>& generators, ClosureLimits limits) {
    if (generators.empty()) throw std::invalid_argument("distributivity_check: no generators");
    for (const auto& g : generators) generators.front().check_ambient(g);
    return LatticeClosure(limits).run(generators);
}

DistributivityVerdict distributivity_check(const QuadraticAlgebra& a, std::size_t n, ClosureLimits limits) {
    if (n < 3) throw std::invalid_argument("distributivity_check: degree must be at least 3");
    return distributivity_check(relation_lifts(a, n), limits);
}

}  // namespace hbl
