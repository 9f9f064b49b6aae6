#include "hbl/schur.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hbl/linalg.hpp"
#include "hbl/power_series.hpp"
#include "hbl/quadratic_algebra.hpp"

namespace hbl {

namespace {

void partitions_rec(std::size_t rest, std::size_t max_part, Partition& cur, std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t k = std::min(rest, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(rest - k, k, cur, out);
        cur.pop_back();
    }
}

Rational factorial(std::size_t n) {
    Rational f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long>(k);
    return f;
}

using BetaSet = std::set<long>;

long mn_character(const BetaSet& beta, const Partition& mu, std::size_t idx,
                  std::map<std::pair<BetaSet, Partition>, long>& memo) {
    if (idx == mu.size()) return 1;
    auto key = std::make_pair(beta, Partition(mu.begin() + static_cast<std::ptrdiff_t>(idx), mu.end()));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const long r = static_cast<long>(mu[idx]);
    long total = 0;
    for (long b : beta) {
        const long to = b - r;
        if (to < 0 || beta.count(to)) continue;
        // Rim hook height = number of beads jumped over.
        long between = std::distance(beta.upper_bound(to), beta.lower_bound(b));
        BetaSet next = beta;
        next.erase(b);
        next.insert(to);
        const long sub = mn_character(next, mu, idx + 1, memo);
        total += (between % 2 ? -sub : sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::vector<Partition> partitions(std::size_t n) {
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Rational class_size(const Partition& mu) {
    const std::size_t n = std::accumulate(mu.begin(), mu.end(), std::size_t{0});
    std::map<std::size_t, std::size_t> mult;
    for (std::size_t part : mu) ++mult[part];
    Rational z = 1;
    for (const auto& [part, k] : mult) {
        for (std::size_t i = 0; i < k; ++i) z *= static_cast<long>(part);
        z *= factorial(k);
    }
    return factorial(n) / z;
}

Permutation cycle_type_representative(const Partition& mu) {
    const std::size_t n = std::accumulate(mu.begin(), mu.end(), std::size_t{0});
    std::vector<std::size_t> word;
    std::size_t start = 1;
    for (std::size_t len : mu) {
        for (std::size_t i = 0; i + 1 < len; ++i) word.push_back(start + i);
        start += len;
    }
    return Permutation::from_word(n, word);
}

CharacterTable sn_character_table(std::size_t n) {
    if (n == 0 || n > 8) throw std::invalid_argument("sn_character_table: need 1 <= n <= 8");
    CharacterTable t;
    t.n = n;
    t.parts = partitions(n);
    for (const auto& mu : t.parts) t.class_sizes.push_back(class_size(mu));
    std::map<std::pair<BetaSet, Partition>, long> memo;
    for (const auto& lambda : t.parts) {
        BetaSet beta;
        const long k = static_cast<long>(lambda.size());
        for (long i = 0; i < k; ++i) beta.insert(static_cast<long>(lambda[i]) + (k - 1 - i));
        std::vector<long> row;
        for (const auto& mu : t.parts) row.push_back(mn_character(beta, mu, 0, memo));
        t.chi.push_back(std::move(row));
    }
    return t;
}

long MultiplicityTable::sum_squares() const {
    long s = 0;
    for (long x : m) s += x * x;
    return s;
}

long MultiplicityTable::weighted_sum() const {
    long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * f[i];
    return s;
}

MultiplicityTable multiplicities(const HeckeOperator& op, std::size_t n) {
    const CharacterTable ct = sn_character_table(n);
    Representation rep(op, n);
    std::vector<Rational> traces;
    for (const auto& mu : ct.parts) traces.push_back(rf_eval_at_one(rep.character(cycle_type_representative(mu))));
    const Rational nfact = factorial(n);
    MultiplicityTable mt;
    mt.n = n;
    mt.parts = ct.parts;
    for (std::size_t i = 0; i < ct.parts.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < ct.parts.size(); ++j) s += ct.class_sizes[j] * traces[j] * ct.chi[i][j];
        s /= nfact;
        if (s.get_den() != 1 || s < 0)
            throw MultiplicityError("multiplicity of a partition of " + std::to_string(n) + " is " + to_string(s));
        mt.m.push_back(s.get_num().get_si());
        mt.f.push_back(ct.degree(i));
    }
    return mt;
}

namespace {

std::vector<Matrix> generators(const HeckeOperator& op, std::size_t n) {
    Representation rep(op, n);
    std::vector<Matrix> gens;
    for (std::size_t i = 1; i < n; ++i) gens.push_back(rep.generator(i));
    return gens;
}

}  // namespace

std::size_t centralizer_dimension(const HeckeOperator& op, std::size_t n) {
    if (n == 0) throw std::invalid_argument("centralizer_dimension: n must be positive");
    const std::size_t dim = Representation(op, n).dimension();
    if (n == 1) return dim * dim;
    return commutant(generators(op, n), dim).dimension;
}

std::size_t bicommutant_dimension(const HeckeOperator& op, std::size_t n) {
    if (n == 0) throw std::invalid_argument("bicommutant_dimension: n must be positive");
    const std::size_t dim = Representation(op, n).dimension();
    auto c = commutant(generators(op, n), dim);
    return commutant(c.basis_matrices(), dim).dimension;
}

std::size_t hecke_image_dimension(const HeckeOperator& op, std::size_t n) {
    Representation rep(op, n);
    std::vector<SparseRow<Scalar>> rows;
    for (const auto& w : Permutation::all(n)) rows.push_back(vectorize(rep.of_permutation(w)));
    return ScalarSubspace::span(rep.dimension() * rep.dimension(), std::move(rows)).dim();
}

bool SchurCheck::pass(std::size_t d) const {
    long dn = 1;
    for (std::size_t i = 0; i < n; ++i) dn *= static_cast<long>(d);
    return sum_m_squared == static_cast<long>(centralizer) && centralizer == graded_dim_E && sum_m_f == dn;
}

SchurCheck schur_dimension_check(const HeckeOperator& op, std::size_t n) {
    SchurCheck c;
    c.n = n;
    c.table = multiplicities(op, n);
    c.sum_m_squared = c.table.sum_squares();
    c.sum_m_f = c.table.weighted_sum();
    c.centralizer = centralizer_dimension(op, n);
    c.graded_dim_E = graded_dimension(build_e(op), n);
    return c;
}

}  // namespace hbl
