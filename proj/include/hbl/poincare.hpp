#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hbl/hecke_operator.hpp"
#include "hbl/power_series.hpp"
#include "hbl/scalar.hpp"

namespace hbl {

enum class Provenance { direct_rank, formula, both_agree };
std::string to_string(Provenance p);

/// Graded dimensions d_0..d_N with the route that produced each entry.
struct DimensionTable {
    std::string label;
    std::vector<long> values;
    std::vector<Provenance> provenance;

    static DimensionTable single(std::string label, std::vector<long> values, Provenance p);
    std::size_t size() const { return values.size(); }
};

/// Entries known by both routes become both_agree; the longer tail keeps its own route.
/// `disagreements` lists degrees where both routes exist and differ; those keep the direct value.
struct MergedTable {
    DimensionTable table;
    std::vector<std::size_t> disagreements;
};
MergedTable merge_tables(std::string label, const std::vector<long>& direct, const std::vector<long>& formula);

/// Each entry as a nonnegative integer; throws std::domain_error otherwise.
std::vector<long> to_naturals(const std::vector<Rational>& v);

/// Coefficients p_0..p_N of P_S'/P_S. Needs constant term 1 and order >= N+1.
std::vector<Rational> p_sequence_from_s(const RationalSeries& PS, std::size_t N);
/// exp(integral of sum_{k<N} p_k^2 t^k), through order N. Needs p.size() >= N.
RationalSeries poincare_E(const std::vector<Rational>& p, std::size_t N);
/// b_0 = 1, n b_n = sum_{k<n} (-1)^k p_k^2 b_{n-k-1}; returns b_0..b_N. Needs p.size() >= N.
std::vector<Rational> b_sequence(const std::vector<Rational>& p, std::size_t N);

/// p_0 = d, p_k = chi(T_{c_{k+1}}) at p = 1 for 1 <= k <= N. Throws PoleError on a pole at 1.
std::vector<Rational> t_specialize_p_from_operator(const HeckeOperator& op, std::size_t N);

/// s_n = chi(x_n) on V^(x)n for n = 0..N (s_0 = 1).
std::vector<Scalar> symmetrizer_characters(const HeckeOperator& op, std::size_t N);
/// chi(T_{c_{k+1}}) on V^(x)(k+1) for k = 0..K; entry 0 is d.
std::vector<Scalar> cycle_characters(const HeckeOperator& op, std::size_t K);

struct RecursionRow {
    std::size_t n = 0;
    Scalar lhs;
    Scalar rhs;
    bool pass = false;
};

/// [n]_q s_n against a right-hand side built from s and p, for 1 <= n <= N.
struct CharacterRecursionReport {
    std::vector<Scalar> s;
    std::vector<Scalar> p;
    /// sum_{k<n} p_k s_{n-1-k} with p_0 = d.
    std::vector<RecursionRow> rows;
    /// Same sum with p_0 = 1.
    std::vector<RecursionRow> unit_p0_rows;
    /// p_0 s_{n-1} + d^{-n} sum_{2<=k<n} p_{k-1} s_{n-k} + p_{n-1}, with p_0 = d.
    std::vector<RecursionRow> scaled_rows;

    bool pass() const;
    /// First n at which unit_p0_rows fails, 0 if none.
    std::size_t unit_p0_first_failure() const;
    std::size_t scaled_first_failure() const;
};

/// Exact identity of Scalars; symbolic in p unless op is specialized.
CharacterRecursionReport verify_character_recursion(const HeckeOperator& op, std::size_t N);

}  // namespace hbl
