#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "hbl/hecke_operator.hpp"

namespace hbl {

using Partition = std::vector<std::size_t>;

/// Partitions of n in reverse lexicographic order, (n) first and (1^n) last.
std::vector<Partition> partitions(std::size_t n);
/// n! / z_mu.
Rational class_size(const Partition& mu);
/// Product of disjoint consecutive cycles c_{mu_1}, shifted c_{mu_2}, ...; minimal length in its class.
Permutation cycle_type_representative(const Partition& mu);

/// chi^lambda(mu) for every pair of partitions of n (n <= 8).
struct CharacterTable {
    std::size_t n = 0;
    std::vector<Partition> parts;
    std::vector<Rational> class_sizes;
    /// chi[i][j] = chi^{parts[i]}(parts[j]).
    std::vector<std::vector<long>> chi;

    /// f_lambda = chi^lambda(1^n).
    long degree(std::size_t i) const { return chi[i].back(); }
};
/// Murnaghan-Nakayama rule on beta-sets.
CharacterTable sn_character_table(std::size_t n);

class MultiplicityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct MultiplicityTable {
    std::size_t n = 0;
    std::vector<Partition> parts;
    std::vector<long> m;
    std::vector<long> f;

    long sum_squares() const;
    /// sum m_lambda f_lambda.
    long weighted_sum() const;
};

/// m_lambda = (1/n!) sum_mu |C_mu| chi(T_{w_mu})|_{p=1} chi^lambda(mu).
/// Throws MultiplicityError if some m_lambda is not a nonnegative integer,
/// and PoleError if a character has a pole at p = 1.
MultiplicityTable multiplicities(const HeckeOperator& op, std::size_t n);

/// Commutant of {R_i^n} in End(V^(x)n); d^2 for n = 1.
std::size_t centralizer_dimension(const HeckeOperator& op, std::size_t n);
/// Commutant of the commutant of {R_i^n}.
std::size_t bicommutant_dimension(const HeckeOperator& op, std::size_t n);
/// dim span{rho(T_w) : w in S_n}.
std::size_t hecke_image_dimension(const HeckeOperator& op, std::size_t n);

struct SchurCheck {
    std::size_t n = 0;
    long sum_m_squared = 0;
    long sum_m_f = 0;
    std::size_t centralizer = 0;
    std::size_t graded_dim_E = 0;
    MultiplicityTable table;

    bool pass(std::size_t d) const;
};
SchurCheck schur_dimension_check(const HeckeOperator& op, std::size_t n);

}  // namespace hbl
