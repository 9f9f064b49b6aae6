#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hbl/hecke_operator.hpp"
#include "hbl/linalg.hpp"

namespace hbl {

/// Raised when an operator fails the Hecke or braid identities required to build an algebra.
class AxiomError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// T(U)/(relations) for a space U of dimension m; relations is a subspace of U (x) U.
struct QuadraticAlgebra {
    std::string label;
    std::size_t m = 0;
    ScalarSubspace relations;
};

/// Relations Im(R+1).
QuadraticAlgebra build_lambda(const HeckeOperator& op);
/// Relations Im(R-q).
QuadraticAlgebra build_s(const HeckeOperator& op);
/// Generators W = V* (x) V, relations Im(Rbar-1).
QuadraticAlgebra build_e(const HeckeOperator& op);
/// `S`, `Lambda` or `E` (case-insensitive); throws std::invalid_argument otherwise.
QuadraticAlgebra build_algebra(const HeckeOperator& op, const std::string& which);

/// The n-1 subspaces U^(i-1) (x) R(A) (x) U^(n-i-1) of U^(x)n.
std::vector<ScalarSubspace> relation_lifts(const QuadraticAlgebra& a, std::size_t n);

/// m^n - dim(sum of the lifted relation spaces); 1 and m in degrees 0 and 1.
std::size_t graded_dimension(const QuadraticAlgebra& a, std::size_t n);
/// dim of the intersection of the lifted relation spaces (the quadratic dual's degree-n piece).
std::size_t dual_graded_dimension(const QuadraticAlgebra& a, std::size_t n);
ScalarSubspace lifted_relation_intersection(const QuadraticAlgebra& a, std::size_t n);

/// sum_{i+j=n} (-1)^i b_i a_j = 0 for 1 <= n <= N, from given dimension sequences.
bool koszul_series_identity(const std::vector<long>& dims, const std::vector<long>& dual_dims, std::size_t N);
bool koszul_series_check(const QuadraticAlgebra& a, std::size_t N);

enum class Distributivity { distributive, non_distributive, inconclusive };
std::string to_string(Distributivity d);

struct DistributivityVerdict {
    Distributivity verdict = Distributivity::inconclusive;
    std::size_t lattice_size = 0;
    std::size_t rounds = 0;
    /// For non_distributive: indices into `dims` of u, v, w with u meet (v join w) != (u meet v) join (u meet w).
    std::optional<std::array<std::size_t, 3>> witness;
    std::vector<std::size_t> dims;
};

struct ClosureLimits {
    std::size_t max_elements = 200;
    std::size_t max_rounds = 12;
};

/// Closes the generators under sum and intersection, then checks the
/// distributive law on every triple of the closure.
DistributivityVerdict distributivity_check(const std::vector<ScalarSubspace>& generators, ClosureLimits limits = {});
/// Lattice generated by the lifted relation spaces in degree n >= 3.
DistributivityVerdict distributivity_check(const QuadraticAlgebra& a, std::size_t n, ClosureLimits limits = {});

}  // namespace hbl
