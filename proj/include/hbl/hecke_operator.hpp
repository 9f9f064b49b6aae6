#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hbl/hecke_algebra.hpp"
#include "hbl/linalg.hpp"
#include "hbl/permutation.hpp"
#include "hbl/scalar.hpp"
#include "hbl/sparse_matrix.hpp"

namespace hbl {

/// An operator R on V (x) V (dim V = d) together with its Hecke parameter q.
/// Basis of V (x) V is x_k (x) x_l at index k*d + l (0-based), and R acts on
/// row vectors: row a of `r` is the image of basis vector a.
struct HeckeOperator {
    std::string name;
    std::size_t d = 0;
    Matrix r;
    Scalar q;
    /// Set when entries were evaluated at a fixed p; empty means symbolic in p.
    std::optional<Rational> specialized_p;

    bool symbolic() const { return !specialized_p.has_value(); }
};

/// Standard Drinfeld-Jimbo operator with q = p^2:
/// (x_k x_l)R = q x_k x_l (k = l), p x_l x_k (k > l), (q-1) x_k x_l + p x_l x_k (k < l).
HeckeOperator dj_r_matrix(std::size_t d);
/// Tensor flip, q = 1.
HeckeOperator flip_operator(std::size_t d);
/// Signed flip on an (r|s)-graded space: x_i x_j -> (-1)^{|i||j|} x_j x_i, q = 1.
HeckeOperator super_flip(std::size_t r, std::size_t s);
/// `dj:<d>`, `flip:<d>`, `superflip:<r>|<s>`; throws std::invalid_argument otherwise.
HeckeOperator builtin_operator(const std::string& name);

/// Entrywise evaluation at p = p0; throws PoleError if some entry has a pole there.
HeckeOperator specialize(const HeckeOperator& op, const Rational& p0);

/// Outcome of an exact matrix identity check; on failure the witness names
/// the first nonzero entry of the difference.
struct IdentityCheck {
    bool ok = true;
    std::size_t row = 0;
    std::size_t col = 0;
    Scalar value;
    std::string detail;
};

/// (R+1)(R-q) = 0 on V^(x)2.
IdentityCheck check_hecke(const HeckeOperator& op);
/// R_1 R_2 R_1 = R_2 R_1 R_2 on V^(x)3.
IdentityCheck check_yang_baxter(const HeckeOperator& op);
IdentityCheck check_invertible(const HeckeOperator& op);
/// q != 0 and [k]_q! != 0 for all k <= degree.
IdentityCheck check_q_factorials(const HeckeOperator& op, std::size_t degree);

/// Same check for a bare square matrix acting on (C^m)^(x)2, used for the induced operator on W.
IdentityCheck check_braid(const Matrix& r, std::size_t m);

/// First nonzero entry of a - b, if any.
IdentityCheck compare_matrices(const Matrix& a, const Matrix& b);

/// The representation rho of H_{q,n} on V^(x)n given by T_{v_i} -> R_i^n.
/// Matrices of basis elements are cached, so one instance should be reused
/// for many elements of the same degree.
class Representation {
public:
    Representation(const HeckeOperator& op, std::size_t n);

    std::size_t degree() const { return n_; }
    std::size_t dimension() const { return dim_; }
    /// R_i^n, 1 <= i < n.
    const Matrix& generator(std::size_t i) const;
    /// rho(T_w): the lifted R's multiplied along the reduced word of w.
    const Matrix& of_permutation(const Permutation& w);
    /// Linear extension; `element.n()` must equal the degree.
    Matrix of_element(const HeckeElement& element);
    Scalar character(const Permutation& w);
    Scalar character(const HeckeElement& element);

private:
    HeckeOperator op_;
    std::size_t n_;
    std::size_t dim_;
    std::vector<Matrix> gens_;
    std::map<Permutation, Matrix> cache_;
};

/// rho(T_w) on V^(x)n; prefer Representation when computing several.
Matrix rho(const HeckeOperator& op, const Permutation& w);
/// rho of a Hecke element; `q` must equal op.q (std::invalid_argument otherwise).
Matrix rho(const HeckeOperator& op, const HeckeElement& a, const Scalar& q);

/// Trace of rho(T_w) on V^(x)n with n = w.size().
Scalar character(const HeckeOperator& op, const Permutation& w);

/// The induced operator on W (x) W, W = V* (x) V with basis z_i^j at index
/// i*d + j (i the V* slot): entries (R^{-1})^T (x) R with the middle factors
/// interchanged. Throws std::domain_error if R is singular.
Matrix rbar(const HeckeOperator& op);

/// P_n(S) on (C^m)^(x)n: P_1 = id, P_n = [n]_q^{-1} (P_{n-1} (x) id)(id + S_{n-1} + S_{n-1}S_{n-2} + ... + S_{n-1}...S_1).
/// S is m^2 x m^2. Throws std::domain_error when some [k]_q, k <= n, vanishes.
Matrix projector_family(const Matrix& s, std::size_t m, std::size_t n, const Scalar& q);
/// tr P_n(S) without forming the last product.
Scalar projector_family_trace(const Matrix& s, std::size_t m, std::size_t n, const Scalar& q);

/// Phi_n = P_n(-Rbar) on W^(x)n.
Matrix phi_n(const HeckeOperator& op, std::size_t n);
Scalar phi_n_trace(const HeckeOperator& op, std::size_t n);

}  // namespace hbl
