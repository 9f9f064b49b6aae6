#include "hbl/hecke_operator.hpp"

#include <algorithm>
#include <stdexcept>

#include "hbl/kernels.hpp"

namespace hbl {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

std::size_t parse_size(const std::string& s, const std::string& name) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("unknown builtin operator '" + name + "'");
    return std::stoul(s);
}

}  // namespace

HeckeOperator dj_r_matrix(std::size_t d) {
    if (d < 1) throw std::invalid_argument("dj_r_matrix: d must be positive");
    HeckeOperator op;
    op.name = "dj:" + std::to_string(d);
    op.d = d;
    op.q = Scalar::q();
    op.r = Matrix(d * d, d * d);
    const Scalar p = Scalar::p();
    const Scalar qm1 = op.q - Scalar(1);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            const std::size_t row = k * d + l;
            const std::size_t swapped = l * d + k;
            if (k == l) {
                op.r.set(row, row, op.q);
            } else if (k > l) {
                op.r.set(row, swapped, p);
            } else {
                op.r.set(row, row, qm1);
                op.r.set(row, swapped, p);
            }
        }
    return op;
}

HeckeOperator flip_operator(std::size_t d) {
    if (d < 1) throw std::invalid_argument("flip_operator: d must be positive");
    HeckeOperator op;
    op.name = "flip:" + std::to_string(d);
    op.d = d;
    op.q = Scalar(1);
    op.r = Matrix(d * d, d * d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) op.r.set(k * d + l, l * d + k, Scalar(1));
    return op;
}

HeckeOperator super_flip(std::size_t r, std::size_t s) {
    const std::size_t d = r + s;
    if (d < 1) throw std::invalid_argument("super_flip: r + s must be positive");
    HeckeOperator op;
    op.name = "superflip:" + std::to_string(r) + "|" + std::to_string(s);
    op.d = d;
    op.q = Scalar(1);
    op.r = Matrix(d * d, d * d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            const bool odd = k >= r && l >= r;
            op.r.set(k * d + l, l * d + k, Scalar(odd ? -1 : 1));
        }
    return op;
}

HeckeOperator builtin_operator(const std::string& name) {
    const auto colon = name.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown builtin operator '" + name + "'");
    const std::string family = name.substr(0, colon);
    const std::string arg = name.substr(colon + 1);
    if (family == "dj") return dj_r_matrix(parse_size(arg, name));
    if (family == "flip") return flip_operator(parse_size(arg, name));
    if (family == "superflip") {
        const auto bar = arg.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("superflip needs <r>|<s>: '" + name + "'");
        return super_flip(parse_size(arg.substr(0, bar), name), parse_size(arg.substr(bar + 1), name));
    }
    throw std::invalid_argument("unknown builtin operator '" + name + "'");
}

HeckeOperator specialize(const HeckeOperator& op, const Rational& p0) {
    HeckeOperator s = op;
    s.r = op.r.map<Scalar>([&](const Scalar& x) { return Scalar(x.eval(p0)); });
    s.q = Scalar(op.q.eval(p0));
    s.specialized_p = p0;
    s.name = op.name + "@p=" + p0.get_str();
    return s;
}

IdentityCheck compare_matrices(const Matrix& a, const Matrix& b) {
    IdentityCheck c;
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        c.ok = false;
        c.detail = "shape mismatch";
        return c;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.row(i) == b.row(i)) continue;
        SparseRow<Scalar> diff = a.row(i);
        row_axpy(diff, Scalar(-1), b.row(i));
        c.ok = false;
        c.row = i;
        c.col = diff.front().col;
        c.value = diff.front().val;
        c.detail = "entry (" + std::to_string(i) + "," + std::to_string(c.col) + ") differs by " + c.value.to_string();
        return c;
    }
    return c;
}

IdentityCheck check_hecke(const HeckeOperator& op) {
    const std::size_t n = op.d * op.d;
    if (op.r.rows() != n || op.r.cols() != n) return {false, 0, 0, Scalar(), "R is not d^2 x d^2"};
    Matrix plus = op.r + Matrix::identity(n);
    Matrix minus = op.r - Matrix::scalar(n, op.q);
    Matrix prod = kernels::multiply(plus, minus);
    auto c = compare_matrices(prod, Matrix(n, n));
    if (!c.ok) c.detail = "(R+1)(R-q) " + c.detail;
    return c;
}

IdentityCheck check_braid(const Matrix& r, std::size_t m) {
    Matrix r1 = lift_to_position(r, 1, 3, m);
    Matrix r2 = lift_to_position(r, 2, 3, m);
    Matrix lhs = kernels::multiply(kernels::multiply(r1, r2), r1);
    Matrix rhs = kernels::multiply(kernels::multiply(r2, r1), r2);
    auto c = compare_matrices(lhs, rhs);
    if (!c.ok) c.detail = "R1R2R1 - R2R1R2: " + c.detail;
    return c;
}

IdentityCheck check_yang_baxter(const HeckeOperator& op) {
    if (op.r.rows() != op.d * op.d || op.r.cols() != op.d * op.d) return {false, 0, 0, Scalar(), "R is not d^2 x d^2"};
    return check_braid(op.r, op.d);
}

IdentityCheck check_invertible(const HeckeOperator& op) {
    IdentityCheck c;
    const std::size_t rk = rank(op.r);
    if (rk != op.r.rows()) {
        c.ok = false;
        c.detail = "R has rank " + std::to_string(rk) + " < " + std::to_string(op.r.rows());
    }
    return c;
}

IdentityCheck check_q_factorials(const HeckeOperator& op, std::size_t degree) {
    IdentityCheck c;
    if (op.q.is_zero()) {
        c.ok = false;
        c.detail = "q = 0";
        return c;
    }
    for (std::size_t k = 1; k <= degree; ++k) {
        if (q_integer(static_cast<unsigned>(k), op.q).is_zero()) {
            c.ok = false;
            c.detail = "[" + std::to_string(k) + "]_q! = 0";
            return c;
        }
    }
    return c;
}

Representation::Representation(const HeckeOperator& op, std::size_t n)
    : op_(op), n_(n), dim_(ipow(op.d, n)) {
    if (n < 1) throw std::invalid_argument("Representation: n must be positive");
    for (std::size_t i = 1; i < n; ++i) gens_.push_back(lift_to_position(op.r, i, n, op.d));
}

const Matrix& Representation::generator(std::size_t i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("Representation::generator: index out of range");
    return gens_[i - 1];
}

const Matrix& Representation::of_permutation(const Permutation& w) {
    if (w.size() != n_) throw std::invalid_argument("Representation: permutation size mismatch");
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    Permutation prefix(n_);
    if (!cache_.count(prefix)) cache_.emplace(prefix, Matrix::identity(dim_));
    const Matrix* cur = &cache_.at(prefix);
    for (std::size_t i : w.reduced_word()) {
        Permutation next = prefix.times_transposition(i);
        auto it = cache_.find(next);
        if (it == cache_.end()) it = cache_.emplace(next, kernels::multiply(*cur, gens_[i - 1])).first;
        cur = &it->second;
        prefix = std::move(next);
    }
    return *cur;
}

Matrix Representation::of_element(const HeckeElement& element) {
    if (element.n() != n_) throw std::invalid_argument("Representation: element degree mismatch");
    Matrix m(dim_, dim_);
    for (const auto& [w, c] : element.terms()) m.add_scaled(c, of_permutation(w));
    return m;
}

Scalar Representation::character(const Permutation& w) { return of_permutation(w).trace(); }

Scalar Representation::character(const HeckeElement& element) {
    Scalar t;
    for (const auto& [w, c] : element.terms()) t += c * character(w);
    return t;
}

Matrix rho(const HeckeOperator& op, const Permutation& w) {
    Representation rep(op, w.size());
    return rep.of_permutation(w);
}

Matrix rho(const HeckeOperator& op, const HeckeElement& a, const Scalar& q) {
    if (!(q == op.q)) throw std::invalid_argument("rho: Hecke parameter does not match the operator's q");
    Representation rep(op, a.n());
    return rep.of_element(a);
}

Scalar character(const HeckeOperator& op, const Permutation& w) {
    Representation rep(op, w.size());
    return rep.character(w);
}

Matrix rbar(const HeckeOperator& op) {
    const std::size_t d = op.d;
    const std::size_t d2 = d * d;
    const Matrix rinv = inverse(op.r);
    const Matrix rinv_t = rinv.transpose();
    // Index of (a1, b1, a2, b2) in W (x) W with W = V* (x) V.
    auto widx = [&](std::size_t a1, std::size_t b1, std::size_t a2, std::size_t b2) {
        return ((a1 * d + b1) * d + a2) * d + b2;
    };
    Matrix out(d2 * d2, d2 * d2);
    for (std::size_t a1 = 0; a1 < d; ++a1)
        for (std::size_t a2 = 0; a2 < d; ++a2) {
            const auto& dual_row = rinv_t.row(a1 * d + a2);
            for (std::size_t b1 = 0; b1 < d; ++b1)
                for (std::size_t b2 = 0; b2 < d; ++b2) {
                    const auto& prim_row = op.r.row(b1 * d + b2);
                    SparseRow<Scalar> row;
                    for (const auto& x : dual_row)
                        for (const auto& y : prim_row) {
                            const std::size_t a1p = x.col / d, a2p = x.col % d;
                            const std::size_t b1p = y.col / d, b2p = y.col % d;
                            row.push_back({static_cast<std::uint32_t>(widx(a1p, b1p, a2p, b2p)), x.val * y.val});
                        }
                    std::sort(row.begin(), row.end(), [](const auto& u, const auto& v) { return u.col < v.col; });
                    out.set_row(widx(a1, b1, a2, b2), std::move(row));
                }
        }
    return out;
}

namespace {

// id + S_{n-1} + S_{n-1}S_{n-2} + ... + S_{n-1}...S_1 on (C^m)^(x)n.
Matrix chain_sum(const Matrix& s, std::size_t m, std::size_t n) {
    const std::size_t dim = ipow(m, n);
    Matrix sum = Matrix::identity(dim);
    Matrix chain = Matrix::identity(dim);
    for (std::size_t i = n - 1; i >= 1; --i) {
        chain = kernels::multiply(chain, lift_to_position(s, i, n, m));
        sum += chain;
    }
    return sum;
}

Scalar inverse_q_integer(std::size_t n, const Scalar& q) {
    Scalar qn = q_integer(static_cast<unsigned>(n), q);
    if (qn.is_zero()) throw std::domain_error("projector_family: [" + std::to_string(n) + "]_q vanishes");
    return qn.inverse();
}

}  // namespace

Matrix projector_family(const Matrix& s, std::size_t m, std::size_t n, const Scalar& q) {
    if (n < 1) throw std::invalid_argument("projector_family: n must be positive");
    Matrix p = Matrix::identity(m);
    for (std::size_t k = 2; k <= n; ++k) {
        Matrix lifted = kernels::kron_identity_right(p, m);
        p = kernels::multiply(lifted, chain_sum(s, m, k));
        p *= inverse_q_integer(k, q);
    }
    return p;
}

Scalar projector_family_trace(const Matrix& s, std::size_t m, std::size_t n, const Scalar& q) {
    if (n == 1) return Scalar(static_cast<long>(m));
    Matrix prev = projector_family(s, m, n - 1, q);
    Matrix lifted = kernels::kron_identity_right(prev, m);
    return kernels::trace_of_product(lifted, chain_sum(s, m, n)) * inverse_q_integer(n, q);
}

Matrix phi_n(const HeckeOperator& op, std::size_t n) {
    Matrix s = rbar(op);
    s *= Scalar(-1);
    return projector_family(s, op.d * op.d, n, op.q);
}

Scalar phi_n_trace(const HeckeOperator& op, std::size_t n) {
    Matrix s = rbar(op);
    s *= Scalar(-1);
    return projector_family_trace(s, op.d * op.d, n, op.q);
}

}  // namespace hbl
