#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hbl/kernels.hpp"
#include "hbl/sparse_matrix.hpp"

namespace hbl {

/// Subspace of F^ambient held as its reduced row-echelon basis. The basis is
/// unique, so equality of subspaces is equality of stored bases.
template <class F>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    /// Row space of arbitrary rows of width `ambient`.
    static Subspace span(std::size_t ambient, std::vector<SparseRow<F>> rows, Exec exec = default_exec()) {
        for (const auto& r : rows)
            if (!r.empty() && r.back().col >= ambient) throw std::out_of_range("Subspace::span: entry beyond ambient");
        Subspace s(ambient);
        s.basis_ = kernels::row_echelon(std::move(rows), true, exec);
        return s;
    }

    static Subspace whole(std::size_t ambient) {
        Subspace s(ambient);
        for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back({{static_cast<std::uint32_t>(i), F(1)}});
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<SparseRow<F>>& basis() const { return basis_; }

    std::vector<std::uint32_t> pivot_columns() const {
        std::vector<std::uint32_t> p;
        p.reserve(basis_.size());
        for (const auto& r : basis_) p.push_back(r.front().col);
        return p;
    }

    /// Remainder of v after reduction by the basis; zero iff v lies in the subspace.
    SparseRow<F> reduce(SparseRow<F> v) const {
        std::size_t k = 0;
        std::size_t pos = 0;
        while (pos < v.size() && k < basis_.size()) {
            std::uint32_t pc = basis_[k].front().col;
            if (v[pos].col < pc) {
                ++pos;
            } else if (v[pos].col > pc) {
                ++k;
            } else {
                F c = -v[pos].val;
                row_axpy(v, c, basis_[k]);
                ++k;
                // entries before pos are untouched because the pivot row starts at pc
            }
        }
        return v;
    }

    bool contains(const SparseRow<F>& v) const { return reduce(v).empty(); }

    bool is_subspace_of(const Subspace& o) const {
        check_ambient(o);
        if (dim() > o.dim()) return false;
        for (const auto& r : basis_)
            if (!o.contains(r)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    void check_ambient(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    }

private:
    std::size_t ambient_ = 0;
    std::vector<SparseRow<F>> basis_;
};

using ScalarSubspace = Subspace<Scalar>;

/// Row space of M in canonical form.
template <class F>
Subspace<F> echelonize(const SparseMatrix<F>& m, Exec exec = default_exec()) {
    return Subspace<F>::span(m.cols(), m.row_data(), exec);
}

template <class F>
std::size_t rank(const SparseMatrix<F>& m, Exec exec = default_exec()) {
    return kernels::row_echelon(m.row_data(), false, exec).size();
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& u, const Subspace<F>& w, Exec exec = default_exec()) {
    u.check_ambient(w);
    if (w.is_zero()) return u;
    if (u.is_zero()) return w;
    std::vector<SparseRow<F>> rows = u.basis();
    for (const auto& r : w.basis()) {
        auto rem = u.reduce(r);
        if (!rem.empty()) rows.push_back(std::move(rem));
    }
    return Subspace<F>::span(u.ambient(), std::move(rows), exec);
}

/// Zassenhaus: echelonize [u | u ; w | 0]; rows whose left half vanishes
/// span the intersection in their right half.
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& u, const Subspace<F>& w, Exec exec = default_exec()) {
    u.check_ambient(w);
    const auto m = static_cast<std::uint32_t>(u.ambient());
    if (u.is_zero() || w.is_zero()) return Subspace<F>(m);
    std::vector<SparseRow<F>> rows;
    rows.reserve(u.dim() + w.dim());
    for (const auto& r : u.basis()) {
        SparseRow<F> doubled = r;
        doubled.reserve(2 * r.size());
        for (const auto& e : r) doubled.push_back({e.col + m, e.val});
        rows.push_back(std::move(doubled));
    }
    for (const auto& r : w.basis()) rows.push_back(r);
    auto ech = kernels::row_echelon(std::move(rows), false, exec);
    std::vector<SparseRow<F>> right;
    for (auto& r : ech) {
        if (r.front().col < m) continue;
        for (auto& e : r) e.col -= m;
        right.push_back(std::move(r));
    }
    return Subspace<F>::span(m, std::move(right), exec);
}

/// {x : M x = 0} for x a column vector of length cols(M); rank + dim = cols.
template <class F>
Subspace<F> kernel(const SparseMatrix<F>& m, Exec exec = default_exec()) {
    auto rref = kernels::row_echelon(m.row_data(), true, exec);
    const std::size_t n = m.cols();
    std::vector<char> is_pivot(n, 0);
    for (const auto& r : rref) is_pivot[r.front().col] = 1;
    std::vector<SparseRow<F>> sol;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        SparseRow<F> v;
        for (const auto& r : rref)
            if (const F* x = find_entry(r, static_cast<std::uint32_t>(f))) v.push_back({r.front().col, -*x});
        v.push_back({static_cast<std::uint32_t>(f), F(1)});
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
        sol.push_back(std::move(v));
    }
    return Subspace<F>::span(n, std::move(sol), exec);
}

/// Row-major flattening of an m x m matrix into a vector of length m^2.
template <class F>
SparseRow<F> vectorize(const SparseMatrix<F>& a) {
    SparseRow<F> v;
    v.reserve(a.nnz());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& e : a.row(i)) v.push_back({static_cast<std::uint32_t>(i * a.cols() + e.col), e.val});
    return v;
}

template <class F>
SparseMatrix<F> unvectorize(const SparseRow<F>& v, std::size_t rows, std::size_t cols) {
    SparseMatrix<F> a(rows, cols);
    std::vector<SparseRow<F>> r(rows);
    for (const auto& e : v) r[e.col / cols].push_back({static_cast<std::uint32_t>(e.col % cols), e.val});
    for (std::size_t i = 0; i < rows; ++i) a.set_row(i, std::move(r[i]));
    return a;
}

template <class F>
struct Commutant {
    std::size_t dimension = 0;
    /// Solutions X, flattened row-major, as a subspace of F^(m*m).
    Subspace<F> solutions;
    std::size_t size = 0;

    std::vector<SparseMatrix<F>> basis_matrices() const {
        std::vector<SparseMatrix<F>> out;
        for (const auto& r : solutions.basis()) out.push_back(unvectorize(r, size, size));
        return out;
    }
};

/// All X with X G = G X for every generator G (each m x m).
template <class F>
Commutant<F> commutant(const std::vector<SparseMatrix<F>>& gens, std::size_t m, Exec exec = default_exec()) {
    for (const auto& g : gens)
        if (g.rows() != m || g.cols() != m) throw std::invalid_argument("commutant: generator size mismatch");
    // Equation (i,j): sum_k X[i][k] G[k][j] - sum_k G[i][k] X[k][j] = 0, unknown X[a][b] at a*m+b.
    std::vector<SparseRow<F>> eqs;
    for (const auto& g : gens) {
        const auto gt = g.transpose();
        std::vector<SparseRow<F>> block(m * m);
        parallel_for(m * m, exec, [&](std::size_t idx) {
            const std::size_t i = idx / m, j = idx % m;
            SparseRow<F> row;
            for (const auto& e : gt.row(j)) row.push_back({static_cast<std::uint32_t>(i * m + e.col), e.val});
            SparseRow<F> right;
            for (const auto& e : g.row(i)) right.push_back({static_cast<std::uint32_t>(e.col * m + j), e.val});
            std::sort(right.begin(), right.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
            row_axpy(row, F(-1), right);
            block[idx] = std::move(row);
        });
        for (auto& r : block)
            if (!r.empty()) eqs.push_back(std::move(r));
    }
    // Pre-reduce so the kernel sees a small system.
    auto reduced = kernels::row_echelon(std::move(eqs), false, exec);
    SparseMatrix<F> a(reduced.size(), m * m);
    for (std::size_t i = 0; i < reduced.size(); ++i) a.set_row(i, std::move(reduced[i]));
    Commutant<F> c;
    c.size = m;
    c.solutions = kernel(a, exec);
    c.dimension = c.solutions.dim();
    return c;
}

/// id^(i-1) (x) R (x) id^(n-i-1) on the d^n-dimensional tensor power, i in [1, n-1].
template <class F>
SparseMatrix<F> lift_to_position(const SparseMatrix<F>& r, std::size_t i, std::size_t n, std::size_t d) {
    const std::size_t d2 = d * d;
    if (r.rows() != d2 || r.cols() != d2) throw std::invalid_argument("lift_to_position: R must be d^2 x d^2");
    if (n < 2 || i < 1 || i > n - 1) throw std::out_of_range("lift_to_position: position out of range");
    std::size_t left = 1, right = 1;
    for (std::size_t k = 1; k < i; ++k) left *= d;
    for (std::size_t k = i + 1; k < n; ++k) right *= d;
    const std::size_t total = left * d2 * right;
    SparseMatrix<F> out(total, total);
    for (std::size_t a = 0; a < left; ++a)
        for (std::size_t b = 0; b < d2; ++b)
            for (std::size_t c = 0; c < right; ++c) {
                SparseRow<F> row;
                row.reserve(r.row(b).size());
                for (const auto& e : r.row(b))
                    row.push_back({static_cast<std::uint32_t>((a * d2 + e.col) * right + c), e.val});
                out.set_row((a * d2 + b) * right + c, std::move(row));
            }
    return out;
}

/// Inverse by Gauss-Jordan on [M | I]; throws std::domain_error when singular.
template <class F>
SparseMatrix<F> inverse(const SparseMatrix<F>& m, Exec exec = default_exec()) {
    if (!m.is_square()) throw std::invalid_argument("inverse: not square");
    const std::size_t n = m.rows();
    std::vector<SparseRow<F>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = m.row(i);
        rows[i].push_back({static_cast<std::uint32_t>(n + i), F(1)});
    }
    auto rref = kernels::row_echelon(std::move(rows), true, exec);
    if (rref.size() != n || rref.back().front().col >= n) throw std::domain_error("inverse: singular matrix");
    SparseMatrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        SparseRow<F> r;
        for (const auto& e : rref[i])
            if (e.col >= n) r.push_back({static_cast<std::uint32_t>(e.col - n), e.val});
        inv.set_row(i, std::move(r));
    }
    return inv;
}

}  // namespace hbl
