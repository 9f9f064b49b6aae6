#pragma once

// Data-parallel kernels over SparseMatrix. Every kernel takes an Exec policy;
// Exec::serial is the reference implementation and Exec::parallel must agree
// with it exactly (both paths do the same arithmetic per row, only the
// distribution of rows over threads differs).

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hbl/parallel.hpp"
#include "hbl/sparse_matrix.hpp"

namespace hbl::kernels {

/// Sparse product A*B, rows computed independently.
template <class F>
SparseMatrix<F> multiply(const SparseMatrix<F>& a, const SparseMatrix<F>& b, Exec exec = default_exec()) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
    SparseMatrix<F> c(a.rows(), b.cols());
    std::vector<SparseRow<F>> out(a.rows());
    parallel_for(a.rows(), exec, [&](std::size_t i) {
        const auto& ar = a.row(i);
        if (ar.empty()) return;
        if (ar.size() == 1) {
            SparseRow<F> r = b.row(ar[0].col);
            row_scale(r, ar[0].val);
            out[i] = std::move(r);
            return;
        }
        // Scatter into a sparse accumulator keyed by column.
        std::map<std::uint32_t, F> acc;
        for (const auto& e : ar) {
            for (const auto& f : b.row(e.col)) {
                auto [it, inserted] = acc.try_emplace(f.col, F(0));
                it->second += e.val * f.val;
            }
        }
        SparseRow<F> r;
        r.reserve(acc.size());
        for (auto& [col, v] : acc)
            if (!is_zero(v)) r.push_back({col, std::move(v)});
        out[i] = std::move(r);
    });
    for (std::size_t i = 0; i < out.size(); ++i) c.set_row(i, std::move(out[i]));
    return c;
}

/// Diagonal of A*B summed, without forming the product.
template <class F>
F trace_of_product(const SparseMatrix<F>& a, const SparseMatrix<F>& b, Exec exec = default_exec()) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw std::invalid_argument("trace_of_product: shape mismatch");
    std::vector<F> partial(a.rows(), F(0));
    parallel_for(a.rows(), exec, [&](std::size_t i) {
        F s(0);
        for (const auto& e : a.row(i))
            if (const F* v = find_entry(b.row(e.col), static_cast<std::uint32_t>(i))) s += e.val * *v;
        partial[i] = std::move(s);
    });
    F t(0);
    for (auto& s : partial) t += s;  // fixed order keeps serial and parallel results identical
    return t;
}

/// Kronecker product A (x) B with lexicographic index (i, j) -> i*B.cols + j.
template <class F>
SparseMatrix<F> kron(const SparseMatrix<F>& a, const SparseMatrix<F>& b, Exec exec = default_exec()) {
    SparseMatrix<F> c(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<SparseRow<F>> out(c.rows());
    parallel_for(c.rows(), exec, [&](std::size_t r) {
        const auto& ar = a.row(r / b.rows());
        const auto& br = b.row(r % b.rows());
        SparseRow<F> row;
        row.reserve(ar.size() * br.size());
        for (const auto& x : ar)
            for (const auto& y : br)
                row.push_back({static_cast<std::uint32_t>(x.col * b.cols() + y.col), x.val * y.val});
        out[r] = std::move(row);
    });
    for (std::size_t i = 0; i < out.size(); ++i) c.set_row(i, std::move(out[i]));
    return c;
}

/// Pivot rows of the row space of `rows` (width `ncols`): leading entries 1,
/// leading columns strictly increasing. With `reduced` the pivot columns are
/// also cleared in every other row, giving the unique reduced echelon form.
template <class F>
std::vector<SparseRow<F>> row_echelon(std::vector<SparseRow<F>> rows, bool reduced, Exec exec = default_exec()) {
    std::map<std::uint32_t, std::vector<SparseRow<F>>> buckets;
    for (auto& r : rows)
        if (!r.empty()) buckets[r.front().col].push_back(std::move(r));

    std::vector<SparseRow<F>> pivots;
    while (!buckets.empty()) {
        auto node = buckets.extract(buckets.begin());
        auto& group = node.mapped();
        // Simplest leading entry first, then sparsest row: keeps fill-in and degree growth down.
        std::size_t best = 0;
        for (std::size_t k = 1; k < group.size(); ++k) {
            auto ck = complexity(group[k].front().val);
            auto cb = complexity(group[best].front().val);
            if (ck < cb || (ck == cb && group[k].size() < group[best].size())) best = k;
        }
        std::swap(group[0], group[best]);
        SparseRow<F> pivot = std::move(group[0]);
        if (!(pivot.front().val == F(1))) {
            F inv = F(1) / pivot.front().val;
            row_scale(pivot, inv);
        }
        const std::size_t others = group.size() - 1;
        parallel_for(others, exec, [&](std::size_t k) {
            auto& r = group[k + 1];
            F c = -r.front().val;
            row_axpy(r, c, pivot);
        });
        for (std::size_t k = 1; k < group.size(); ++k) {
            auto& r = group[k];
            if (r.empty()) continue;
            if (r.front().col == node.key()) throw std::logic_error("row_echelon: elimination left a leading entry");
            buckets[r.front().col].push_back(std::move(r));
        }
        pivots.push_back(std::move(pivot));
    }

    if (reduced) {
        for (std::size_t k = pivots.size(); k-- > 1;) {
            const std::uint32_t col = pivots[k].front().col;
            const auto& pk = pivots[k];
            parallel_for(k, exec, [&](std::size_t j) {
                if (const F* v = find_entry(pivots[j], col)) {
                    F c = -*v;
                    row_axpy(pivots[j], c, pk);
                }
            });
        }
    }
    return pivots;
}

/// Row lift of A to A (x) I_m, i.e. A acting on the leading factors.
template <class F>
SparseMatrix<F> kron_identity_right(const SparseMatrix<F>& a, std::size_t m, Exec exec = default_exec()) {
    return kron(a, SparseMatrix<F>::identity(m), exec);
}

}  // namespace hbl::kernels
