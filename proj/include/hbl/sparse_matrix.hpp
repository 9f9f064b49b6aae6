#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hbl/scalar.hpp"

namespace hbl {

template <class F>
struct Entry {
    std::uint32_t col;
    F val;
    friend bool operator==(const Entry& a, const Entry& b) { return a.col == b.col && a.val == b.val; }
};

/// Sorted by column, no explicit zeros.
template <class F>
using SparseRow = std::vector<Entry<F>>;

template <class F>
const F* find_entry(const SparseRow<F>& row, std::uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const Entry<F>& e, std::uint32_t c) { return e.col < c; });
    return (it != row.end() && it->col == col) ? &it->val : nullptr;
}

/// r <- r + c*s.
template <class F>
void row_axpy(SparseRow<F>& r, const F& c, const SparseRow<F>& s) {
    if (is_zero(c) || s.empty()) return;
    SparseRow<F> out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
        if (j == s.size() || (i < r.size() && r[i].col < s[j].col)) {
            out.push_back(std::move(r[i++]));
        } else if (i == r.size() || s[j].col < r[i].col) {
            F v = c * s[j].val;
            out.push_back({s[j].col, std::move(v)});
            ++j;
        } else {
            F v = r[i].val + c * s[j].val;
            if (!is_zero(v)) out.push_back({r[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

template <class F>
void row_scale(SparseRow<F>& r, const F& c) {
    if (is_zero(c)) {
        r.clear();
        return;
    }
    for (auto& e : r) e.val = e.val * c;
}

/// Row-major sparse matrix. Operators act on row vectors from the right
/// (x -> xM), so row i holds the image of basis vector i and products
/// compose left to right.
template <class F>
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMatrix identity(std::size_t n) {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({static_cast<std::uint32_t>(i), F(1)});
        return m;
    }

    static SparseMatrix scalar(std::size_t n, const F& c) {
        SparseMatrix m(n, n);
        if (is_zero(c)) return m;
        for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({static_cast<std::uint32_t>(i), c});
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const SparseRow<F>& row(std::size_t i) const { return data_.at(i); }
    /// Replaces row i; the row must be sorted and free of zeros.
    void set_row(std::size_t i, SparseRow<F> r) { data_.at(i) = std::move(r); }
    const std::vector<SparseRow<F>>& row_data() const { return data_; }

    F at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        const F* v = find_entry(data_[i], static_cast<std::uint32_t>(j));
        return v ? *v : F(0);
    }

    void set(std::size_t i, std::size_t j, F v) {
        check_index(i, j);
        auto& r = data_[i];
        auto c = static_cast<std::uint32_t>(j);
        auto it = std::lower_bound(r.begin(), r.end(), c, [](const Entry<F>& e, std::uint32_t k) { return e.col < k; });
        if (it != r.end() && it->col == c) {
            if (is_zero(v))
                r.erase(it);
            else
                it->val = std::move(v);
        } else if (!is_zero(v)) {
            r.insert(it, Entry<F>{c, std::move(v)});
        }
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    bool is_zero_matrix() const {
        return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
    }

    F trace() const {
        if (!is_square()) throw std::invalid_argument("SparseMatrix::trace: not square");
        F t(0);
        for (std::size_t i = 0; i < rows_; ++i)
            if (const F* v = find_entry(data_[i], static_cast<std::uint32_t>(i))) t += *v;
        return t;
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& e : data_[i]) t.data_[e.col].push_back({static_cast<std::uint32_t>(i), e.val});
        return t;
    }

    SparseMatrix& operator+=(const SparseMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < rows_; ++i) row_axpy(data_[i], F(1), o.data_[i]);
        return *this;
    }

    SparseMatrix& operator-=(const SparseMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < rows_; ++i) row_axpy(data_[i], F(-1), o.data_[i]);
        return *this;
    }

    /// this += c*o
    void add_scaled(const F& c, const SparseMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < rows_; ++i) row_axpy(data_[i], c, o.data_[i]);
    }

    SparseMatrix& operator*=(const F& c) {
        for (auto& r : data_) row_scale(r, c);
        return *this;
    }

    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
    friend SparseMatrix operator*(SparseMatrix a, const F& c) { return a *= c; }
    friend SparseMatrix operator*(const F& c, SparseMatrix a) { return a *= c; }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Entrywise map into another field (e.g. specialization p -> p0).
    template <class G, class Fn>
    SparseMatrix<G> map(Fn&& fn) const {
        SparseMatrix<G> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            SparseRow<G> r;
            r.reserve(data_[i].size());
            for (const auto& e : data_[i]) {
                G v = fn(e.val);
                if (!is_zero(v)) r.push_back({e.col, std::move(v)});
            }
            m.set_row(i, std::move(r));
        }
        return m;
    }

    /// Row-major text dump for debugging: one line per row, entries space separated.
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ' ';
                os << hbl_entry_string(at(i, j));
            }
            os << '\n';
        }
        return os.str();
    }

private:
    static std::string hbl_entry_string(const Scalar& s) { return s.to_string(); }
    static std::string hbl_entry_string(const Rational& r) { return r.get_str(); }

    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("SparseMatrix: index out of range");
    }
    void check_same_shape(const SparseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("SparseMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseRow<F>> data_;
};

using Matrix = SparseMatrix<Scalar>;
using QMatrix = SparseMatrix<Rational>;

}  // namespace hbl
