#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ssmm/domains.hpp"
#include "ssmm/support_set.hpp"

namespace ssmm {

template <class V>
struct Entry {
    index_t row;
    index_t col;
    V value;
};

/// Coordinate-list sparse matrix, strictly sorted by (row, col), no stored
/// zeros and no duplicates. All indices are 0-based internally; the Matrix
/// Market layer converts to 1-based on disk.
template <ScalarDomain D>
class SparseMatrix {
public:
    using domain_type = D;
    using value_type = typename D::value_type;
    using entry_type = Entry<value_type>;

    SparseMatrix() = default;
    SparseMatrix(index_t rows, index_t cols, D domain = D())
        : rows_(rows), cols_(cols), domain_(std::move(domain)) {
        if (rows < 0 || cols < 0) throw DimensionError("negative dimension");
    }

    /// Canonicalizing constructor: sums duplicate coordinates in the domain,
    /// drops entries that cancel to zero, sorts.
    static SparseMatrix from_triplets(std::vector<entry_type> triplets, index_t rows,
                                      index_t cols, D domain = D()) {
        SparseMatrix m(rows, cols, std::move(domain));
        for (const auto& e : triplets) {
            if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
                throw DimensionError("triplet index out of range");
            m.domain_.validate(e.value);
        }
        std::sort(triplets.begin(), triplets.end(), [](const entry_type& a, const entry_type& b) {
            return std::pair(a.row, a.col) < std::pair(b.row, b.col);
        });
        m.entries_.reserve(triplets.size());
        for (auto& e : triplets) {
            if (!m.entries_.empty() && m.entries_.back().row == e.row &&
                m.entries_.back().col == e.col) {
                m.entries_.back().value = m.domain_.add(m.entries_.back().value, e.value);
            } else {
                m.entries_.push_back(std::move(e));
            }
        }
        std::erase_if(m.entries_, [&](const entry_type& e) { return m.domain_.is_zero(e.value); });
        return m;
    }

    static SparseMatrix identity(index_t n, D domain = D()) {
        SparseMatrix m(n, n, std::move(domain));
        m.entries_.reserve(n);
        for (index_t i = 0; i < n; ++i) m.entries_.push_back({i, i, m.domain_.one()});
        return m;
    }

    index_t rows() const { return rows_; }
    index_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<entry_type>& entries() const { return entries_; }
    const D& domain() const { return domain_; }

    /// Offsets of each row's entry range; size rows()+1.
    std::vector<std::size_t> row_offsets() const {
        std::vector<std::size_t> off(static_cast<std::size_t>(rows_) + 1, 0);
        for (const auto& e : entries_) ++off[static_cast<std::size_t>(e.row) + 1];
        for (std::size_t i = 1; i < off.size(); ++i) off[i] += off[i - 1];
        return off;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.domain_ == b.domain_)) return false;
        if (a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i) {
            const auto& x = a.entries_[i];
            const auto& y = b.entries_[i];
            if (x.row != y.row || x.col != y.col || !a.domain_.eq(x.value, y.value)) return false;
        }
        return true;
    }

private:
    index_t rows_ = 0;
    index_t cols_ = 0;
    D domain_{};
    std::vector<entry_type> entries_;
};

template <ScalarDomain D>
SparseMatrix<D> transpose(const SparseMatrix<D>& a) {
    std::vector<typename SparseMatrix<D>::entry_type> ts;
    ts.reserve(a.nnz());
    for (const auto& e : a.entries()) ts.push_back({e.col, e.row, e.value});
    return SparseMatrix<D>::from_triplets(std::move(ts), a.cols(), a.rows(), a.domain());
}

/// Gustavson row-by-row product. This is the exact brute-force oracle every
/// other multiply in the project is tested against.
template <ScalarDomain D>
SparseMatrix<D> naive_multiply(const SparseMatrix<D>& a, const SparseMatrix<D>& b) {
    if (a.cols() != b.rows()) throw DimensionError("naive_multiply: inner dimensions differ");
    if (!(a.domain() == b.domain())) throw DomainError("naive_multiply: domain mismatch");
    const D& d = a.domain();
    auto boff = b.row_offsets();
    const auto& be = b.entries();
    std::vector<typename SparseMatrix<D>::entry_type> out;
    std::vector<typename SparseMatrix<D>::entry_type> row_acc;
    std::size_t i0 = 0;
    const auto& ae = a.entries();
    while (i0 < ae.size()) {
        std::size_t i1 = i0;
        const index_t row = ae[i0].row;
        while (i1 < ae.size() && ae[i1].row == row) ++i1;
        row_acc.clear();
        for (std::size_t t = i0; t < i1; ++t) {
            const index_t k = ae[t].col;
            for (std::size_t u = boff[k]; u < boff[k + 1]; ++u)
                row_acc.push_back({row, be[u].col, d.mul(ae[t].value, be[u].value)});
        }
        std::sort(row_acc.begin(), row_acc.end(),
                  [](const auto& x, const auto& y) { return x.col < y.col; });
        std::size_t t = 0;
        while (t < row_acc.size()) {
            auto v = row_acc[t].value;
            std::size_t u = t + 1;
            while (u < row_acc.size() && row_acc[u].col == row_acc[t].col) {
                v = d.add(v, row_acc[u].value);
                ++u;
            }
            if (!d.is_zero(v)) out.push_back({row, row_acc[t].col, std::move(v)});
            t = u;
        }
        i0 = i1;
    }
    return SparseMatrix<D>::from_triplets(std::move(out), a.rows(), b.cols(), d);
}

template <ScalarDomain D>
SparseMatrix<D> sparse_add(const SparseMatrix<D>& a, const SparseMatrix<D>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("sparse_add: shape mismatch");
    if (!(a.domain() == b.domain())) throw DomainError("sparse_add: domain mismatch");
    std::vector<typename SparseMatrix<D>::entry_type> ts;
    ts.reserve(a.nnz() + b.nnz());
    ts.insert(ts.end(), a.entries().begin(), a.entries().end());
    ts.insert(ts.end(), b.entries().begin(), b.entries().end());
    return SparseMatrix<D>::from_triplets(std::move(ts), a.rows(), a.cols(), a.domain());
}

template <ScalarDomain D>
SupportSet support(const SparseMatrix<D>& a) {
    std::vector<std::pair<index_t, index_t>> ps;
    ps.reserve(a.nnz());
    for (const auto& e : a.entries()) ps.emplace_back(e.row, e.col);
    return SupportSet::from_pairs(std::move(ps), a.rows(), a.cols());
}

// ---- domain conversions ---------------------------------------------------

/// Reinterpret boolean/nonneg/int entries as plain nonnegative counts.
inline SparseMatrix<Int64Domain> as_counts(const SparseMatrix<Int64Domain>& a) {
    std::vector<Entry<std::int64_t>> ts(a.entries().begin(), a.entries().end());
    return SparseMatrix<Int64Domain>::from_triplets(std::move(ts), a.rows(), a.cols(),
                                                    Int64Domain::nonneg());
}

/// Threshold nonnegative counts back to a boolean matrix.
inline SparseMatrix<Int64Domain> threshold_to_boolean(const SparseMatrix<Int64Domain>& a) {
    std::vector<Entry<std::int64_t>> ts;
    ts.reserve(a.nnz());
    for (const auto& e : a.entries()) ts.push_back({e.row, e.col, 1});
    return SparseMatrix<Int64Domain>::from_triplets(std::move(ts), a.rows(), a.cols(),
                                                    Int64Domain::boolean());
}

inline SparseMatrix<BigIntDomain> to_bigint(const SparseMatrix<Int64Domain>& a) {
    std::vector<Entry<BigInt>> ts;
    ts.reserve(a.nnz());
    for (const auto& e : a.entries()) ts.push_back({e.row, e.col, BigInt(e.value)});
    return SparseMatrix<BigIntDomain>::from_triplets(std::move(ts), a.rows(), a.cols(),
                                                     BigIntDomain());
}

}  // namespace ssmm
