#pragma once

#include <utility>
#include <vector>

#include "ssmm/sparse.hpp"

namespace ssmm {

enum class DenseKind { Naive, Strassen };

/// Row-major dense matrix. Substrate for the dense multiplication backends.
template <ScalarDomain D>
class DenseMatrix {
public:
    using value_type = typename D::value_type;

    DenseMatrix() = default;
    DenseMatrix(index_t rows, index_t cols, D domain = D())
        : rows_(rows), cols_(cols), domain_(std::move(domain)),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                domain_.zero()) {
        if (rows < 0 || cols < 0) throw DimensionError("negative dimension");
    }

    index_t rows() const { return rows_; }
    index_t cols() const { return cols_; }
    const D& domain() const { return domain_; }

    value_type& at(index_t i, index_t j) {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const value_type& at(index_t i, index_t j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!a.domain_.eq(a.data_[i], b.data_[i])) return false;
        return true;
    }

private:
    index_t rows_ = 0;
    index_t cols_ = 0;
    D domain_{};
    std::vector<value_type> data_;
};

template <ScalarDomain D>
DenseMatrix<D> densify_to_dense(const SparseMatrix<D>& a) {
    DenseMatrix<D> m(a.rows(), a.cols(), a.domain());
    for (const auto& e : a.entries()) m.at(e.row, e.col) = e.value;
    return m;
}

template <ScalarDomain D>
SparseMatrix<D> sparsify_from_dense(const DenseMatrix<D>& m) {
    std::vector<typename SparseMatrix<D>::entry_type> ts;
    for (index_t i = 0; i < m.rows(); ++i)
        for (index_t j = 0; j < m.cols(); ++j)
            if (!m.domain().is_zero(m.at(i, j))) ts.push_back({i, j, m.at(i, j)});
    return SparseMatrix<D>::from_triplets(std::move(ts), m.rows(), m.cols(), m.domain());
}

namespace detail {

template <ScalarDomain D>
DenseMatrix<D> dense_naive(const DenseMatrix<D>& a, const DenseMatrix<D>& b) {
    const D& d = a.domain();
    DenseMatrix<D> c(a.rows(), b.cols(), d);
    for (index_t i = 0; i < a.rows(); ++i)
        for (index_t k = 0; k < a.cols(); ++k) {
            const auto& av = a.at(i, k);
            if (d.is_zero(av)) continue;
            for (index_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = d.add(c.at(i, j), d.mul(av, b.at(k, j)));
        }
    return c;
}

template <ScalarDomain D>
DenseMatrix<D> block(const DenseMatrix<D>& m, index_t r0, index_t c0, index_t rows,
                     index_t cols) {
    DenseMatrix<D> out(rows, cols, m.domain());
    const index_t rmax = std::min(rows, m.rows() - r0);
    const index_t cmax = std::min(cols, m.cols() - c0);
    for (index_t i = 0; i < rmax; ++i)
        for (index_t j = 0; j < cmax; ++j) out.at(i, j) = m.at(r0 + i, c0 + j);
    return out;
}

template <ScalarDomain D>
DenseMatrix<D> dense_add(const DenseMatrix<D>& a, const DenseMatrix<D>& b) {
    DenseMatrix<D> c(a.rows(), a.cols(), a.domain());
    for (index_t i = 0; i < a.rows(); ++i)
        for (index_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.domain().add(a.at(i, j), b.at(i, j));
    return c;
}

template <ScalarDomain D>
DenseMatrix<D> dense_sub(const DenseMatrix<D>& a, const DenseMatrix<D>& b) {
    DenseMatrix<D> c(a.rows(), a.cols(), a.domain());
    for (index_t i = 0; i < a.rows(); ++i)
        for (index_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.domain().sub(a.at(i, j), b.at(i, j));
    return c;
}

/// Strassen with zero-padding of odd dimensions at each level and a naive
/// cutoff. Correctness-first backend, not peak performance.
template <ScalarDomain D>
DenseMatrix<D> dense_strassen(const DenseMatrix<D>& a, const DenseMatrix<D>& b,
                              index_t cutoff) {
    const index_t x = a.rows(), y = a.cols(), z = b.cols();
    if (x <= cutoff || y <= cutoff || z <= cutoff) return dense_naive(a, b);
    const index_t xh = (x + 1) / 2, yh = (y + 1) / 2, zh = (z + 1) / 2;

    auto a11 = block(a, 0, 0, xh, yh), a12 = block(a, 0, yh, xh, yh);
    auto a21 = block(a, xh, 0, xh, yh), a22 = block(a, xh, yh, xh, yh);
    auto b11 = block(b, 0, 0, yh, zh), b12 = block(b, 0, zh, yh, zh);
    auto b21 = block(b, yh, 0, yh, zh), b22 = block(b, yh, zh, yh, zh);

    auto m1 = dense_strassen(dense_add(a11, a22), dense_add(b11, b22), cutoff);
    auto m2 = dense_strassen(dense_add(a21, a22), b11, cutoff);
    auto m3 = dense_strassen(a11, dense_sub(b12, b22), cutoff);
    auto m4 = dense_strassen(a22, dense_sub(b21, b11), cutoff);
    auto m5 = dense_strassen(dense_add(a11, a12), b22, cutoff);
    auto m6 = dense_strassen(dense_sub(a21, a11), dense_add(b11, b12), cutoff);
    auto m7 = dense_strassen(dense_sub(a12, a22), dense_add(b21, b22), cutoff);

    const D& d = a.domain();
    DenseMatrix<D> c(x, z, d);
    for (index_t i = 0; i < x; ++i)
        for (index_t j = 0; j < z; ++j) {
            typename D::value_type v = d.zero();
            if (i < xh && j < zh) {
                v = d.add(d.sub(d.add(m1.at(i, j), m4.at(i, j)), m5.at(i, j)), m7.at(i, j));
            } else if (i < xh) {
                v = d.add(m3.at(i, j - zh), m5.at(i, j - zh));
            } else if (j < zh) {
                v = d.add(m2.at(i - xh, j), m4.at(i - xh, j));
            } else {
                v = d.add(d.add(d.sub(m1.at(i - xh, j - zh), m2.at(i - xh, j - zh)),
                                m3.at(i - xh, j - zh)),
                          m6.at(i - xh, j - zh));
            }
            c.at(i, j) = v;
        }
    return c;
}

}  // namespace detail

template <ScalarDomain D>
DenseMatrix<D> dense_multiply(const DenseMatrix<D>& a, const DenseMatrix<D>& b,
                              DenseKind kind = DenseKind::Naive, index_t strassen_cutoff = 64) {
    if (a.cols() != b.rows()) throw DimensionError("dense_multiply: inner dimensions differ");
    if (!(a.domain() == b.domain())) throw DomainError("dense_multiply: domain mismatch");
    if (kind == DenseKind::Naive) return detail::dense_naive(a, b);
    return detail::dense_strassen(a, b, std::max<index_t>(1, strassen_cutoff));
}

}  // namespace ssmm
