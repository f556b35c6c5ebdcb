#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ssmm/common.hpp"

namespace ssmm {

/// A set of (row, column) pairs grouped by row, each group sorted. Holds the
/// support supersets the recovery step works on; degree(i) is the row size.
class SupportSet {
public:
    SupportSet() = default;
    SupportSet(index_t rows, index_t cols)
        : rows_(rows), cols_(cols), groups_(static_cast<std::size_t>(rows)) {
        if (rows < 0 || cols < 0) throw DimensionError("negative dimension");
    }

    static SupportSet from_pairs(std::vector<std::pair<index_t, index_t>> pairs, index_t rows,
                                 index_t cols) {
        SupportSet s(rows, cols);
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        for (const auto& [i, j] : pairs) {
            if (i < 0 || i >= rows || j < 0 || j >= cols)
                throw DimensionError("support pair out of range");
            s.groups_[static_cast<std::size_t>(i)].push_back(j);
        }
        s.size_ = pairs.size();
        return s;
    }

    index_t rows() const { return rows_; }
    index_t cols() const { return cols_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    index_t degree(index_t i) const {
        return static_cast<index_t>(groups_[static_cast<std::size_t>(i)].size());
    }
    const std::vector<index_t>& row(index_t i) const {
        return groups_[static_cast<std::size_t>(i)];
    }
    index_t max_degree() const {
        index_t m = 0;
        for (const auto& g : groups_) m = std::max(m, static_cast<index_t>(g.size()));
        return m;
    }

    std::vector<std::pair<index_t, index_t>> pairs() const {
        std::vector<std::pair<index_t, index_t>> ps;
        ps.reserve(size_);
        for (index_t i = 0; i < rows_; ++i)
            for (index_t j : groups_[static_cast<std::size_t>(i)]) ps.emplace_back(i, j);
        return ps;
    }

    /// Restriction to a subset of rows (other rows become empty).
    SupportSet restrict_rows(const std::vector<index_t>& keep) const {
        SupportSet s(rows_, cols_);
        for (index_t i : keep) {
            s.groups_[static_cast<std::size_t>(i)] = groups_[static_cast<std::size_t>(i)];
            s.size_ += groups_[static_cast<std::size_t>(i)].size();
        }
        return s;
    }

private:
    index_t rows_ = 0;
    index_t cols_ = 0;
    std::size_t size_ = 0;
    std::vector<std::vector<index_t>> groups_;
};

}  // namespace ssmm
