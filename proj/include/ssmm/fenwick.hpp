#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "ssmm/common.hpp"

namespace ssmm {

/// Fenwick tree with hash-backed storage: only nodes ever touched by an
/// update are materialized. The bucket-selection counters need prefix sums
/// over bucket ranges but receive far fewer updates than there are buckets,
/// so dense per-row arrays would blow the memory budget.
class SparseFenwick {
public:
    SparseFenwick() = default;
    explicit SparseFenwick(index_t n) : n_(n) {}

    void add(index_t pos, std::int64_t delta) {
        for (index_t i = pos + 1; i <= n_; i += i & -i) nodes_[i] += delta;
    }

    /// Sum of positions [0, last].
    std::int64_t prefix(index_t last) const {
        std::int64_t s = 0;
        for (index_t i = std::min(last + 1, n_); i > 0; i -= i & -i) {
            auto it = nodes_.find(i);
            if (it != nodes_.end()) s += it->second;
        }
        return s;
    }

    /// Sum of positions [lo, hi] inclusive.
    std::int64_t range(index_t lo, index_t hi) const {
        if (hi < lo) return 0;
        return prefix(hi) - (lo > 0 ? prefix(lo - 1) : 0);
    }

    index_t size() const { return n_; }

private:
    index_t n_ = 0;
    std::unordered_map<index_t, std::int64_t> nodes_;
};

}  // namespace ssmm
