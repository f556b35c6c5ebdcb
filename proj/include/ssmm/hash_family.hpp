#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "ssmm/support_set.hpp"

namespace ssmm {

/// Explicitly tabulated hash functions h : [domain_size] -> [buckets].
struct HashFamily {
    index_t domain_size = 0;
    index_t buckets = 0;
    std::vector<std::vector<std::int32_t>> functions;

    std::size_t size() const { return functions.size(); }
};

/// Independent uniform tabulated functions; deterministic given the seed.
inline HashFamily sample_random_family(index_t domain_size, index_t buckets, index_t count,
                                       std::uint64_t seed) {
    if (buckets < 1) throw DomainError("sample_random_family: buckets must be >= 1");
    HashFamily fam{domain_size, buckets, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int32_t> dist(0, static_cast<std::int32_t>(buckets - 1));
    fam.functions.reserve(static_cast<std::size_t>(count));
    for (index_t f = 0; f < count; ++f) {
        std::vector<std::int32_t> h(static_cast<std::size_t>(domain_size));
        for (auto& v : h) v = dist(rng);
        fam.functions.push_back(std::move(h));
    }
    return fam;
}

/// A pair (i, j) of s is isolated under h when no other column of row i lands
/// in j's bucket. Linear-time per-row bucket counting.
inline std::vector<std::pair<index_t, index_t>> isolated_pairs(const SupportSet& s,
                                                               std::span<const std::int32_t> h,
                                                               index_t buckets) {
    if (static_cast<index_t>(h.size()) < s.cols())
        throw DimensionError("isolated_pairs: hash table smaller than column count");
    std::vector<std::int32_t> count(static_cast<std::size_t>(buckets), 0);
    std::vector<std::int32_t> touched;
    std::vector<std::pair<index_t, index_t>> out;
    for (index_t i = 0; i < s.rows(); ++i) {
        const auto& cols = s.row(i);
        if (cols.empty()) continue;
        touched.clear();
        for (index_t j : cols) {
            const std::int32_t b = h[static_cast<std::size_t>(j)];
            if (count[b]++ == 0) touched.push_back(b);
        }
        for (index_t j : cols)
            if (count[h[static_cast<std::size_t>(j)]] == 1) out.emplace_back(i, j);
        for (std::int32_t b : touched) count[b] = 0;
    }
    return out;
}

}  // namespace ssmm
