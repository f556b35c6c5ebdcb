#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ssmm {

using index_t = std::int64_t;

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when the randomized recovery leaves some support pair uncovered.
// The Monte Carlo contract fails loudly instead of emitting a wrong matrix.
struct IsolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline index_t ceil_log2(index_t n) {
    index_t l = 0;
    index_t p = 1;
    while (p < n) {
        p *= 2;
        ++l;
    }
    return l;
}

inline index_t floor_log2(index_t n) {
    index_t l = 0;
    while (n >= 2) {
        n /= 2;
        ++l;
    }
    return l;
}

}  // namespace ssmm
