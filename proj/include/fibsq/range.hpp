#pragma once

#include "fibsq/integer.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace fibsq {

/// Inclusive interval [lo, hi] of 1-based positions; empty iff hi == lo - 1.
struct PositionRange {
    Integer lo;
    Integer hi;

    /// Throws DomainError when hi < lo - 1.
    static PositionRange make(Integer lo, Integer hi);

    Integer cardinality() const { return hi - lo + 1; }
    bool empty() const { return hi < lo; }
    bool contains(const Integer& n) const { return lo <= n && n <= hi; }

    friend bool operator==(const PositionRange&, const PositionRange&) = default;
};

std::ostream& operator<<(std::ostream& os, const PositionRange& r);

/// Per-position occurrence counts aligned to `range`.
struct CountVector {
    PositionRange range;
    std::vector<std::uint32_t> counts;

    /// Count at absolute position n; throws DomainError outside range.
    std::uint32_t at(const Integer& n) const;
    std::uint64_t sum() const;
};

}  // namespace fibsq
