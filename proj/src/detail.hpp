#pragma once

#include "fibsq/errors.hpp"
#include "fibsq/integer.hpp"

#include <string>

namespace fibsq::detail {

/// Largest m >= lo with bound(m) <= n, for bound strictly increasing in m.
/// Requires bound(lo) <= n.
template <class Bound>
int largest_index(int lo, const Integer& n, Bound bound) {
    int step = 1;
    int hi = lo + step;
    while (bound(hi) <= n) {
        lo = hi;
        step *= 2;
        hi = lo + step;
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (bound(mid) <= n) lo = mid; else hi = mid;
    }
    return lo;
}

inline void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

}  // namespace fibsq::detail
