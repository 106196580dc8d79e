#include "fibsq/range.hpp"

#include "fibsq/errors.hpp"

#include <numeric>

namespace fibsq {

PositionRange PositionRange::make(Integer lo, Integer hi) {
    if (hi + 1 < lo) {
        throw DomainError("invalid range [" + lo.str() + "," + hi.str() + "]");
    }
    return PositionRange{std::move(lo), std::move(hi)};
}

std::ostream& operator<<(std::ostream& os, const PositionRange& r) {
    return os << '[' << r.lo << ',' << r.hi << ']';
}

std::uint32_t CountVector::at(const Integer& n) const {
    if (!range.contains(n)) {
        throw DomainError("position " + n.str() + " outside block [" +
                          range.lo.str() + "," + range.hi.str() + "]");
    }
    return counts[to_size(n - range.lo)];
}

std::uint64_t CountVector::sum() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

}  // namespace fibsq
