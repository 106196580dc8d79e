#include "fibsq/integer.hpp"

#include "fibsq/errors.hpp"

#include <limits>

namespace fibsq {

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of a negative number");
    if (n < 2) return n;
    // Start above the root: 2^ceil(bits/2) > sqrt(n).
    const auto bits = boost::multiprecision::msb(n) + 1;
    Integer x = Integer(1) << ((bits + 1) / 2);
    while (true) {
        Integer y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

Integer exact_div5(const Integer& num, std::string_view what) {
    Integer q, r;
    boost::multiprecision::divide_qr(num, Integer(5), q, r);
    if (r != 0) {
        throw InvariantError(std::string(what) + ": numerator " + num.str() +
                             " is not divisible by 5");
    }
    return q;
}

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw DomainError("empty integer");
    Integer v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw DomainError("not a non-negative decimal integer: '" +
                              std::string(text) + "'");
        }
        v = v * 10 + (c - '0');
    }
    return v;
}

std::size_t to_size(const Integer& v) {
    if (v < 0 || v > std::numeric_limits<std::size_t>::max()) {
        throw CapacityError("value " + v.str() + " does not fit a size_t");
    }
    return v.convert_to<std::size_t>();
}

}  // namespace fibsq
