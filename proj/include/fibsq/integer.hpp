#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace fibsq {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// floor(sqrt(n)) by Newton iteration. Throws DomainError for n < 0.
Integer isqrt(const Integer& n);

/// num / 5 for closed forms whose coefficients are fifths. Throws
/// InvariantError naming `what` if num is not a multiple of 5.
Integer exact_div5(const Integer& num, std::string_view what);

/// Parses a non-negative decimal integer; throws DomainError on anything else.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& v) { return v.str(); }

/// Narrowing for indices into materialized data; throws CapacityError when
/// v does not fit.
std::size_t to_size(const Integer& v);

}  // namespace fibsq
