#pragma once

// Arithmetic and word-generation kernel for the Fibonacci word
//   F = abaababaabaab...,  the fixed point of a -> ab, b -> a.
//
// Indexing follows f_{-2} = 0, f_{-1} = 1, f_{m+1} = f_m + f_{m-1}, so
// f_0 = 1, f_1 = 2, f_2 = 3, f_3 = 5, ... and f_m = |sigma^m(a)|.
// F_{-1} = b and F_{-2} is the empty word.
//
// phi denotes (sqrt(5) - 1) / 2 throughout; floor(phi * p) is computed exactly.

#include "fibsq/integer.hpp"
#include "fibsq/word.hpp"

#include <cstddef>
#include <deque>
#include <memory>
#include <shared_mutex>
#include <string>

namespace fibsq {

/// Memo of Fibonacci numbers f_m, m >= -2. Grows on demand; references
/// returned by at() stay valid for the table's lifetime.
class FibTable {
public:
    FibTable();
    const Integer& at(int m);
    /// Largest m >= -1 with f_m <= x (x >= 1).
    int index_floor(const Integer& x);

private:
    // values_[i] holds f_{i-2}
    std::deque<Integer> values_;
    std::shared_mutex mutex_;
};

/// f_m from the process-wide table. Throws DomainError for m < -2.
const Integer& fib(int m);

/// Largest m >= -1 with f_m <= x. Throws DomainError for x < 1.
int fib_index_floor(const Integer& x);

// --- materialization ------------------------------------------------------

/// Current cap on the number of letters any operation may materialize.
/// Default 10^7, overridden by the FIBSQ_MATERIALIZE_LIMIT environment
/// variable on first use, or by set_materialize_limit().
std::size_t materialize_limit();
void set_materialize_limit(std::size_t limit);

/// Shared, immutable buffer holding at least the first n letters of F.
/// Throws CapacityError above materialize_limit().
std::shared_ptr<const std::string> fibonacci_letters(std::size_t n);

/// F[1, n].
Word prefix(const Integer& n);

/// F[n], n >= 1.
Letter letter_at(const Integer& n);

/// F_m = sigma^m(a) for m >= -2 (F_{-1} = b, F_{-2} = empty).
Word fib_word(int m);

// --- exact arithmetic -----------------------------------------------------

/// floor(phi * p) for p >= 1, as floor((isqrt(5 p^2) - p) / 2).
Integer phi_floor(const Integer& p);

/// Position of the p-th occurrence of letter x: P(a,p) = p + floor(phi p),
/// P(b,p) = 2p + floor(phi p).
Integer pos_letter(Letter x, const Integer& p);

// --- singular words -------------------------------------------------------

/// delta_m, the last letter of F_m: a iff m is even. m >= -1.
Letter delta(int m);

struct SingularWord {
    int order = -1;
    Word content;
    Letter last_letter_delta = Letter::b;  // delta_m
};

/// K_m = delta_{m+1} F_m delta_m^{-1}, m >= -1. Materializes f_m letters.
SingularWord singular_word(int m);

/// Ending position of the p-th occurrence of K_m in F:
/// P(K_m, p) = p f_{m+1} + (floor(phi p) + 1) f_m - 1.
Integer pos_kernel(int m, const Integer& p);

/// f_m f_k + f_{m-1} f_{k-1} == f_{m+k+1}, for m, k >= -1.
bool fib_product_identity_check(int m, int k);

}  // namespace fibsq
