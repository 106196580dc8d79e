#pragma once

// Brute-force ground truth over materialized prefixes of the Fibonacci word.
// Everything here is direct letter comparison; nothing uses the closed forms.

#include "fibsq/fibword.hpp"
#include "fibsq/word.hpp"

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace fibsq::oracle {

/// Largest prefix the oracle will scan (default 10^4).
std::size_t oracle_limit();
void set_oracle_limit(std::size_t limit);

struct OccurrenceRecord {
    std::size_t end = 0;
    std::size_t root_length = 0;
    int power = 2;

    friend bool operator==(const OccurrenceRecord&, const OccurrenceRecord&) = default;
};

/// Root lengths L such that the factor of length power*L ending at `end` is a
/// power-th power, ascending.
std::vector<std::size_t> power_roots_ending_at(std::size_t end, int power);

/// All power-th power occurrences ending at or before n, ordered by end then
/// root length. power >= 2.
std::vector<OccurrenceRecord> enumerate_powers(std::size_t n, int power);

/// Distinct roots w such that w^power occurs in F[1,n].
std::set<Word> distinct_powers(std::size_t n, int power);

/// Whether w occurs in F. Scans F[1, 4|w| + 64] first and widens the window
/// before answering no.
bool is_factor(const Word& w);

/// Ker(w): the longest singular word occurring in w. Throws DomainError if w
/// is not a factor of F, InvariantError if the kernel occurs more than once.
SingularWord kernel(const Word& w);

/// 1-based start positions of the first `count` occurrences of w in F.
std::vector<std::size_t> occurrence_starts(const Word& w, std::size_t count);

struct ReturnWordDecomposition {
    Word factor;
    std::vector<Word> returns;                  // r_1 .. r_count
    std::vector<std::size_t> occurrence_starts; // count + 1 starts
};

/// The first `count` return words of w: r_p = F[start_p, start_{p+1} - 1].
ReturnWordDecomposition return_words(const Word& w, std::size_t count);

/// True iff coding the return-word sequence by first appearance (first -> a,
/// second -> b) reproduces F[1, count].
bool verify_return_structure(const Word& w, std::size_t count);

/// Per-position and cumulative counts for 1 <= n <= max_n, index 0 unused.
struct PrefixCounts {
    std::vector<std::uint32_t> a, b, c, d;
    std::vector<std::uint64_t> A, B, C, D;
};

PrefixCounts brute_force_counts(std::size_t max_n);

}  // namespace fibsq::oracle
