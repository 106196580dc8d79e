#pragma once

// Squares in prefixes of the Fibonacci word.
//
//   A(n)  distinct squares ww occurring in F[1,n]
//   B(n)  square occurrences in F[1,n]
//   a(n)  1 iff a square occurs for the first time ending at n
//   b(n)  number of square occurrences ending exactly at n
//
// Square occurrences whose kernel is K_m at its p-th occurrence end on two
// runs of consecutive positions, <1,K_m,p> (|w| = f_{m+1}) and <2,K_m,p>
// (|w| = f_{m-1}). Padding each run gives the Gamma blocks
//   Gamma_{2,m,p} = [base + f_m - 1,     base + f_{m+1} - 2]
//   Gamma_{1,m,p} = [base + f_{m+1} - 1, base + f_{m+2} - 2]
// with base = p f_{m+1} + floor(phi p) f_m, which decompose recursively
// (tau_1, tau_2) into blocks of smaller kernels.

#include "fibsq/integer.hpp"
#include "fibsq/range.hpp"

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

namespace fibsq {

struct SquareFamily {
    int case_id = 1;  // 1 or 2
    int m = 1;
    Integer p = 1;
    PositionRange range;
    Integer root_length;  // f_{m+1} for case 1, f_{m-1} for case 2
};

/// <case_id, K_m, p>. Throws DomainError for case_id not in {1,2}, m < 1 or p < 1.
SquareFamily square_family(int case_id, int m, const Integer& p);

struct GammaBlock {
    int case_id = 1;
    int m = 1;
    Integer p = 1;
    PositionRange range;
};

/// Gamma_{case_id,m,p}; same preconditions as square_family.
GammaBlock gamma_block(int case_id, int m, const Integer& p);

/// a(n), n >= 1.
int a_indicator(const Integer& n);

/// A(n) by the two-branch closed form; n >= 1.
Integer count_distinct_squares(const Integer& n);

// --- recursive structure S ---------------------------------------------------

struct SquareTreeNode {
    SquareFamily family;
    std::vector<SquareTreeNode> children;
};

/// The finite tree rooted at <root_case, K_m, 1>: tau_1 expands case-1 nodes
/// with m >= 2, tau_2 expands case-2 nodes with m >= 3.
SquareTreeNode square_tree(int root_case, int m);

/// Children of a single node (empty for leaves).
std::vector<SquareFamily> square_children(const SquareFamily& node);

/// One node per line, `<case,K_m,p> [lo,hi]`, two spaces of indent per level.
void dump_tree(std::ostream& os, const SquareTreeNode& root);

// --- b(n) blocks ---------------------------------------------------------------

struct SquareBlocks {
    CountVector gamma2;  // b over Gamma_{2,m,1} = [f_{m+2}-1, 2f_{m+1}-2]
    CountVector gamma1;  // b over Gamma_{1,m,1} = [2f_{m+1}-1, f_{m+3}-2]
};

/// b over Gamma_{2,m,1} and Gamma_{1,m,1}; m >= 1. Memoized; the returned
/// reference stays valid for the life of the process. Throws CapacityError
/// if the block is longer than materialize_limit().
const SquareBlocks& b_block(int m);

/// b(n), n >= 1, by block lookup.
std::uint32_t b_at(const Integer& n);

/// (sum of b over Gamma_{1,m,1}, sum of b over Gamma_{2,m,1}) by closed form.
std::pair<Integer, Integer> block_sums(int m);

/// B(f_{m+3} - 2), m >= -1.
Integer b_closed_form_fib(int m);
/// B(2 f_{m+1} - 2), m >= 0.
Integer b_closed_form_twofib(int m);
/// (B(f_{m+3}-2), B(2f_{m+1}-2)); m >= 0.
std::pair<Integer, Integer> b_closed_forms(int m);

/// (b(f_m - 1), b(f_m)) = (floor((m-1)/2), floor(m/2 - 1)); m >= 2.
std::pair<Integer, Integer> b_boundary(int m);

/// B(f_m), m >= 2.
Integer count_square_occurrences_at_fib(int m);

enum class SuffixAnchor { fib, twofib };

/// Sum of b(i) for i from f_m - 1 (fib) or 2f_{m-1} - 1 (twofib) up to n.
/// Windows: fib needs m >= 3 and f_m <= n+1 <= 2f_{m-1}-1; twofib needs
/// m >= 4 and 2f_{m-1} <= n+1 <= f_{m+1}-1. Never materializes the word.
Integer sum_b_suffix(SuffixAnchor anchor, int m, const Integer& n);

/// B(n) by anchoring at a closed form and adding sum_b_suffix.
Integer count_square_occurrences(const Integer& n);

/// B(n) as the running total of materialized b blocks.
Integer count_square_occurrences_by_blocks(const Integer& n);

}  // namespace fibsq
