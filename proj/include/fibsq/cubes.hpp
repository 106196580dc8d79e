#pragma once

// Cubes in prefixes of the Fibonacci word.
//
//   C(n), c(n)  distinct cubes in F[1,n] / first-occurrence indicator
//   D(n), d(n)  cube occurrences in F[1,n] / occurrences ending at n
//
// Cube occurrences with kernel K_m (m >= 3) at its p-th occurrence end on
// <K_m,p> = [base + 2f_{m-1}, base + f_{m+1} - 2], base = p f_{m+1} + floor(phi p) f_m,
// with root length f_{m-1}. The tree rooted at <K_m,1> lies inside
// Gamma_m = [f_{m+2} - 1, f_{m+3} - 2], which is also the unit of the d blocks.

#include "fibsq/integer.hpp"
#include "fibsq/range.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace fibsq {

struct CubeFamily {
    int m = 3;
    Integer p = 1;
    PositionRange range;
    Integer root_length;  // f_{m-1}
};

/// <K_m, p>; throws DomainError for m < 3 or p < 1.
CubeFamily cube_family(int m, const Integer& p);

/// c(n), n >= 1.
int c_indicator(const Integer& n);

/// C(n) by the two-branch closed form; n >= 1.
Integer count_distinct_cubes(const Integer& n);

/// C(f_m), m >= 0.
Integer count_distinct_cubes_at_fib(int m);

struct CubeTreeNode {
    CubeFamily family;
    std::vector<CubeTreeNode> children;
};

/// Children under tau_3 (m >= 5: <K_{m-2},P(b,p)+1>, <K_{m-1},P(a,p)+1>)
/// and tau_4 (m = 4: <K_3,P(a,p)+1>).
std::vector<CubeFamily> cube_children(const CubeFamily& node);

/// Tree of structure C rooted at <K_m, 1>, m >= 3.
CubeTreeNode cube_tree(int m);

/// One node per line, `<K_m,p> [lo,hi]`, two spaces of indent per level.
void dump_tree(std::ostream& os, const CubeTreeNode& root);

/// Gamma_k = [f_{k+2} - 1, f_{k+3} - 2].
PositionRange cube_gamma(int k);

/// d over Gamma_k, k >= 3. Blocks 3 and 4 are the seed values; later blocks
/// follow block_k = [block_{k-2}, block_{k-1}] + [0^(f_{k-3}+1), 1^(f_{k-2}-1), 0^(f_k)].
/// Memoized; throws CapacityError above materialize_limit().
const CountVector& d_block(int k);

/// d(n), n >= 1.
std::uint32_t d_at(const Integer& n);

/// Sum of d over Gamma_m by closed form, m >= 3.
Integer d_block_sum(int m);

/// D(f_m - 2) (equivalently D(f_m)), m >= 6.
Integer d_closed_form(int m);

/// Sum of d(i) for f_m - 1 <= i <= n, where m >= 5 and f_m <= n+1 < f_{m+1}.
Integer sum_d_suffix(int m, const Integer& n);

/// D(n) = D(f_m - 2) + sum_d_suffix(m, n).
Integer count_cube_occurrences(const Integer& n);

/// D(n) as the running total of materialized d blocks.
Integer count_cube_occurrences_by_blocks(const Integer& n);

}  // namespace fibsq
