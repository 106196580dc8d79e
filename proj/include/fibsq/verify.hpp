#pragma once

// Cross-checks of the fast counting paths against the brute-force oracle.

#include "fibsq/integer.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fibsq {

/// The functions under test. Defaults are the library's fast paths; tests
/// swap members to check that the harness notices a wrong formula.
struct FastPaths {
    std::function<Integer(const Integer&)> A, B, C, D;
    std::function<Integer(const Integer&)> B_blocks, D_blocks;
    std::function<int(const Integer&)> a, b, c, d;

    static FastPaths standard();
};

struct Divergence {
    std::string quantity;  // e.g. "B(n)" or "d block sum"
    std::string index_name = "n";
    Integer index;
    Integer expected;
    Integer actual;
};

std::string describe(const Divergence& d);

struct VerifyResult {
    std::size_t positions_checked = 0;
    std::size_t invariants_checked = 0;
    std::optional<Divergence> first_divergence;

    bool ok() const { return !first_divergence; }
};

/// Compares every per-position and cumulative count for 1 <= n <= max_n with
/// brute-force enumeration, then runs the invariant suite. Stops at the first
/// divergence in order of n. Throws CapacityError above the oracle limit.
VerifyResult oracle_sweep(std::size_t max_n, const FastPaths& paths = FastPaths::standard());

/// Internal consistency independent of the oracle: monotonicity, A <= B,
/// C <= D, per-position differences, block-sum closed forms and the counts
/// at Fibonacci points up to max_n.
VerifyResult invariant_suite(std::size_t max_n, const FastPaths& paths = FastPaths::standard());

}  // namespace fibsq
