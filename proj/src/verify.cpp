#include "fibsq/verify.hpp"

#include "fibsq/cubes.hpp"
#include "fibsq/fibword.hpp"
#include "fibsq/oracle.hpp"
#include "fibsq/squares.hpp"

#include <sstream>

namespace fibsq {

namespace {

struct Checker {
    VerifyResult& result;
    std::size_t& counter;

    const char* index_name = "n";

    bool operator()(const char* quantity, const Integer& index, const Integer& expected,
                    const Integer& actual) {
        ++counter;
        if (expected == actual) return true;
        result.first_divergence = Divergence{quantity, index_name, index, expected, actual};
        return false;
    }
};

}  // namespace

FastPaths FastPaths::standard() {
    FastPaths p;
    p.A = count_distinct_squares;
    p.B = count_square_occurrences;
    p.C = count_distinct_cubes;
    p.D = count_cube_occurrences;
    p.B_blocks = count_square_occurrences_by_blocks;
    p.D_blocks = count_cube_occurrences_by_blocks;
    p.a = a_indicator;
    p.b = [](const Integer& n) { return static_cast<int>(b_at(n)); };
    p.c = c_indicator;
    p.d = [](const Integer& n) { return static_cast<int>(d_at(n)); };
    return p;
}

std::string describe(const Divergence& d) {
    std::ostringstream os;
    os << "divergence in " << d.quantity << " at " << d.index_name << '=' << d.index
       << ": expected " << d.expected << ", got " << d.actual;
    return os.str();
}

VerifyResult oracle_sweep(std::size_t max_n, const FastPaths& paths) {
    VerifyResult result;
    const auto truth = oracle::brute_force_counts(max_n);
    Checker check{result, result.positions_checked};
    for (std::size_t i = 1; i <= max_n; ++i) {
        const Integer n = i;
        const bool ok = check("a(n)", n, truth.a[i], paths.a(n)) &&
                        check("b(n)", n, truth.b[i], paths.b(n)) &&
                        check("c(n)", n, truth.c[i], paths.c(n)) &&
                        check("d(n)", n, truth.d[i], paths.d(n)) &&
                        check("A(n)", n, truth.A[i], paths.A(n)) &&
                        check("B(n)", n, truth.B[i], paths.B(n)) &&
                        check("C(n)", n, truth.C[i], paths.C(n)) &&
                        check("D(n)", n, truth.D[i], paths.D(n)) &&
                        check("B(n) by blocks", n, truth.B[i], paths.B_blocks(n)) &&
                        check("D(n) by blocks", n, truth.D[i], paths.D_blocks(n));
        if (!ok) return result;
    }
    auto invariants = invariant_suite(max_n, paths);
    result.invariants_checked = invariants.invariants_checked;
    result.first_divergence = invariants.first_divergence;
    return result;
}

VerifyResult invariant_suite(std::size_t max_n, const FastPaths& paths) {
    VerifyResult result;
    Checker check{result, result.invariants_checked};
    const auto holds = [&](const char* what, const Integer& n, bool ok) {
        return check(what, n, 1, ok ? 1 : 0);
    };

    Integer prev[4] = {0, 0, 0, 0};
    for (std::size_t i = 1; i <= max_n; ++i) {
        const Integer n = i;
        const Integer cur[4] = {paths.A(n), paths.B(n), paths.C(n), paths.D(n)};
        const bool ok = check("A(n) - A(n-1) = a(n)", n, cur[0] - prev[0], paths.a(n)) &&
                        check("B(n) - B(n-1) = b(n)", n, cur[1] - prev[1], paths.b(n)) &&
                        check("C(n) - C(n-1) = c(n)", n, cur[2] - prev[2], paths.c(n)) &&
                        check("D(n) - D(n-1) = d(n)", n, cur[3] - prev[3], paths.d(n)) &&
                        holds("A(n) <= B(n)", n, cur[0] <= cur[1]) &&
                        holds("C(n) <= D(n)", n, cur[2] <= cur[3]);
        if (!ok) return result;
        std::copy(std::begin(cur), std::end(cur), std::begin(prev));
    }

    check.index_name = "m";
    for (int m = 1; fib(m + 3) - 2 <= max_n; ++m) {
        const auto& blk = b_block(m);
        const auto [s1, s2] = block_sums(m);
        if (!check("b block sum over Gamma_1", m, s1, blk.gamma1.sum()) ||
            !check("b block sum over Gamma_2", m, s2, blk.gamma2.sum())) {
            return result;
        }
    }
    for (int k = 3; fib(k + 3) - 2 <= max_n; ++k) {
        if (!check("d block sum", k, d_block_sum(k), d_block(k).sum())) return result;
    }
    for (int m = 6; fib(m) <= max_n; ++m) {
        const Integer n = fib(m);
        const bool ok = check("A(f_m)", m, 2 * fib(m - 2) - 2, paths.A(n)) &&
                        check("B(f_m)", m, count_square_occurrences_at_fib(m), paths.B(n)) &&
                        check("C(f_m)", m, count_distinct_cubes_at_fib(m), paths.C(n)) &&
                        check("D(f_m)", m, d_closed_form(m), paths.D(n));
        if (!ok) return result;
    }
    return result;
}

}  // namespace fibsq
