#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibsq/errors.hpp"
#include "fibsq/fibword.hpp"
#include "fibsq/oracle.hpp"
#include "fibsq/squares.hpp"

#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace fibsq;

namespace {

const oracle::PrefixCounts& truth() {
    static const auto counts = oracle::brute_force_counts(10000);
    return counts;
}

std::vector<std::uint32_t> b_values(const Integer& lo, const Integer& hi) {
    std::vector<std::uint32_t> out;
    for (Integer n = lo; n <= hi; ++n) out.push_back(b_at(n));
    return out;
}

Integer base(int m, const Integer& p) { return p * fib(m + 1) + phi_floor(p) * fib(m); }

std::set<std::string> square_roots_at(const std::string& text, std::size_t end, int max_kernel) {
    std::set<std::string> out;
    for (auto len : oracle::power_roots_ending_at(end, 2)) {
        if (max_kernel > 0) {
            const int k = oracle::kernel(Word(std::string_view(text).substr(end - 2 * len, 2 * len))).order;
            if (k < 1 || k > max_kernel) continue;
        }
        out.insert(text.substr(end - len, len));
    }
    return out;
}

}  // namespace

TEST_CASE("square_family examples") {
    CHECK(square_family(2, 1, 1).range == PositionRange::make(4, 4));
    CHECK(square_family(1, 1, 1).range == PositionRange::make(6, 6));
    const auto f = square_family(1, 3, 1);
    CHECK(f.range == PositionRange::make(16, 19));
    CHECK(f.range.cardinality() == fib(3) - 1);
    CHECK(f.root_length == fib(4));
    CHECK(square_family(2, 3, 1).root_length == fib(2));
    CHECK_THROWS_AS(square_family(3, 1, 1), DomainError);
    CHECK_THROWS_AS(square_family(1, 0, 1), DomainError);
    CHECK_THROWS_AS(square_family(1, 1, 0), DomainError);
}

TEST_CASE("square family cardinalities") {
    for (int m = 1; m <= 30; ++m) {
        for (int p : {1, 2, 7, 1000}) {
            CHECK(square_family(1, m, p).range.cardinality() == fib(m) - 1);
            CHECK(square_family(2, m, p).range.cardinality() == fib(m - 3) + 1);
        }
    }
}

TEST_CASE("every position of a square family ends exactly one square with that kernel and root") {
    const auto text = prefix(10000).str();
    for (int m = 1; m <= 8; ++m) {
        for (int p = 1; p <= 10; ++p) {
            for (int c : {1, 2}) {
                const auto fam = square_family(c, m, p);
                for (Integer n = fam.range.lo; n <= fam.range.hi; ++n) {
                    const auto end = to_size(n);
                    const auto len = to_size(fam.root_length);
                    int matching = 0;
                    for (auto l : oracle::power_roots_ending_at(end, 2)) {
                        const Word sq(std::string_view(text).substr(end - 2 * l, 2 * l));
                        if (oracle::kernel(sq).order == m) {
                            ++matching;
                            CHECK(l == len);
                        }
                    }
                    CHECK(matching == 1);
                }
            }
        }
    }
}

TEST_CASE("a_indicator") {
    CHECK(a_indicator(1) == 0);
    CHECK(a_indicator(3) == 0);
    CHECK(a_indicator(4) == 1);
    CHECK(a_indicator(5) == 0);
    CHECK(a_indicator(11) == 1);
    CHECK(a_indicator(12) == 1);  // window {2f_3, ..., f_4 + 2f_2 - 1} = {10, ..., 13}
    CHECK(a_indicator(13) == 1);
    CHECK(a_indicator(14) == 0);
    for (std::size_t n = 1; n <= 10000; ++n) REQUIRE(a_indicator(n) == int(truth().a[n]));
}

TEST_CASE("count_distinct_squares") {
    CHECK(count_distinct_squares(1) == 0);
    CHECK(count_distinct_squares(4) == 1);
    CHECK(count_distinct_squares(13) == 8);
    CHECK(count_distinct_squares(21) == 14);
    CHECK(count_distinct_squares(23) == 15);
    for (std::size_t n = 1; n <= 10000; ++n) REQUIRE(count_distinct_squares(n) == truth().A[n]);
    for (int m = 4; m <= 60; ++m) CHECK(count_distinct_squares(fib(m)) == 2 * fib(m - 2) - 2);
}

TEST_CASE("distinct-square branch boundaries against brute force (3 <= m <= 15)") {
    for (int m = 3; m <= 15; ++m) {
        const Integer joint = fib(m + 1) + 2 * fib(m - 1) - 1;
        for (const Integer& n : {Integer(2 * fib(m)), Integer(2 * fib(m) - 1), joint,
                                 Integer(joint + 1), Integer(2 * fib(m + 1) - 1)}) {
            CHECK(count_distinct_squares(n) == truth().A[to_size(n)]);
        }
        CHECK(count_distinct_squares(joint) == joint - fib(m - 1) - 2);
        CHECK(count_distinct_squares(joint + 1) == fib(m + 1) + fib(m - 1) - 3);
    }
}

TEST_CASE("gamma_block") {
    CHECK(gamma_block(1, 1, 1).range == PositionRange::make(5, 6));
    CHECK(gamma_block(2, 1, 1).range == PositionRange::make(4, 4));
    CHECK(gamma_block(2, 2, 1).range == PositionRange::make(7, 8));
    CHECK(gamma_block(1, 2, 1).range == PositionRange::make(9, 11));
    CHECK(gamma_block(2, 4, 1).range == PositionRange::make(20, 24));
    CHECK_THROWS_AS(gamma_block(0, 1, 1), DomainError);
    for (int m = 1; m <= 20; ++m) {
        for (int p = 1; p <= 50; ++p) {
            const auto g1 = gamma_block(1, m, p).range, g2 = gamma_block(2, m, p).range;
            CHECK(g1.cardinality() == fib(m));
            CHECK(g2.cardinality() == fib(m - 1));
            CHECK(g2.hi + 1 == g1.lo);
            CHECK(g1.lo + 1 == square_family(1, m, p).range.lo);
            CHECK(g1.hi == square_family(1, m, p).range.hi);
            CHECK(g2.lo == square_family(2, m, p).range.lo);
        }
    }
}

TEST_CASE("gamma recursion endpoints (m <= 20, p <= 50)") {
    for (int m = 2; m <= 20; ++m) {
        for (int p = 1; p <= 50; ++p) {
            const Integer pa = pos_letter(Letter::a, p) + 1;
            const auto parent1 = gamma_block(1, m, p).range;
            CHECK(gamma_block(2, m - 1, pa).range.lo == parent1.lo);
            CHECK(gamma_block(2, m - 1, pa).range.hi + 1 == gamma_block(1, m - 1, pa).range.lo);
            CHECK(gamma_block(1, m - 1, pa).range.hi == parent1.hi);
            if (m >= 3) {
                const Integer pb = pos_letter(Letter::b, p) + 1;
                const auto parent2 = gamma_block(2, m, p).range;
                CHECK(gamma_block(2, m - 2, pb).range.lo == parent2.lo);
                CHECK(gamma_block(2, m - 2, pb).range.hi + 1 == gamma_block(1, m - 2, pb).range.lo);
                CHECK(gamma_block(1, m - 2, pb).range.hi == parent2.hi);
            }
        }
    }
}

TEST_CASE("first-occurrence chain") {
    // <2,K_1,1>, <1,K_1,1>, <2,K_2,1>, ... are disjoint, increasing, and mark
    // exactly the positions with a(n) = 1; their Gamma blocks tile from 4 on.
    Integer last_hi = 0, next_gamma = 4;
    std::set<Integer> marked;
    for (int m = 1; m <= 16; ++m) {
        for (int c : {2, 1}) {
            const auto r = square_family(c, m, 1).range;
            CHECK(r.lo > last_hi);
            last_hi = r.hi;
            for (Integer n = r.lo; n <= r.hi; ++n) marked.insert(n);
            const auto g = gamma_block(c, m, 1).range;
            CHECK(g.lo == next_gamma);
            next_gamma = g.hi + 1;
        }
    }
    CHECK(square_family(1, 1, 1).range.lo == 6);  // 5 is skipped: a(5) = 0
    for (std::size_t n = 1; n <= 10000; ++n) {
        REQUIRE(marked.count(Integer(n)) == truth().a[n]);
    }
}

TEST_CASE("square_tree") {
    const auto t = square_tree(1, 5);
    REQUIRE(t.children.size() == 2);
    CHECK(t.family.range == PositionRange::make(42, 53));
    CHECK(t.children[0].family.case_id == 2);
    CHECK(t.children[0].family.m == 4);
    CHECK(t.children[0].family.p == 2);
    CHECK(t.children[1].family.case_id == 1);
    CHECK(t.children[1].family.m == 4);
    CHECK(t.children[1].family.p == 2);

    const auto t2 = square_tree(2, 5);
    REQUIRE(t2.children.size() == 2);
    CHECK(t2.children[0].family.case_id == 2);
    CHECK(t2.children[0].family.m == 3);
    CHECK(t2.children[0].family.p == 3);
    CHECK(t2.children[1].family.case_id == 1);
    CHECK(t2.children[1].family.p == 3);

    CHECK(square_tree(1, 1).children.empty());
    CHECK(square_tree(2, 2).children.empty());
    CHECK(square_tree(1, 2).children.size() == 2);

    std::ostringstream os;
    dump_tree(os, t);
    CHECK(os.str().find("<2,K_1,12> [51,51]") != std::string::npos);
    CHECK(os.str().rfind("<1,K_5,1> [42,53]\n", 0) == 0);
}

TEST_CASE("square tree children match the tau rules") {
    for (int m = 1; m <= 10; ++m) {
        for (int p = 1; p <= 20; ++p) {
            const auto one = square_children(square_family(1, m, p));
            const auto two = square_children(square_family(2, m, p));
            CHECK(one.size() == (m >= 2 ? 2u : 0u));
            CHECK(two.size() == (m >= 3 ? 2u : 0u));
            if (m >= 2) {
                CHECK(one[0].p == pos_letter(Letter::a, p) + 1);
                CHECK(one[0].m == m - 1);
                CHECK(one[1].case_id == 1);
            }
            if (m >= 3) {
                CHECK(two[0].p == pos_letter(Letter::b, p) + 1);
                CHECK(two[1].m == m - 2);
            }
        }
    }
}

TEST_CASE("b blocks match the printed values") {
    CHECK(b_values(1, 32) == std::vector<std::uint32_t>{0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 2,
                                                         2, 1, 1, 1, 2, 2, 2, 3, 2, 2, 2,
                                                         1, 2, 2, 2, 2, 2, 3, 3, 3, 4});
    CHECK(b_block(2).gamma1.counts == std::vector<std::uint32_t>{1, 1, 2});
    CHECK(b_block(2).gamma1.range == PositionRange::make(9, 11));
    CHECK(b_block(4).gamma1.counts == std::vector<std::uint32_t>{2, 2, 2, 2, 3, 3, 3, 4});
    CHECK(b_block(4).gamma1.range == PositionRange::make(25, 32));
    CHECK(b_block(3).gamma2.counts == std::vector<std::uint32_t>{2, 1, 1});
    CHECK(b_block(3).gamma2.range == PositionRange::make(12, 14));
    CHECK(b_at(1) == 0);
    CHECK(b_at(4) == 1);
    CHECK(b_at(32) == 4);
    CHECK_THROWS_AS(b_block(0), DomainError);
}

TEST_CASE("b blocks against brute force") {
    for (std::size_t n = 1; n <= 10000; ++n) REQUIRE(b_at(n) == truth().b[n]);
}

TEST_CASE("block_sums") {
    CHECK(block_sums(1) == std::pair<Integer, Integer>{1, 1});
    CHECK(block_sums(2) == std::pair<Integer, Integer>{4, 2});
    for (int m = 1; m <= 22; ++m) {
        const auto [s1, s2] = block_sums(m);
        CHECK(s1 == b_block(m).gamma1.sum());
        CHECK(s2 == b_block(m).gamma2.sum());
    }
}

TEST_CASE("closed forms divide exactly (m <= 60)") {
    for (int m = 1; m <= 60; ++m) CHECK_NOTHROW(block_sums(m));
    for (int m = -1; m <= 60; ++m) CHECK_NOTHROW(b_closed_form_fib(m));
    for (int m = 0; m <= 60; ++m) CHECK_NOTHROW(b_closed_forms(m));
    for (int m = 2; m <= 60; ++m) CHECK_NOTHROW(count_square_occurrences_at_fib(m));
}

TEST_CASE("b_closed_forms") {
    CHECK(b_closed_form_fib(-1) == 0);
    CHECK(b_closed_form_fib(4) == 52);
    CHECK(b_closed_forms(4) == std::pair<Integer, Integer>{52, 31});
    CHECK(b_closed_form_twofib(4) == 31);
    CHECK_THROWS_AS(b_closed_form_fib(-2), DomainError);
    CHECK_THROWS_AS(b_closed_form_twofib(-1), DomainError);
    for (int m = -1; m <= 12; ++m) {
        CHECK(b_closed_form_fib(m) == truth().B[to_size(fib(m + 3) - 2)]);
        if (m >= 0) CHECK(b_closed_form_twofib(m) == truth().B[to_size(2 * fib(m + 1) - 2)]);
    }
}

TEST_CASE("b_boundary") {
    CHECK(b_boundary(2) == std::pair<Integer, Integer>{0, 0});
    CHECK(b_boundary(5) == std::pair<Integer, Integer>{2, 1});
    CHECK(b_boundary(6) == std::pair<Integer, Integer>{2, 2});
    CHECK_THROWS_AS(b_boundary(1), DomainError);
    for (int m = 2; m <= 30; ++m) {
        const auto [x, y] = b_boundary(m);
        CHECK(x + y == m - 2);
        CHECK(x == b_at(fib(m) - 1));
        CHECK(y == b_at(fib(m)));
    }
}

TEST_CASE("count_square_occurrences_at_fib") {
    CHECK(count_square_occurrences_at_fib(2) == 0);
    CHECK(count_square_occurrences_at_fib(4) == 4);
    CHECK(count_square_occurrences_at_fib(6) == 26);
    for (int m = 2; m <= 18; ++m) CHECK(count_square_occurrences_at_fib(m) == truth().B[to_size(fib(m))]);
}

TEST_CASE("sum_b_suffix") {
    CHECK(sum_b_suffix(SuffixAnchor::fib, 6, 23) == 7);
    CHECK(sum_b_suffix(SuffixAnchor::fib, 6, 20) == 2);
    CHECK(sum_b_suffix(SuffixAnchor::twofib, 5, 15) == 1);
    CHECK(sum_b_suffix(SuffixAnchor::twofib, 6, 26) == 4);
    CHECK_THROWS_AS(sum_b_suffix(SuffixAnchor::twofib, 5, 23), DomainError);
    CHECK_THROWS_AS(sum_b_suffix(SuffixAnchor::twofib, 4, 15), DomainError);
    CHECK_THROWS_AS(sum_b_suffix(SuffixAnchor::fib, 2, 2), DomainError);

    for (int m = 3; m <= 20; ++m) {
        const std::size_t lo = to_size(fib(m) - 1);
        for (Integer n = fib(m) - 1; n + 1 <= 2 * fib(m - 1) - 1; ++n) {
            const auto i = to_size(n);
            if (i > 10000) break;
            REQUIRE(sum_b_suffix(SuffixAnchor::fib, m, n) == truth().B[i] - truth().B[lo - 1]);
        }
        if (m < 4) continue;
        const std::size_t lo2 = to_size(2 * fib(m - 1) - 1);
        for (Integer n = 2 * fib(m - 1) - 1; n + 1 <= fib(m + 1) - 1; ++n) {
            const auto i = to_size(n);
            if (i > 10000) break;
            REQUIRE(sum_b_suffix(SuffixAnchor::twofib, m, n) == truth().B[i] - truth().B[lo2 - 1]);
        }
    }
}

TEST_CASE("count_square_occurrences") {
    CHECK(count_square_occurrences(2) == 0);
    CHECK(count_square_occurrences(8) == 4);
    CHECK(count_square_occurrences(19) == 22);
    CHECK(count_square_occurrences(21) == 26);
    CHECK(count_square_occurrences(23) == 29);
    CHECK(count_square_occurrences(24) == 31);
    CHECK(count_square_occurrences(32) == 52);
    for (std::size_t n = 1; n <= 10000; ++n) {
        REQUIRE(count_square_occurrences(n) == truth().B[n]);
        REQUIRE(count_square_occurrences_by_blocks(n) == truth().B[n]);
    }
}

TEST_CASE("fast path equals block path on random n <= 1e6") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        const Integer n = pick(rng);
        REQUIRE(count_square_occurrences(n) == count_square_occurrences_by_blocks(n));
    }
}

TEST_CASE("fast path agrees with the Fibonacci-point formula far out") {
    for (int m = 2; m <= 120; ++m) CHECK(count_square_occurrences(fib(m)) == count_square_occurrences_at_fib(m));
}

TEST_CASE("kernel-filtered correspondence of square sets") {
    const auto text = prefix(10000).str();
    for (int m = 1; m <= 7; ++m) {
        for (int p = 1; p <= 5; ++p) {
            for (Integer i = 1; i <= fib(m) - 1; ++i) {
                const auto first = to_size(2 * fib(m + 1) + i - 1);
                const auto later = to_size(base(m, p) + fib(m + 1) + i - 1);
                CHECK(square_roots_at(text, first, 0) == square_roots_at(text, later, m));
            }
            for (Integer i = 1; i <= fib(m - 3) + 1; ++i) {
                const auto first = to_size(fib(m + 2) + i - 2);
                const auto later = to_size(base(m, p) + fib(m) + i - 2);
                CHECK(square_roots_at(text, first, 0) == square_roots_at(text, later, m));
            }
        }
    }
}

TEST_CASE("concurrent block lookups agree with the fast path") {
    std::vector<Integer> expect;
    std::vector<Integer> ns;
    for (int i = 1; i <= 16; ++i) ns.push_back(Integer(61 * i * i * i + 17 * i));
    for (const auto& n : ns) expect.push_back(count_square_occurrences(n));
    std::vector<Integer> got(ns.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < ns.size(); ++t) {
        pool.emplace_back([&, t] { got[t] = count_square_occurrences_by_blocks(ns[t]); });
    }
    for (auto& th : pool) th.join();
    CHECK(got == expect);
}
