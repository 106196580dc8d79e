#include "fibsq/cubes.hpp"

#include "detail.hpp"
#include "fibsq/errors.hpp"
#include "fibsq/fibword.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace fibsq {

using detail::require;

CubeFamily cube_family(int m, const Integer& p) {
    require(m >= 3, "cube kernel order must be >= 3, got " + std::to_string(m));
    require(p >= 1, "occurrence index must be >= 1, got " + p.str());
    const Integer base = p * fib(m + 1) + phi_floor(p) * fib(m);
    return CubeFamily{m, p,
                      PositionRange::make(base + 2 * fib(m - 1), base + fib(m + 1) - 2),
                      fib(m - 1)};
}

namespace {

// f_{m+1} + 2 f_{m-1}: first position of <K_m, 1>.
Integer first_cube_window(int m) { return fib(m + 1) + 2 * fib(m - 1); }

}  // namespace

int c_indicator(const Integer& n) {
    require(n >= 1, "position must be >= 1, got " + n.str());
    if (n < 14) return 0;
    const int m = detail::largest_index(3, n, first_cube_window);
    return n <= 2 * fib(m + 1) - 2 ? 1 : 0;
}

Integer count_distinct_cubes(const Integer& n) {
    require(n >= 1, "position must be >= 1, got " + n.str());
    if (n < 14) return 0;
    const int m = detail::largest_index(3, n, first_cube_window);
    if (n <= 2 * fib(m + 1) - 2) return n - fib(m + 1) - fib(m - 1) - m + 1;
    return fib(m) - m - 1;
}

Integer count_distinct_cubes_at_fib(int m) {
    require(m >= 0, "C(f_m) needs m >= 0, got " + std::to_string(m));
    if (m <= 5) return 0;
    return fib(m - 3) - m + 2;
}

std::vector<CubeFamily> cube_children(const CubeFamily& node) {
    std::vector<CubeFamily> out;
    if (node.m >= 5) {
        out.push_back(cube_family(node.m - 2, pos_letter(Letter::b, node.p) + 1));
        out.push_back(cube_family(node.m - 1, pos_letter(Letter::a, node.p) + 1));
    } else if (node.m == 4) {
        out.push_back(cube_family(3, pos_letter(Letter::a, node.p) + 1));
    }
    return out;
}

namespace {

CubeTreeNode expand(CubeFamily family) {
    CubeTreeNode node{std::move(family), {}};
    for (auto& child : cube_children(node.family)) {
        node.children.push_back(expand(std::move(child)));
    }
    return node;
}

void dump(std::ostream& os, const CubeTreeNode& node, int depth) {
    const auto& f = node.family;
    os << std::string(2 * static_cast<std::size_t>(depth), ' ') << "<K_" << f.m << ','
       << f.p << "> " << f.range << '\n';
    for (const auto& c : node.children) dump(os, c, depth + 1);
}

}  // namespace

CubeTreeNode cube_tree(int m) { return expand(cube_family(m, 1)); }

void dump_tree(std::ostream& os, const CubeTreeNode& root) { dump(os, root, 0); }

PositionRange cube_gamma(int k) {
    require(k >= 3, "Gamma_k needs k >= 3, got " + std::to_string(k));
    return PositionRange::make(fib(k + 2) - 1, fib(k + 3) - 2);
}

// --- d blocks ------------------------------------------------------------------

namespace {

struct CubeEntry {
    CountVector block;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> cumulative;
};

std::unique_ptr<CubeEntry> build_entry(int k, const std::deque<std::unique_ptr<CubeEntry>>& done) {
    // done[j] holds the entry for k = j + 3
    std::vector<std::uint32_t> v;
    if (k == 3) {
        v = {0, 0, 1, 0, 0, 0, 0, 0};
    } else if (k == 4) {
        v = {0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0};
    } else {
        const auto& older = done[static_cast<std::size_t>(k - 5)]->block.counts;
        const auto& newer = done[static_cast<std::size_t>(k - 4)]->block.counts;
        v = older;
        v.insert(v.end(), newer.begin(), newer.end());
        const auto zeros = to_size(fib(k - 3) + 1);
        const auto ones = to_size(fib(k - 2) - 1);
        for (std::size_t i = zeros; i < zeros + ones; ++i) v[i] += 1;
    }
    auto range = cube_gamma(k);
    if (range.cardinality() != v.size()) {
        throw InvariantError("d block " + std::to_string(k) + " has " +
                             std::to_string(v.size()) + " entries");
    }
    auto entry = std::make_unique<CubeEntry>();
    entry->block = CountVector{std::move(range), std::move(v)};
    entry->cumulative.reserve(entry->block.counts.size());
    std::uint64_t run = 0;
    for (auto c : entry->block.counts) entry->cumulative.push_back(run += c);
    entry->total = run;
    return entry;
}

class CubeMemo {
public:
    const CubeEntry& get(int k) {
        require(k >= 3, "d block index must be >= 3, got " + std::to_string(k));
        const auto idx = static_cast<std::size_t>(k - 3);
        {
            std::shared_lock lock(mutex_);
            if (idx < entries_.size()) return *entries_[idx];
        }
        const Integer len = fib(k + 1);
        if (len > materialize_limit()) {
            throw CapacityError("d block " + std::to_string(k) + " has " + len.str() +
                                " positions, above the materialization limit");
        }
        std::unique_lock lock(mutex_);
        while (entries_.size() <= idx) {
            const int next = static_cast<int>(entries_.size()) + 3;
            entries_.push_back(build_entry(next, entries_));
        }
        return *entries_[idx];
    }

private:
    std::deque<std::unique_ptr<CubeEntry>> entries_;
    std::shared_mutex mutex_;
};

CubeMemo& memo() {
    static CubeMemo m;
    return m;
}

Integer direct_sum_d(const Integer& lo, const Integer& hi) {
    Integer s = 0;
    for (Integer i = lo; i <= hi; ++i) s += d_at(i);
    return s;
}

}  // namespace

const CountVector& d_block(int k) { return memo().get(k).block; }

std::uint32_t d_at(const Integer& n) {
    require(n >= 1, "position must be >= 1, got " + n.str());
    if (n <= 11) return 0;
    return d_block(fib_index_floor(n + 1) - 2).at(n);
}

Integer d_block_sum(int m) {
    require(m >= 3, "d block sum needs m >= 3, got " + std::to_string(m));
    return exact_div5((m - 5) * fib(m) + (m + 2) * fib(m - 2), "sum d(Gamma_m)") + 1;
}

Integer d_closed_form(int m) {
    require(m >= 6, "D(f_m-2) needs m >= 6, got " + std::to_string(m));
    return exact_div5((m - 11) * fib(m - 1) + (m + 1) * fib(m - 3), "D(f_m-2)") + m + 1;
}

namespace {

Integer suffix_sum_d(int m, Integer n) {
    Integer acc = 0;
    while (m >= 7) {
        const Integer n1 = n + 1;
        const Integer shift = fib(m - 1);
        if (n1 <= fib(m) + fib(m - 5)) {
            m -= 2;
        } else if (n1 <= fib(m) + fib(m - 3) - 1) {
            // The recursive sum starts at f_{m-2}+1; the two skipped terms
            // d(f_{m-2}-1) and d(f_{m-2}) are zero for m-2 >= 5.
            acc += n - fib(m) - fib(m - 5) + 1;
            m -= 2;
        } else {
            acc += exact_div5((m - 4) * fib(m - 4) + (m - 2) * fib(m - 6), "d suffix");
            m -= 1;
        }
        n -= shift;
    }
    return acc + direct_sum_d(fib(m) - 1, n);
}

}  // namespace

Integer sum_d_suffix(int m, const Integer& n) {
    require(m >= 5 && fib(m) <= n + 1 && n + 1 < fib(m + 1),
            "d suffix needs m >= 5 and f_m <= n+1 < f_{m+1}");
    return suffix_sum_d(m, n);
}

Integer count_cube_occurrences(const Integer& n) {
    require(n >= 1, "position must be >= 1, got " + n.str());
    if (n <= 11) return 0;
    const int m = fib_index_floor(n + 1);
    if (m < 6) return direct_sum_d(12, n);
    return d_closed_form(m) + suffix_sum_d(m, n);
}

Integer count_cube_occurrences_by_blocks(const Integer& n) {
    require(n >= 1, "position must be >= 1, got " + n.str());
    if (n <= 11) return 0;
    const int k = fib_index_floor(n + 1) - 2;
    Integer total = 0;
    for (int j = 3; j < k; ++j) total += memo().get(j).total;
    const auto& entry = memo().get(k);
    return total + entry.cumulative[to_size(n - entry.block.range.lo)];
}

}  // namespace fibsq
