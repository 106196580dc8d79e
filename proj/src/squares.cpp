#include "fibsq/squares.hpp"

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

namespace {

void check_family_args(int case_id, int m, const Integer& p) {
    require(case_id == 1 || case_id == 2,
            "square case must be 1 or 2, got " + std::to_string(case_id));
    require(m >= 1, "square kernel order must be >= 1, got " + std::to_string(m));
    require(p >= 1, "occurrence index must be >= 1, got " + p.str());
}

// p f_{m+1} + floor(phi p) f_m
Integer family_base(int m, const Integer& p) {
    return p * fib(m + 1) + phi_floor(p) * fib(m);
}

}  // namespace

SquareFamily square_family(int case_id, int m, const Integer& p) {
    check_family_args(case_id, m, p);
    const Integer base = family_base(m, p);
    if (case_id == 1) {
        return SquareFamily{1, m, p,
                            PositionRange::make(base + fib(m + 1), base + fib(m + 2) - 2),
                            fib(m + 1)};
    }
    return SquareFamily{2, m, p,
                        PositionRange::make(base + fib(m) - 1, base + 2 * fib(m - 1) - 1),
                        fib(m - 1)};
}

GammaBlock gamma_block(int case_id, int m, const Integer& p) {
    check_family_args(case_id, m, p);
    const Integer base = family_base(m, p);
    if (case_id == 1) {
        return GammaBlock{1, m, p,
                          PositionRange::make(base + fib(m + 1) - 1, base + fib(m + 2) - 2)};
    }
    return GammaBlock{2, m, p,
                      PositionRange::make(base + fib(m) - 1, base + fib(m + 1) - 2)};
}

int a_indicator(const Integer& n) {
    require(n >= 1, "position must be >= 1, got " + n.str());
    if (n < 4) return 0;
    if (n == 4) return 1;
    // Windows {2f_{m+1}, ..., f_{m+2} + 2f_m - 1}, m >= 1, are disjoint and
    // increasing; only the last one starting at or before n can hold it.
    const int m = fib_index_floor(n / 2) - 1;
    if (m < 1) return 0;
    return n <= fib(m + 2) + 2 * fib(m) - 1 ? 1 : 0;
}

Integer count_distinct_squares(const Integer& n) {
    require(n >= 1, "position must be >= 1, got " + n.str());
    if (n < 4) return 0;
    const int m = fib_index_floor(n / 2);  // 2f_m <= n < 2f_{m+1}
    if (n <= fib(m + 1) + 2 * fib(m - 1) - 1) return n - fib(m - 1) - 2;
    return fib(m + 1) + fib(m - 1) - 3;
}

std::vector<SquareFamily> square_children(const SquareFamily& node) {
    std::vector<SquareFamily> out;
    if (node.case_id == 1 && node.m >= 2) {
        const Integer q = pos_letter(Letter::a, node.p) + 1;
        out.push_back(square_family(2, node.m - 1, q));
        out.push_back(square_family(1, node.m - 1, q));
    } else if (node.case_id == 2 && node.m >= 3) {
        const Integer q = pos_letter(Letter::b, node.p) + 1;
        out.push_back(square_family(2, node.m - 2, q));
        out.push_back(square_family(1, node.m - 2, q));
    }
    return out;
}

namespace {

SquareTreeNode expand(SquareFamily family) {
    SquareTreeNode node{std::move(family), {}};
    for (auto& child : square_children(node.family)) {
        node.children.push_back(expand(std::move(child)));
    }
    return node;
}

void dump(std::ostream& os, const SquareTreeNode& node, int depth) {
    const auto& f = node.family;
    os << std::string(2 * static_cast<std::size_t>(depth), ' ') << '<' << f.case_id
       << ",K_" << f.m << ',' << f.p << "> " << f.range << '\n';
    for (const auto& c : node.children) dump(os, c, depth + 1);
}

}  // namespace

SquareTreeNode square_tree(int root_case, int m) {
    return expand(square_family(root_case, m, 1));
}

void dump_tree(std::ostream& os, const SquareTreeNode& root) { dump(os, root, 0); }

// --- b blocks ------------------------------------------------------------------

namespace {

struct SquareEntry {
    SquareBlocks blocks;
    std::uint64_t total = 0;
    // cumulative[i] = sum of the first i+1 counts of [gamma2, gamma1]
    std::vector<std::uint64_t> cumulative;
};

CountVector make_vector(const Integer& lo, const Integer& hi, std::vector<std::uint32_t> v) {
    auto range = PositionRange::make(lo, hi);
    if (range.cardinality() != v.size()) {
        throw InvariantError("b block over " + lo.str() + ".." + hi.str() +
                             " has " + std::to_string(v.size()) + " entries");
    }
    return CountVector{std::move(range), std::move(v)};
}

std::vector<std::uint32_t> concat(const SquareBlocks& s) {
    std::vector<std::uint32_t> v = s.gamma2.counts;
    v.insert(v.end(), s.gamma1.counts.begin(), s.gamma1.counts.end());
    return v;
}

std::unique_ptr<SquareEntry> build_entry(int m, const std::deque<std::unique_ptr<SquareEntry>>& done) {
    // done[j] holds the entry for m = j + 1
    const Integer g2_lo = fib(m + 2) - 1;
    const Integer g1_lo = 2 * fib(m + 1) - 1;
    const Integer g1_hi = fib(m + 3) - 2;
    std::vector<std::uint32_t> g2, g1;
    if (m == 1) {
        g2 = {1};
        g1 = {0, 1};
    } else if (m == 2) {
        g2 = {1, 1};
        g1 = {1, 1, 2};
    } else {
        // Gamma_{1,m,1} = [Gamma_{2,m-1,1}, Gamma_{1,m-1,1}] + [0, 1 x (f_m - 1)]
        g1 = concat(done[static_cast<std::size_t>(m - 2)]->blocks);
        for (std::size_t i = 1; i < g1.size(); ++i) g1[i] += 1;
        // Gamma_{2,m,1} = [Gamma_{2,m-2,1}, Gamma_{1,m-2,1}]
        //                 + [1 x (f_{m-3} + 1), 0 x (f_{m-2} - 1)]
        g2 = concat(done[static_cast<std::size_t>(m - 3)]->blocks);
        const auto ones = to_size(fib(m - 3) + 1);
        for (std::size_t i = 0; i < ones && i < g2.size(); ++i) g2[i] += 1;
    }
    auto entry = std::make_unique<SquareEntry>();
    entry->blocks.gamma2 = make_vector(g2_lo, g1_lo - 1, std::move(g2));
    entry->blocks.gamma1 = make_vector(g1_lo, g1_hi, std::move(g1));
    entry->cumulative.reserve(entry->blocks.gamma2.counts.size() +
                              entry->blocks.gamma1.counts.size());
    std::uint64_t run = 0;
    for (auto c : entry->blocks.gamma2.counts) entry->cumulative.push_back(run += c);
    for (auto c : entry->blocks.gamma1.counts) entry->cumulative.push_back(run += c);
    entry->total = run;
    return entry;
}

class SquareMemo {
public:
    const SquareEntry& get(int m) {
        require(m >= 1, "b block index must be >= 1, got " + std::to_string(m));
        const auto idx = static_cast<std::size_t>(m - 1);
        {
            std::shared_lock lock(mutex_);
            if (idx < entries_.size()) return *entries_[idx];
        }
        const Integer len = fib(m + 1);
        if (len > materialize_limit()) {
            throw CapacityError("b block " + std::to_string(m) + " has " + len.str() +
                                " positions, above the materialization limit");
        }
        std::unique_lock lock(mutex_);
        while (entries_.size() <= idx) {
            const int next = static_cast<int>(entries_.size()) + 1;
            entries_.push_back(build_entry(next, entries_));
        }
        return *entries_[idx];
    }

private:
    std::deque<std::unique_ptr<SquareEntry>> entries_;
    std::shared_mutex mutex_;
};

SquareMemo& memo() {
    static SquareMemo m;
    return m;
}

// Block index m with f_{m+2} - 1 <= n <= f_{m+3} - 2, for n >= 4.
int block_of(const Integer& n) { return fib_index_floor(n + 1) - 2; }

Integer direct_sum_b(const Integer& lo, const Integer& hi) {
    Integer s = 0;
    for (Integer i = lo; i <= hi; ++i) s += b_at(i);
    return s;
}

}  // namespace

const SquareBlocks& b_block(int m) { return memo().get(m).blocks; }

std::uint32_t b_at(const Integer& n) {
    require(n >= 1, "position must be >= 1, got " + n.str());
    if (n <= 3) return 0;
    const auto& blocks = b_block(block_of(n));
    return blocks.gamma2.range.contains(n) ? blocks.gamma2.at(n) : blocks.gamma1.at(n);
}

std::pair<Integer, Integer> block_sums(int m) {
    require(m >= 1, "block index must be >= 1, got " + std::to_string(m));
    const Integer g1 = exact_div5((2 * m + 5) * fib(m) + (2 * m - 6) * fib(m - 2),
                                  "sum b(Gamma_1)") - 1;
    const Integer g2 = exact_div5((2 * m - 2) * fib(m - 1) + (2 * m - 3) * fib(m - 3),
                                  "sum b(Gamma_2)") + 1;
    return {g1, g2};
}

Integer b_closed_form_fib(int m) {
    require(m >= -1, "B(f_{m+3}-2) needs m >= -1, got " + std::to_string(m));
    return exact_div5((2 * m - 4) * fib(m + 3) + 2 * m * fib(m + 1), "B(f_{m+3}-2)") + 4;
}

Integer b_closed_form_twofib(int m) {
    require(m >= 0, "B(2f_{m+1}-2) needs m >= 0, got " + std::to_string(m));
    return exact_div5((4 * m - 11) * fib(m + 1) + (4 * m - 3) * fib(m - 1), "B(2f_{m+1}-2)") + 5;
}

std::pair<Integer, Integer> b_closed_forms(int m) {
    return {b_closed_form_fib(m), b_closed_form_twofib(m)};
}

std::pair<Integer, Integer> b_boundary(int m) {
    require(m >= 2, "b boundary needs m >= 2, got " + std::to_string(m));
    return {Integer((m - 1) / 2), Integer((m - 2) / 2)};
}

Integer count_square_occurrences_at_fib(int m) {
    require(m >= 2, "B(f_m) needs m >= 2, got " + std::to_string(m));
    return exact_div5((4 * m - 16) * fib(m) - (2 * m - 6) * fib(m - 1), "B(f_m)") + m + 2;
}

namespace {

// Unchecked suffix sum. Each step peels f_{m-1} off n and lands in the fib or
// twofib window one or two levels down; below m = 5 the remaining range is
// a handful of positions and is summed directly.
Integer suffix_sum_b(SuffixAnchor anchor, int m, Integer n) {
    Integer acc = 0;
    while (m >= 5) {
        const Integer n1 = n + 1;
        if (anchor == SuffixAnchor::fib) {
            if (n1 <= fib(m) + fib(m - 5) - 1) {
                acc += n - fib(m) + 2;
                anchor = SuffixAnchor::fib;
            } else {
                acc += exact_div5((2 * m - 5) * fib(m - 5) + (2 * m - 11) * fib(m - 7),
                                  "fib-anchored suffix") + 2;
                anchor = SuffixAnchor::twofib;
            }
            n -= fib(m - 1);
            m -= 2;
        } else {
            if (n1 <= fib(m) + fib(m - 2) - 1) {
                acc += n - 2 * fib(m - 1) + 1;
                anchor = SuffixAnchor::fib;
            } else {
                acc += n - 2 * fib(m - 1) +
                       exact_div5((2 * m - 8) * fib(m - 4) + (2 * m - 9) * fib(m - 6),
                                  "twofib-anchored suffix") + 2;
                anchor = SuffixAnchor::twofib;
            }
            n -= fib(m - 1);
            m -= 1;
        }
    }
    const Integer start = anchor == SuffixAnchor::fib ? fib(m) - 1 : 2 * fib(m - 1) - 1;
    return acc + direct_sum_b(start, n);
}

}  // namespace

Integer sum_b_suffix(SuffixAnchor anchor, int m, const Integer& n) {
    const Integer n1 = n + 1;
    if (anchor == SuffixAnchor::fib) {
        require(m >= 3 && fib(m) <= n1 && n1 <= 2 * fib(m - 1) - 1,
                "fib-anchored suffix needs m >= 3 and f_m <= n+1 <= 2f_{m-1}-1");
    } else {
        require(m >= 4 && 2 * fib(m - 1) <= n1 && n1 <= fib(m + 1) - 1,
                "twofib-anchored suffix needs m >= 4 and 2f_{m-1} <= n+1 <= f_{m+1}-1");
    }
    return suffix_sum_b(anchor, m, n);
}

Integer count_square_occurrences(const Integer& n) {
    require(n >= 1, "position must be >= 1, got " + n.str());
    if (n <= 3) return 0;
    const int m = fib_index_floor(n + 1);  // f_m <= n+1 < f_{m+1}, m >= 3
    if (n < 2 * fib(m - 1) - 1) {
        return b_closed_form_fib(m - 3) + suffix_sum_b(SuffixAnchor::fib, m, n);
    }
    return b_closed_form_twofib(m - 2) + suffix_sum_b(SuffixAnchor::twofib, m, n);
}

Integer count_square_occurrences_by_blocks(const Integer& n) {
    require(n >= 1, "position must be >= 1, got " + n.str());
    if (n <= 3) return 0;
    const int m = block_of(n);
    Integer total = 0;
    for (int j = 1; j < m; ++j) total += memo().get(j).total;
    const auto& entry = memo().get(m);
    return total + entry.cumulative[to_size(n - entry.blocks.gamma2.range.lo)];
}

}  // namespace fibsq
