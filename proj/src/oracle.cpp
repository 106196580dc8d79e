#include "fibsq/oracle.hpp"

#include "fibsq/errors.hpp"

#include <atomic>
#include <string>
#include <string_view>

namespace fibsq::oracle {

namespace {

std::atomic<std::size_t> g_limit{10'000};

std::shared_ptr<const std::string> letters_for(std::size_t n) {
    if (n > oracle_limit()) {
        throw CapacityError("oracle scan of " + std::to_string(n) +
                            " letters exceeds the oracle limit of " +
                            std::to_string(oracle_limit()));
    }
    return fibonacci_letters(n);
}

// s[end-power*L, end) is power copies of its first L letters (0-based end).
bool is_power_ending_at(std::string_view s, std::size_t end, std::size_t len, int power) {
    const std::size_t span = static_cast<std::size_t>(power) * len;
    if (span > end) return false;
    for (std::size_t i = end - span; i + len < end; ++i) {
        if (s[i] != s[i + len]) return false;
    }
    return true;
}

void check_power(int power) {
    if (power < 2) throw DomainError("power must be >= 2, got " + std::to_string(power));
}

}  // namespace

std::size_t oracle_limit() { return g_limit.load(); }
void set_oracle_limit(std::size_t limit) { g_limit.store(limit); }

std::vector<std::size_t> power_roots_ending_at(std::size_t end, int power) {
    check_power(power);
    auto text = letters_for(end);
    std::vector<std::size_t> out;
    for (std::size_t len = 1; len * static_cast<std::size_t>(power) <= end; ++len) {
        if (is_power_ending_at(*text, end, len, power)) out.push_back(len);
    }
    return out;
}

std::vector<OccurrenceRecord> enumerate_powers(std::size_t n, int power) {
    check_power(power);
    auto text = letters_for(n);
    std::vector<OccurrenceRecord> out;
    for (std::size_t end = 1; end <= n; ++end) {
        for (std::size_t len = 1; len * static_cast<std::size_t>(power) <= end; ++len) {
            if (is_power_ending_at(*text, end, len, power)) out.push_back({end, len, power});
        }
    }
    return out;
}

std::set<Word> distinct_powers(std::size_t n, int power) {
    auto text = letters_for(n);
    std::set<Word> roots;
    for (const auto& r : enumerate_powers(n, power)) {
        roots.insert(Word(std::string_view(*text).substr(r.end - r.root_length, r.root_length)));
    }
    return roots;
}

bool is_factor(const Word& w) {
    if (w.empty()) return true;
    std::size_t window = 4 * w.length() + 64;
    while (true) {
        const std::size_t scan = std::min(window, oracle_limit());
        auto text = letters_for(scan);
        if (std::string_view(*text).substr(0, scan).find(w.letters()) != std::string_view::npos) {
            return true;
        }
        if (scan == oracle_limit()) return false;
        window *= 4;
    }
}

SingularWord kernel(const Word& w) {
    if (!is_factor(w)) {
        throw DomainError("'" + w.str() + "' is not a factor of the Fibonacci word");
    }
    int m = fib_index_floor(std::max<std::size_t>(w.length(), 1));
    for (; m >= -1; --m) {
        auto k = singular_word(m);
        if (k.content.length() > w.length()) continue;
        const auto hits = w.count(k.content);
        if (hits == 0) continue;
        if (hits != 1) {
            throw InvariantError("kernel K_" + std::to_string(m) + " occurs " +
                                 std::to_string(hits) + " times in '" + w.str() + "'");
        }
        return k;
    }
    throw InvariantError("no singular word inside '" + w.str() + "'");
}

std::vector<std::size_t> occurrence_starts(const Word& w, std::size_t count) {
    if (w.empty()) throw DomainError("occurrences of the empty word are not defined");
    std::vector<std::size_t> starts;
    std::size_t scan = std::min<std::size_t>((count + 2) * (4 * w.length() + 8), oracle_limit());
    while (true) {
        auto text = letters_for(scan);
        const std::string_view view = std::string_view(*text).substr(0, scan);
        starts.clear();
        for (auto pos = view.find(w.letters());
             pos != std::string_view::npos && starts.size() < count;
             pos = view.find(w.letters(), pos + 1)) {
            starts.push_back(pos + 1);
        }
        if (starts.size() == count) return starts;
        if (scan == oracle_limit()) {
            throw CapacityError("fewer than " + std::to_string(count) + " occurrences of '" +
                                w.str() + "' within the oracle limit");
        }
        scan = std::min(scan * 2, oracle_limit());
    }
}

ReturnWordDecomposition return_words(const Word& w, std::size_t count) {
    if (count == 0) throw DomainError("return word count must be >= 1");
    auto starts = occurrence_starts(w, count + 1);
    auto text = letters_for(starts.back());
    ReturnWordDecomposition out{w, {}, starts};
    for (std::size_t p = 0; p < count; ++p) {
        out.returns.emplace_back(std::string_view(*text).substr(starts[p] - 1, starts[p + 1] - starts[p]));
    }
    return out;
}

bool verify_return_structure(const Word& w, std::size_t count) {
    const auto dec = return_words(w, count);
    std::vector<Word> seen;
    std::string coded;
    for (const auto& r : dec.returns) {
        std::size_t idx = 0;
        while (idx < seen.size() && seen[idx] != r) ++idx;
        if (idx == seen.size()) seen.push_back(r);
        if (idx > 1) return false;
        coded.push_back(idx == 0 ? 'a' : 'b');
    }
    return coded == prefix(count).str();
}

PrefixCounts brute_force_counts(std::size_t max_n) {
    auto text = letters_for(max_n);
    const std::string_view s = std::string_view(*text).substr(0, max_n);
    PrefixCounts out;
    for (auto* v : {&out.a, &out.b, &out.c, &out.d}) v->assign(max_n + 1, 0);
    for (auto* v : {&out.A, &out.B, &out.C, &out.D}) v->assign(max_n + 1, 0);
    std::set<std::string_view> squares, cubes;
    for (std::size_t end = 1; end <= max_n; ++end) {
        for (std::size_t len = 1; 2 * len <= end; ++len) {
            if (is_power_ending_at(s, end, len, 2)) {
                ++out.b[end];
                if (squares.insert(s.substr(end - len, len)).second) ++out.a[end];
            }
            if (3 * len <= end && is_power_ending_at(s, end, len, 3)) {
                ++out.d[end];
                if (cubes.insert(s.substr(end - len, len)).second) ++out.c[end];
            }
        }
        out.A[end] = out.A[end - 1] + out.a[end];
        out.B[end] = out.B[end - 1] + out.b[end];
        out.C[end] = out.C[end - 1] + out.c[end];
        out.D[end] = out.D[end - 1] + out.d[end];
    }
    return out;
}

}  // namespace fibsq::oracle
