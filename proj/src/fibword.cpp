#include "fibsq/fibword.hpp"

#include "fibsq/errors.hpp"

#include <cstdlib>
#include <mutex>

namespace fibsq {

FibTable::FibTable() : values_{Integer(0), Integer(1)} {}

const Integer& FibTable::at(int m) {
    if (m < -2) throw DomainError("fib index must be >= -2, got " + std::to_string(m));
    const auto idx = static_cast<std::size_t>(m + 2);
    {
        std::shared_lock lock(mutex_);
        if (idx < values_.size()) return values_[idx];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= idx) {
        const auto n = values_.size();
        values_.push_back(values_[n - 1] + values_[n - 2]);
    }
    return values_[idx];
}

int FibTable::index_floor(const Integer& x) {
    if (x < 1) throw DomainError("fib_index_floor needs x >= 1, got " + x.str());
    // Exponential then binary search; f grows like 1.618^m.
    int hi = 1;
    while (at(hi) <= x) hi *= 2;
    int lo = -1;  // f_{-1} = 1 <= x
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (at(mid) <= x) lo = mid; else hi = mid;
    }
    return lo;
}

namespace {

FibTable& table() {
    static FibTable t;
    return t;
}

struct LetterCache {
    std::mutex mutex;
    std::shared_ptr<const std::string> word = std::make_shared<const std::string>("a");
    std::size_t limit = 0;
    bool limit_set = false;
};

LetterCache& cache() {
    static LetterCache c;
    return c;
}

std::size_t limit_from_env() {
    constexpr std::size_t kDefault = 10'000'000;
    const char* env = std::getenv("FIBSQ_MATERIALIZE_LIMIT");
    if (env == nullptr || *env == '\0') return kDefault;
    try {
        return to_size(parse_integer(env));
    } catch (const std::exception&) {
        return kDefault;
    }
}

}  // namespace

const Integer& fib(int m) { return table().at(m); }

int fib_index_floor(const Integer& x) { return table().index_floor(x); }

std::size_t materialize_limit() {
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    if (!c.limit_set) {
        c.limit = limit_from_env();
        c.limit_set = true;
    }
    return c.limit;
}

void set_materialize_limit(std::size_t limit) {
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    c.limit = limit;
    c.limit_set = true;
}

std::shared_ptr<const std::string> fibonacci_letters(std::size_t n) {
    const auto limit = materialize_limit();
    if (n > limit) {
        throw CapacityError("materializing " + std::to_string(n) +
                            " letters exceeds the limit of " + std::to_string(limit));
    }
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    if (c.word->size() >= n) return c.word;
    // F_{m+1} = F_m F_{m-1}
    std::string prev = "a";
    std::string cur = "ab";
    while (cur.size() < n) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (cur.size() > limit) cur.resize(limit);
    c.word = std::make_shared<const std::string>(std::move(cur));
    return c.word;
}

Word prefix(const Integer& n) {
    if (n < 0) throw DomainError("prefix length must be >= 0");
    const auto len = to_size(n);
    auto letters = fibonacci_letters(len);
    return Word(std::string_view(*letters).substr(0, len));
}

Letter letter_at(const Integer& n) {
    if (n < 1) throw DomainError("positions are 1-based; got " + n.str());
    const auto i = to_size(n);
    auto letters = fibonacci_letters(i);
    return static_cast<Letter>((*letters)[i - 1]);
}

Word fib_word(int m) {
    if (m < -2) throw DomainError("F_m needs m >= -2, got " + std::to_string(m));
    if (m == -2) return Word();
    if (m == -1) return Word("b");
    return prefix(fib(m));
}

Integer phi_floor(const Integer& p) {
    if (p < 1) throw DomainError("phi_floor needs p >= 1, got " + p.str());
    // sqrt(5 p^2) is irrational, so floor(p (sqrt5 - 1) / 2)
    // = floor((floor(sqrt(5 p^2)) - p) / 2).
    return (isqrt(5 * p * p) - p) / 2;
}

Integer pos_letter(Letter x, const Integer& p) {
    if (p < 1) throw DomainError("occurrence index must be >= 1, got " + p.str());
    const Integer k = phi_floor(p);
    return x == Letter::a ? Integer(p + k) : Integer(2 * p + k);
}

Letter delta(int m) {
    if (m < -1) throw DomainError("delta_m needs m >= -1, got " + std::to_string(m));
    return (m % 2 == 0) ? Letter::a : Letter::b;
}

SingularWord singular_word(int m) {
    if (m < -1) throw DomainError("K_m needs m >= -1, got " + std::to_string(m));
    const Word f = fib_word(m);
    const Word head(std::string(1, to_char(delta(m + 1))));
    return SingularWord{m, head + f.factor(1, f.length() - 1), delta(m)};
}

Integer pos_kernel(int m, const Integer& p) {
    if (m < -1) throw DomainError("K_m needs m >= -1, got " + std::to_string(m));
    if (p < 1) throw DomainError("occurrence index must be >= 1, got " + p.str());
    return p * fib(m + 1) + (phi_floor(p) + 1) * fib(m) - 1;
}

bool fib_product_identity_check(int m, int k) {
    if (m < -1 || k < -1) {
        throw DomainError("identity is stated for m, k >= -1");
    }
    return fib(m) * fib(k) + fib(m - 1) * fib(k - 1) == fib(m + k + 1);
}

}  // namespace fibsq
