#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace fibsq {

enum class Letter : char { a = 'a', b = 'b' };

inline char to_char(Letter x) { return static_cast<char>(x); }

/// Finite word over {a, b}. Positions are 1-based, matching tau[i, j].
class Word {
public:
    Word() = default;
    /// Throws DomainError if `letters` contains anything other than 'a'/'b'.
    explicit Word(std::string_view letters);

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::string_view letters() const { return letters_; }
    const std::string& str() const { return letters_; }

    /// tau[i]; 1 <= i <= length().
    Letter at(std::size_t i) const;
    /// tau[i, j], inclusive; tau[i, i-1] is the empty word.
    Word factor(std::size_t i, std::size_t j) const;
    Letter last() const;

    bool is_palindrome() const;
    /// True iff `w` occurs as a factor of this word.
    bool contains(const Word& w) const;
    /// Number of (possibly overlapping) occurrences of `w`.
    std::size_t count(const Word& w) const;

    friend Word operator+(const Word& x, const Word& y);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    struct Unchecked {};
    Word(std::string letters, Unchecked) : letters_(std::move(letters)) {}

    std::string letters_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << (w.empty() ? std::string_view("ε") : w.letters());
}

}  // namespace fibsq
