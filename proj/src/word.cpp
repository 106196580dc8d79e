#include "fibsq/word.hpp"

#include "fibsq/errors.hpp"

#include <algorithm>

namespace fibsq {

Word::Word(std::string_view letters) : letters_(letters) {
    auto bad = std::find_if(letters_.begin(), letters_.end(),
                            [](char c) { return c != 'a' && c != 'b'; });
    if (bad != letters_.end()) {
        throw DomainError("word contains a letter outside {a,b}: '" +
                          std::string(1, *bad) + "'");
    }
}

Letter Word::at(std::size_t i) const {
    if (i == 0 || i > letters_.size()) {
        throw DomainError("position " + std::to_string(i) +
                          " outside word of length " +
                          std::to_string(letters_.size()));
    }
    return static_cast<Letter>(letters_[i - 1]);
}

Word Word::factor(std::size_t i, std::size_t j) const {
    if (i == 0 || j + 1 < i || j > letters_.size()) {
        throw DomainError("factor [" + std::to_string(i) + "," +
                          std::to_string(j) + "] outside word of length " +
                          std::to_string(letters_.size()));
    }
    return Word(letters_.substr(i - 1, j + 1 - i), Unchecked{});
}

Letter Word::last() const {
    if (letters_.empty()) throw DomainError("empty word has no last letter");
    return static_cast<Letter>(letters_.back());
}

bool Word::is_palindrome() const {
    return std::equal(letters_.begin(), letters_.begin() + letters_.size() / 2,
                      letters_.rbegin());
}

bool Word::contains(const Word& w) const {
    return letters_.find(w.letters_) != std::string::npos;
}

std::size_t Word::count(const Word& w) const {
    if (w.empty()) return letters_.size() + 1;
    std::size_t n = 0;
    for (auto pos = letters_.find(w.letters_); pos != std::string::npos;
         pos = letters_.find(w.letters_, pos + 1)) {
        ++n;
    }
    return n;
}

Word operator+(const Word& x, const Word& y) {
    return Word(x.letters_ + y.letters_, Word::Unchecked{});
}

}  // namespace fibsq
