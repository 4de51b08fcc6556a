#include "pdwords/word.hpp"

#include <algorithm>
#include <ostream>

namespace pdwords {

Letter letter_from_char(char c) {
    switch (c) {
        case 'a': return Letter::a;
        case 'b': return Letter::b;
        case 'c': return Letter::c;
        default:
            throw InvalidInputError(std::string("invalid letter '") + c +
                                    "': expected one of {a,b,c}");
    }
}

Letter complement(Letter l) {
    switch (l) {
        case Letter::a: return Letter::b;
        case Letter::b: return Letter::a;
        default:
            throw InvalidInputError("complement is defined on {a,b} only");
    }
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_) {
        if (c != 'a' && c != 'b' && c != 'c') {
            throw InvalidInputError(std::string("invalid letter '") + c +
                                    "' in word: expected letters from {a,b,c}");
        }
    }
}

Word adopt_validated(std::string letters) {
    return Word(std::move(letters), Word::adopt_tag{});
}

namespace detail {
Word adopt(std::string letters) { return adopt_validated(std::move(letters)); }
}  // namespace detail

Letter Word::at(std::size_t i) const {
    if (i < 1 || i > letters_.size()) {
        throw InvalidInputError("word position " + std::to_string(i) +
                                " out of range [1," + std::to_string(letters_.size()) + "]");
    }
    return static_cast<Letter>(letters_[i - 1]);
}

Word Word::slice(std::size_t i, std::size_t j) const {
    if (i < 1 || i > letters_.size() + 1 || j + 1 < i || j > letters_.size()) {
        throw InvalidInputError("invalid slice [" + std::to_string(i) + "," +
                                std::to_string(j) + "] of a word of length " +
                                std::to_string(letters_.size()));
    }
    return Word(letters_.substr(i - 1, j - i + 1), adopt_tag{});
}

Word& Word::operator+=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
}

Word concat(const Word& u, const Word& v) { return u + v; }

Word mirror(const Word& w) {
    std::string r(w.str().rbegin(), w.str().rend());
    return detail::adopt(std::move(r));
}

bool is_palindrome(const Word& w) noexcept {
    const std::string& s = w.str();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2),
                      s.rbegin());
}

Word complement(const Word& w) {
    std::string r;
    r.reserve(w.size());
    for (char c : w.str()) {
        if (c == 'c') {
            throw InvalidInputError("complement is defined on words over {a,b} only");
        }
        r.push_back(c == 'a' ? 'b' : 'a');
    }
    return detail::adopt(std::move(r));
}

Word strip_last(const Word& w) {
    if (w.empty()) {
        throw InvalidInputError("strip_last requires a nonempty word");
    }
    return detail::adopt(std::string(w.str(), 0, w.size() - 1));
}

bool is_prefix(const Word& p, const Word& w) noexcept {
    return p.size() <= w.size() && w.view().substr(0, p.size()) == p.view();
}

bool is_suffix(const Word& s, const Word& w) noexcept {
    return s.size() <= w.size() && w.view().substr(w.size() - s.size()) == s.view();
}

Word strip_prefix(const Word& p, const Word& w) {
    if (!is_prefix(p, w)) {
        throw InvalidInputError("\"" + p.str() + "\" is not a prefix of \"" + w.str() + "\"");
    }
    return detail::adopt(std::string(w.str(), p.size()));
}

bool occurs_in(const Word& pattern, const Word& text) {
    if (pattern.empty()) {
        throw InvalidInputError("occurrence queries require a nonempty pattern");
    }
    return text.view().find(pattern.view()) != std::string_view::npos;
}

std::vector<std::size_t> find_occurrences(const Word& pattern, const Word& text) {
    if (pattern.empty()) {
        throw InvalidInputError("occurrence queries require a nonempty pattern");
    }
    std::vector<std::size_t> positions;
    if (pattern.size() > text.size()) return positions;
    const std::string& p = pattern.str();
    const std::string& t = text.str();
    for (std::size_t i = 0; i + p.size() <= t.size(); ++i) {
        std::size_t k = 0;
        while (k < p.size() && t[i + k] == p[k]) ++k;
        if (k == p.size()) positions.push_back(i + 1);
    }
    return positions;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace pdwords
