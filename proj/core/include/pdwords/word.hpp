#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pdwords/errors.hpp"

namespace pdwords {

// The working alphabet. Words over the period-doubling sequence use only
// {a,b}; the letter c appears in Theta2-coded words.
enum class Letter : char { a = 'a', b = 'b', c = 'c' };

constexpr char to_char(Letter l) noexcept { return static_cast<char>(l); }
Letter letter_from_char(char c);
Letter complement(Letter l);

// A finite word over {a,b,c}. Immutable value type; positions are 1-indexed
// throughout the public interface, matching the slicing convention
// w[i,j] = x_i...x_j with w[i,i-1] the empty word.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters);
    explicit Word(Letter l) : letters_(1, to_char(l)) {}

    static Word parse(std::string_view text) { return Word(std::string(text)); }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    // Letter at 1-indexed position i.
    Letter at(std::size_t i) const;

    // Inclusive 1-indexed slice w[i,j]; j = i-1 yields the empty word.
    Word slice(std::size_t i, std::size_t j) const;

    const std::string& str() const noexcept { return letters_; }
    std::string_view view() const noexcept { return letters_; }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

    Word& operator+=(const Word& rhs);
    friend Word operator+(Word lhs, const Word& rhs) {
        lhs += rhs;
        return lhs;
    }

private:
    struct adopt_tag {};
    Word(std::string letters, adopt_tag) : letters_(std::move(letters)) {}
    friend Word adopt_validated(std::string letters);

    std::string letters_;
};

namespace detail {
// Wraps a string that is already known to contain only {a,b,c}; used by the
// sequence generators to avoid a second validation pass over large buffers.
Word adopt(std::string letters);
}  // namespace detail

Word concat(const Word& u, const Word& v);
Word mirror(const Word& w);
bool is_palindrome(const Word& w) noexcept;

// Letterwise swap a <-> b; rejects words containing c.
Word complement(const Word& w);

// w with its last letter removed; rejects the empty word.
Word strip_last(const Word& w);

bool is_prefix(const Word& p, const Word& w) noexcept;
bool is_suffix(const Word& s, const Word& w) noexcept;

// The u with w = p u; rejects p that is not a prefix of w.
Word strip_prefix(const Word& p, const Word& w);

// True when pattern occurs somewhere in text (pattern nonempty).
bool occurs_in(const Word& pattern, const Word& text);

// Every 1-indexed start position of pattern in text, overlaps included.
// Plain letterwise scan; this is the reference implementation the rest of
// the library is verified against.
std::vector<std::size_t> find_occurrences(const Word& pattern, const Word& text);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace pdwords
