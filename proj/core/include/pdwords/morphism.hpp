#pragma once

#include <array>
#include <optional>

#include "pdwords/word.hpp"

namespace pdwords {

// A non-erasing letter-to-word substitution, extended to words by
// concatenation of images.
class Morphism {
public:
    Morphism(Word image_a, Word image_b);
    Morphism(Word image_a, Word image_b, Word image_c);

    bool has_image(Letter l) const noexcept;
    const Word& image(Letter l) const;

    Word operator()(const Word& w) const;

    // sigma(a,b) = (ab,aa): the period-doubling substitution.
    static const Morphism& sigma();
    // tau1(a,b) = (a,bb): the coding behind Theta1.
    static const Morphism& tau1();
    // tau2(a,b) = (ab,acac): the coding behind Theta2.
    static const Morphism& tau2();

private:
    static std::size_t index(Letter l) noexcept {
        return static_cast<std::size_t>(to_char(l) - 'a');
    }

    std::array<std::optional<Word>, 3> images_;
};

inline Word apply_morphism(const Morphism& m, const Word& w) { return m(w); }

}  // namespace pdwords
