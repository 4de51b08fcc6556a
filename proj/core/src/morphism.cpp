#include "pdwords/morphism.hpp"

namespace pdwords {

namespace {
void require_nonempty(const Word& image, char domain_letter) {
    if (image.empty()) {
        throw InvalidInputError(std::string("morphism image of '") + domain_letter +
                                "' must be nonempty");
    }
}
}  // namespace

Morphism::Morphism(Word image_a, Word image_b) {
    require_nonempty(image_a, 'a');
    require_nonempty(image_b, 'b');
    images_[index(Letter::a)] = std::move(image_a);
    images_[index(Letter::b)] = std::move(image_b);
}

Morphism::Morphism(Word image_a, Word image_b, Word image_c)
    : Morphism(std::move(image_a), std::move(image_b)) {
    require_nonempty(image_c, 'c');
    images_[index(Letter::c)] = std::move(image_c);
}

bool Morphism::has_image(Letter l) const noexcept { return images_[index(l)].has_value(); }

const Word& Morphism::image(Letter l) const {
    const auto& img = images_[index(l)];
    if (!img) {
        throw InvalidInputError(std::string("morphism has no image for letter '") +
                                to_char(l) + "'");
    }
    return *img;
}

Word Morphism::operator()(const Word& w) const {
    std::size_t total = 0;
    for (char c : w.str()) total += image(letter_from_char(c)).size();
    std::string out;
    out.reserve(total);
    for (char c : w.str()) out += image(letter_from_char(c)).str();
    return detail::adopt(std::move(out));
}

const Morphism& Morphism::sigma() {
    static const Morphism m(Word("ab"), Word("aa"));
    return m;
}

const Morphism& Morphism::tau1() {
    static const Morphism m(Word("a"), Word("bb"));
    return m;
}

const Morphism& Morphism::tau2() {
    static const Morphism m(Word("ab"), Word("acac"));
    return m;
}

}  // namespace pdwords
