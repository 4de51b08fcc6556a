#include "pdwords/returns.hpp"

#include <algorithm>
#include <string_view>

namespace pdwords {

namespace {

// First `want` occurrence positions of factor in D, growing the cached
// prefix geometrically. Positions are 1-indexed.
std::vector<std::size_t> scan_positions(SequenceStore& store, const Word& factor,
                                        std::size_t want) {
    std::size_t window =
        std::min(std::max<std::size_t>(1024, 64 * factor.size()), store.max_length());
    for (;;) {
        auto buf = store.d_buffer(window);
        std::string_view text = std::string_view(*buf).substr(0, window);
        std::vector<std::size_t> positions;
        positions.reserve(want);
        std::size_t from = 0;
        while (positions.size() < want) {
            std::size_t hit = text.find(factor.view(), from);
            if (hit == std::string_view::npos) break;
            positions.push_back(hit + 1);
            from = hit + 1;
        }
        if (positions.size() >= want) return positions;
        if (window == store.max_length()) {
            throw CapExceededError("found only " + std::to_string(positions.size()) + " of " +
                                   std::to_string(want) + " occurrences of \"" + factor.str() +
                                   "\" in a window of length " + std::to_string(window));
        }
        window = std::min(window * 2, store.max_length());
    }
}

void require_count(std::size_t count) {
    if (count < 1) throw InvalidInputError("occurrence count must be >= 1");
}

void require_factor(SequenceStore& store, const Word& factor) {
    if (factor.empty()) throw InvalidInputError("factor must be nonempty");
    if (!store.is_factor(factor)) {
        throw NotAFactorError("\"" + factor.str() +
                              "\" is not a factor of the period-doubling sequence");
    }
}

}  // namespace

OccurrenceStream occurrences(SequenceStore& store, const Word& factor, std::size_t count) {
    require_count(count);
    require_factor(store, factor);
    // One extra occurrence so the caller's last return word is bounded.
    auto positions = scan_positions(store, factor, count + 1);
    positions.resize(count);
    return OccurrenceStream{factor, std::move(positions)};
}

ReturnWords return_words(SequenceStore& store, const Word& factor, std::size_t count) {
    require_count(count);
    require_factor(store, factor);
    auto positions = scan_positions(store, factor, count + 1);
    auto buf = store.d_buffer(positions.back() - 1 + factor.size());
    ReturnWords out;
    out.r0 = detail::adopt(buf->substr(0, positions.front() - 1));
    out.words.reserve(count);
    for (std::size_t p = 0; p < count; ++p) {
        out.words.push_back(
            detail::adopt(buf->substr(positions[p] - 1, positions[p + 1] - positions[p])));
    }
    return out;
}

const char* to_string(Classification c) noexcept {
    return c == Classification::theta1 ? "Theta1" : "Theta2";
}

namespace {

bool slots_complete(Classification cls, std::size_t count) {
    return cls == Classification::theta1 ? count >= 2 : count >= 4;
}

}  // namespace

ReturnDecomposition decompose(SequenceStore& store, const Word& factor, std::size_t count) {
    require_count(count);
    EnvelopeWord e = env(store, factor);
    ReturnWords scanned = return_words(store, factor, count);
    const Classification cls =
        e.kind == 1 ? Classification::theta1 : Classification::theta2;

    std::map<Letter, Word> alphabet;
    alphabet[Letter::a] = scanned.words[0];
    if (count >= 2) alphabet[Letter::b] = scanned.words[1];
    if (cls == Classification::theta2 && count >= 4) alphabet[Letter::c] = scanned.words[3];
    for (auto it = alphabet.begin(); it != alphabet.end(); ++it) {
        for (auto jt = std::next(it); jt != alphabet.end(); ++jt) {
            if (it->second == jt->second) {
                throw ClassificationMismatchError(
                    "return words of \"" + factor.str() +
                        "\" do not form distinct alphabet slots",
                    factor.str(), it->second.str(), jt->second.str());
            }
        }
    }

    std::string coded;
    coded.reserve(count);
    for (std::size_t p = 0; p < count; ++p) {
        char letter = 0;
        for (const auto& [code, word] : alphabet) {
            if (scanned.words[p] == word) {
                letter = to_char(code);
                break;
            }
        }
        if (letter == 0) {
            throw ClassificationMismatchError(
                "return word " + std::to_string(p + 1) + " of \"" + factor.str() +
                    "\" (= \"" + scanned.words[p].str() + "\") matches no alphabet slot",
                factor.str(), "", scanned.words[p].str());
        }
        coded.push_back(letter);
    }

    Word coded_word = detail::adopt(std::move(coded));
    Word expected = store.theta_prefix(static_cast<int>(cls), count);
    if (coded_word != expected) {
        throw ClassificationMismatchError(
            "coded return-word sequence of \"" + factor.str() + "\" deviates from " +
                to_string(cls),
            factor.str(), expected.str(), coded_word.str());
    }

    return ReturnDecomposition{factor,
                               std::move(scanned.r0),
                               std::move(scanned.words),
                               std::move(coded_word),
                               cls,
                               std::move(alphabet),
                               slots_complete(cls, count)};
}

namespace {

// mu1^{-1} w mu1: moves the prefix mu1 of w to its end. mu1 is a prefix of
// every envelope return word; anything else falsifies the extension.
Word conjugate(const Word& w, const Word& mu1) {
    if (!is_prefix(mu1, w)) {
        throw InternalCheckError("conjugation prefix \"" + mu1.str() +
                                 "\" does not start the return word \"" + w.str() + "\"");
    }
    return strip_prefix(mu1, w) + mu1;
}

struct EnvelopeSlots {
    Word r0;
    std::map<Letter, Word> slots;  // full alphabet of the envelope itself
};

EnvelopeSlots envelope_slots(const EnvelopeWord& e) {
    EnvelopeSlots out;
    const int m = e.order;
    if (e.kind == 1) {
        out.r0 = Word();
        out.slots[Letter::a] = block_a(m);
        out.slots[Letter::b] = block_a(m - 1);
    } else {
        out.r0 = block_a(m);
        out.slots[Letter::a] = block_a(m - 1);
        out.slots[Letter::b] = block_a(m - 1) + block_a(m) + block_b(m + 1);
        out.slots[Letter::c] = block_b(m) + block_b(m - 1);
    }
    return out;
}

}  // namespace

ReturnDecomposition predicted_decomposition(SequenceStore& store, const Word& factor,
                                            std::size_t count) {
    require_count(count);
    EnvelopeExtension ext = env_extension(store, factor);
    const Classification cls =
        ext.envelope.kind == 1 ? Classification::theta1 : Classification::theta2;
    EnvelopeSlots base = envelope_slots(ext.envelope);

    std::map<Letter, Word> conjugated;
    for (const auto& [code, word] : base.slots) {
        conjugated[code] = conjugate(word, ext.mu1);
    }

    Word coded = store.theta_prefix(static_cast<int>(cls), count);
    std::vector<Word> returns;
    returns.reserve(count);
    for (std::size_t p = 1; p <= count; ++p) {
        returns.push_back(conjugated.at(coded.at(p)));
    }

    // The published alphabet mirrors decompose: a slot appears once the
    // coding has had a chance to witness it.
    std::map<Letter, Word> alphabet;
    alphabet[Letter::a] = conjugated.at(Letter::a);
    if (count >= 2) alphabet[Letter::b] = conjugated.at(Letter::b);
    if (cls == Classification::theta2 && count >= 4) alphabet[Letter::c] = conjugated.at(Letter::c);

    return ReturnDecomposition{factor,
                               base.r0 + ext.mu1,
                               std::move(returns),
                               std::move(coded),
                               cls,
                               std::move(alphabet),
                               slots_complete(cls, count)};
}

std::vector<std::size_t> predicted_positions(SequenceStore& store, const Word& factor,
                                             std::size_t count) {
    require_count(count);
    EnvelopeExtension ext = env_extension(store, factor);
    const int m = ext.envelope.order;
    const std::size_t half = std::size_t{1} << (m - 1);

    std::size_t r0_len;
    std::size_t len_a, len_b, len_c = 0;
    if (ext.envelope.kind == 1) {
        r0_len = ext.mu1.size();
        len_a = 2 * half;  // |r1| = 2^m
        len_b = half;      // |r2| = 2^{m-1}
    } else {
        r0_len = 2 * half + ext.mu1.size();  // |r0| = 2^m + |mu1|
        len_a = half;                        // |r1| = 2^{m-1}
        len_b = 7 * half;                    // |r2| = 7*2^{m-1}
        len_c = 3 * half;                    // |r4| = 3*2^{m-1}
    }

    Word coded = store.theta_prefix(ext.envelope.kind, count);
    std::vector<std::size_t> positions;
    positions.reserve(count);
    positions.push_back(r0_len + 1);
    for (std::size_t p = 1; p < count; ++p) {
        std::size_t step;
        switch (coded.at(p)) {
            case Letter::a: step = len_a; break;
            case Letter::b: step = len_b; break;
            default: step = len_c; break;
        }
        positions.push_back(positions.back() + step);
    }
    return positions;
}

namespace {

Morphism coded_alphabet(int kind, int m, int max_order) {
    if (kind == 1) {
        return Morphism(block_a(m, max_order), block_b(m, max_order));
    }
    if (kind != 2) {
        throw InvalidInputError("coded block kind must be 1 or 2, got " + std::to_string(kind));
    }
    Word r1 = block_a(m - 1, max_order);
    Word r2 = block_a(m - 1, max_order) + block_a(m, max_order) + block_b(m + 1, max_order);
    Word r4 = block_b(m, max_order) + block_b(m - 1, max_order);
    return Morphism(r1 + r2, r1 + r4 + r1 + r4);
}

}  // namespace

Word coded_block_a(int kind, int m, int n, int max_order) {
    if (m < 1) throw InvalidInputError("coded block base order must be >= 1");
    return coded_alphabet(kind, m, max_order)(block_a(n, max_order));
}

Word coded_block_b(int kind, int m, int n, int max_order) {
    if (m < 1) throw InvalidInputError("coded block base order must be >= 1");
    return coded_alphabet(kind, m, max_order)(block_b(n, max_order));
}

}  // namespace pdwords
