#include "pdwords/envelope.hpp"

#include <bit>

namespace pdwords {

EnvelopeWord envelope_word(int kind, int m, int max_order) {
    if (kind != 1 && kind != 2) {
        throw InvalidInputError("envelope kind must be 1 or 2, got " + std::to_string(kind));
    }
    if (m < 1) {
        throw InvalidInputError("envelope order must be >= 1, got " + std::to_string(m));
    }
    Word w = kind == 1 ? strip_last(block_a(m, max_order))
                       : strip_last(block_b(m, max_order) + block_b(m - 1, max_order));
    return EnvelopeWord{kind, m, std::move(w)};
}

int envelope_rank(const EnvelopeWord& e) noexcept { return 2 * (e.order - 1) + e.kind - 1; }

EnvelopeWord envelope_at_rank(int rank, int max_order) {
    if (rank < 0) throw InvalidInputError("envelope rank must be >= 0");
    return envelope_word(rank % 2 + 1, rank / 2 + 1, max_order);
}

EnvelopeWord env(SequenceStore& store, const Word& factor) {
    if (factor.empty()) {
        throw InvalidInputError("env requires a nonempty factor");
    }
    if (!store.is_factor(factor)) {
        throw NotAFactorError("\"" + factor.str() +
                              "\" is not a factor of the period-doubling sequence");
    }
    // Every factor of length L occurs in the prefix E_{1,M} once 2^M is a
    // small multiple of L; the +8 margin turns a failed scan into a hard
    // error instead of an unbounded loop.
    const int max_m =
        static_cast<int>(std::bit_width(factor.size())) + 8;
    for (int rank = 0;; ++rank) {
        const int kind = rank % 2 + 1;
        const int m = rank / 2 + 1;
        if (m > max_m) {
            throw InternalCheckError("no envelope word of order <= " + std::to_string(max_m) +
                                     " contains \"" + factor.str() + "\"");
        }
        EnvelopeWord e = envelope_word(kind, m);
        if (e.word.size() >= factor.size() && occurs_in(factor, e.word)) {
            return e;
        }
    }
}

EnvelopeExtension env_extension(SequenceStore& store, const Word& factor) {
    EnvelopeWord e = env(store, factor);
    auto occ = find_occurrences(factor, e.word);
    if (occ.size() != 1) {
        throw InternalCheckError("factor \"" + factor.str() + "\" occurs " +
                                 std::to_string(occ.size()) + " times in its envelope \"" +
                                 e.word.str() + "\"; expected exactly one occurrence");
    }
    const std::size_t pos = occ.front();
    Word mu1 = e.word.slice(1, pos - 1);
    Word mu2 = e.word.slice(pos + factor.size(), e.word.size());
    return EnvelopeExtension{std::move(e), std::move(mu1), std::move(mu2), factor};
}

Word separator_word(int target_kind, int m, int n, int max_order) {
    if (n < 1 || n >= m) {
        throw InvalidInputError("separator_word requires 1 <= n < m, got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m));
    }
    const Word whole = envelope_word(target_kind, m, max_order).word;
    const Word base = envelope_word(1, n, max_order).word;
    const std::size_t period = base.size() + 1;  // = 2^n
    const std::size_t blocks = (whole.size() + 1) / period;
    std::string separators;
    separators.reserve(blocks - 1);
    for (std::size_t i = 0; i < blocks; ++i) {
        const std::size_t start = i * period + 1;
        if (whole.slice(start, start + base.size() - 1) != base) {
            throw InternalCheckError("E_{" + std::to_string(target_kind) + "," +
                                     std::to_string(m) + "} does not interleave E_{1," +
                                     std::to_string(n) + "} at block " + std::to_string(i + 1));
        }
        if (i + 1 < blocks) {
            separators.push_back(to_char(whole.at(start + base.size())));
        }
    }
    return detail::adopt(std::move(separators));
}

std::optional<EnvelopeWord> inner_envelope(SequenceStore& store, const Word& factor) {
    EnvelopeWord e = env(store, factor);
    if (e.order <= 2) return std::nullopt;
    EnvelopeWord inner = envelope_word(1, e.kind == 1 ? e.order - 2 : e.order - 1);
    if (!occurs_in(inner.word, factor)) {
        throw InternalCheckError("inner envelope \"" + inner.word.str() +
                                 "\" does not occur in \"" + factor.str() +
                                 "\" although Env = E_{" + std::to_string(e.kind) + "," +
                                 std::to_string(e.order) + "}");
    }
    return inner;
}

}  // namespace pdwords
