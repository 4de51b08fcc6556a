#pragma once

#include <optional>

#include "pdwords/sequence.hpp"
#include "pdwords/word.hpp"

namespace pdwords {

// The m-th envelope word of type kind:
//   E_{1,m} = A_m with its last letter removed        (length 2^m - 1)
//   E_{2,m} = B_m B_{m-1} with its last letter removed (length 3*2^{m-1} - 1)
// Every envelope word is a palindrome.
struct EnvelopeWord {
    int kind = 1;  // 1 or 2
    int order = 1; // m >= 1
    Word word;

    bool operator==(const EnvelopeWord&) const = default;
};

EnvelopeWord envelope_word(int kind, int m, int max_order = kDefaultMaxBlockOrder);

// Index of e in the total order E_{1,1} < E_{2,1} < E_{1,2} < E_{2,2} < ...:
// rank(E_{i,m}) = 2(m-1) + i - 1.
int envelope_rank(const EnvelopeWord& e) noexcept;
EnvelopeWord envelope_at_rank(int rank, int max_order = kDefaultMaxBlockOrder);

// The least envelope word (in rank order) containing factor. The factor must
// be nonempty and occur in D.
EnvelopeWord env(SequenceStore& store, const Word& factor);

// The unique factorization Env(factor) = mu1 . factor . mu2. Uniqueness of
// the occurrence is checked and an InternalCheckError is raised if violated.
struct EnvelopeExtension {
    EnvelopeWord envelope;
    Word mu1;
    Word mu2;
    Word factor;

    bool operator==(const EnvelopeExtension&) const = default;
};

EnvelopeExtension env_extension(SequenceStore& store, const Word& factor);

// The single-letter separators x_1...x_h in the decomposition
// E_{target_kind,m} = E_{1,n} x_1 E_{1,n} x_2 ... x_h E_{1,n}, extracted by
// peeling the E_{1,n} blocks. Requires 1 <= n < m. Equals E_{target_kind,m-n}
// for n even and its complement for n odd.
Word separator_word(int target_kind, int m, int n, int max_order = kDefaultMaxBlockOrder);

// The envelope word guaranteed to occur inside factor: E_{1,m-2} when
// Env(factor) = E_{1,m} and E_{1,m-1} when Env(factor) = E_{2,m}, both for
// m >= 3; nullopt for m <= 2. Containment is verified before returning.
std::optional<EnvelopeWord> inner_envelope(SequenceStore& store, const Word& factor);

}  // namespace pdwords
