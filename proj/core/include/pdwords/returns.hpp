#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "pdwords/envelope.hpp"
#include "pdwords/sequence.hpp"
#include "pdwords/word.hpp"

namespace pdwords {

// First `count` occurrence start positions of a factor in D (1-indexed,
// gap-free: no occurrence begins between consecutive entries).
struct OccurrenceStream {
    Word factor;
    std::vector<std::size_t> positions;

    bool operator==(const OccurrenceStream&) const = default;
};

OccurrenceStream occurrences(SequenceStore& store, const Word& factor, std::size_t count);

// r0 is the prefix of D before the first occurrence (not a return word);
// words[p-1] is the p-th return word, the block of D from occurrence p up to
// (not including) occurrence p+1.
struct ReturnWords {
    Word r0;
    std::vector<Word> words;

    bool operator==(const ReturnWords&) const = default;
};

ReturnWords return_words(SequenceStore& store, const Word& factor, std::size_t count);

enum class Classification { theta1 = 1, theta2 = 2 };

const char* to_string(Classification c) noexcept;

// A factor's return-word sequence coded over the canonical alphabet slots
// a -> r1, b -> r2 (Theta1), or a -> r1, b -> r2, c -> r4 (Theta2). The coded
// word always equals the matching Theta prefix; a disagreement raises
// ClassificationMismatchError. The alphabet map is complete once every slot
// has been witnessed (count >= 2 for Theta1, count >= 4 for Theta2).
struct ReturnDecomposition {
    Word factor;
    Word r0;
    std::vector<Word> returns;
    Word coded;
    Classification classification = Classification::theta1;
    std::map<Letter, Word> alphabet;
    bool alphabet_complete = false;

    bool operator==(const ReturnDecomposition&) const = default;
};

// Scans D for the factor's occurrences and builds its decomposition.
ReturnDecomposition decompose(SequenceStore& store, const Word& factor, std::size_t count);

// Builds the same decomposition without scanning for the factor: the return
// words of its envelope E_{i,m} are conjugated by mu1 (r_p = mu1^{-1} r_p(E) mu1,
// r0 = r0(E) mu1) and laid out along the Theta coding.
ReturnDecomposition predicted_decomposition(SequenceStore& store, const Word& factor,
                                            std::size_t count);

// Occurrence positions from the closed-form return-word lengths:
// L(1) = |r0| + 1 and L(p+1) = L(p) + |r_p|, the length chosen by the Theta
// letter at p.
std::vector<std::size_t> predicted_positions(SequenceStore& store, const Word& factor,
                                             std::size_t count);

// A_n and B_n rewritten over the return-word alphabets: for kind 1 the
// letters are (r1, r2 r2) = (A_m, B_m); for kind 2 they are
// (r1 r2, r1 r4 r1 r4) with the slot words of E_{2,m}.
Word coded_block_a(int kind, int m, int n, int max_order = kDefaultMaxBlockOrder);
Word coded_block_b(int kind, int m, int n, int max_order = kDefaultMaxBlockOrder);

}  // namespace pdwords
