#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdwords/returns.hpp"
#include "pdwords/sequence.hpp"
#include "pdwords/word.hpp"

namespace pdwords {

// One executed check. A failing check always carries an independently
// re-checkable counterexample (concrete words and positions).
struct CheckResult {
    std::string check_id;
    nlohmann::ordered_json params;
    bool pass = true;
    nlohmann::ordered_json counterexample;  // null when pass
    double elapsed_seconds = 0.0;
};

struct VerifyConfig {
    std::size_t len_max = 32;  // factor lengths enumerated
    std::size_t count = 64;    // occurrences / return words per factor
    int m_max = 12;            // envelope orders driven directly
    unsigned jobs = 1;         // worker threads for factor-level checks
};

struct VerificationReport {
    VerifyConfig config;
    std::vector<CheckResult> results;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

// All distinct factors of D up to len_max, shortest first then
// lexicographic. Enumerated from a stabilized prefix: windows of a prefix
// starting at 64*len_max letters, doubled until the factor set stops
// changing.
std::vector<Word> distinct_factors(SequenceStore& store, std::size_t len_max);

// Return-word structure of envelope words E_{kind,m} for m = 1..m_max:
// coded sequence against the Theta prefix and the theorem alphabet
// (thm-2.1 / thm-2.2), closed-form first positions and return words
// (prop-2.4 / prop-2.5), closed-form lengths (cor-2.1 / cor-2.2).
std::vector<CheckResult> verify_theorem_envelope(SequenceStore& store, int kind, int m_max,
                                                 std::size_t count);

// Envelope extension over every distinct factor up to len_max: unique
// occurrence in the envelope (thm-3.1) and the position identity
// L(w,p) = L(Env(w),p) + |mu1| for p <= count (thm-3.7).
std::vector<CheckResult> verify_extension(SequenceStore& store, std::size_t len_max,
                                          std::size_t count, unsigned jobs = 1);

// General-factor return words over every distinct factor up to len_max:
// scanned decomposition equals the envelope-conjugated prediction (thm-4)
// and the closed-form lengths hold (cor-c3.2).
std::vector<CheckResult> verify_general(SequenceStore& store, std::size_t len_max,
                                        std::size_t count, unsigned jobs = 1);

// Structural identities. Bounds derive from m_max: block identities and
// recursions run to m_max+8, envelope recursions and palindromicity to
// m_max+6, occurrence lemmas to m_max+2, palindromic-prefix classification
// to m_max, palindrome classification to min(m_max,8), context lemmas to
// min(m_max,10) over a 2^16-letter prefix, separators to min(m_max,10).
// Includes the cache regeneration check over at least 4096 letters.
std::vector<CheckResult> verify_structure(SequenceStore& store, int m_max);

// Runs every suite above. Report content is deterministic and independent
// of cfg.jobs (which is excluded from the serialized config for that
// reason).
VerificationReport sweep(SequenceStore& store, const VerifyConfig& cfg);

nlohmann::ordered_json check_to_json(const CheckResult& r);
nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace pdwords
