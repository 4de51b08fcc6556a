#pragma once

#include <cstddef>
#include <memory>
#include <shared_mutex>

#include "pdwords/morphism.hpp"
#include "pdwords/word.hpp"

namespace pdwords {

inline constexpr int kDefaultMaxBlockOrder = 30;
inline constexpr std::size_t kDefaultMaxSequenceLength = std::size_t{1} << 26;

// Last letter of sigma^m(a): a exactly when m is even.
Letter delta(int m);

// A_m = sigma^m(a) and B_m = sigma^m(b), each of length 2^m.
Word block_a(int m, int max_order = kDefaultMaxBlockOrder);
Word block_b(int m, int max_order = kDefaultMaxBlockOrder);

// Lazily grown prefixes of the period-doubling sequence D and of its codings
// Theta1 = tau1(D) and Theta2 = tau2(D).
//
// Growth is append-only: existing letters are never rewritten, so concurrent
// readers always observe a consistent prefix. Readers take snapshots of an
// immutable buffer; growth swaps the buffer under an exclusive lock.
class SequenceStore {
public:
    explicit SequenceStore(std::size_t max_length = kDefaultMaxSequenceLength);

    SequenceStore(const SequenceStore&) = delete;
    SequenceStore& operator=(const SequenceStore&) = delete;

    std::size_t max_length() const noexcept { return max_length_; }

    // Length-n prefix of D.
    Word d_prefix(std::size_t n);

    // First n letters of Theta1 (kind 1, over {a,b}) or Theta2 (kind 2,
    // over {a,b,c}).
    Word theta_prefix(int kind, std::size_t n);

    // Immutable snapshot of the D buffer, grown to at least min_len letters.
    // Scanners use this to avoid copying large prefixes.
    std::shared_ptr<const std::string> d_buffer(std::size_t min_len);
    std::shared_ptr<const std::string> theta_buffer(int kind, std::size_t min_len);

    std::size_t d_cached_length() const;

    // Whether w occurs in D. Decided on a stabilized prefix: the scan starts
    // at max(1024, 64*|w|) letters and doubles until two consecutive windows
    // give the same answer. Presence is definitive; absence is a cutoff at
    // the point of stabilization.
    bool is_factor(const Word& w);

    // Test instrumentation: flips the letter (a <-> b) at 1-indexed pos in
    // the cached D buffer and drops the Theta caches so they are rebuilt
    // from the corrupted data. pos must be within the currently cached
    // prefix. Verification suites are expected to catch any such flip.
    void flip_letter(std::size_t pos);

private:
    struct ThetaChannel {
        std::shared_ptr<const std::string> buf;
        std::size_t consumed = 0;  // buf is exactly tau(D[1..consumed])
    };

    void require_within_cap(std::size_t n) const;
    void grow_d_locked(std::size_t n);
    void grow_theta_locked(int kind, std::size_t n);
    static const Morphism& tau_for(int kind);

    std::size_t max_length_;
    mutable std::shared_mutex mutex_;
    std::shared_ptr<const std::string> d_;
    ThetaChannel theta_[2];
};

}  // namespace pdwords
