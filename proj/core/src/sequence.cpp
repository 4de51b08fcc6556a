#include "pdwords/sequence.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

namespace pdwords {

Letter delta(int m) {
    if (m < 0) throw InvalidInputError("delta requires m >= 0");
    return m % 2 == 0 ? Letter::a : Letter::b;
}

namespace {

std::pair<std::string, std::string> iterate_blocks(int m, int max_order, const char* name) {
    if (m < 0) throw InvalidInputError(std::string(name) + " requires m >= 0");
    if (m > max_order) {
        throw CapExceededError(std::string(name) + ": order " + std::to_string(m) +
                               " exceeds the cap " + std::to_string(max_order));
    }
    std::string a = "a", b = "b";
    for (int i = 0; i < m; ++i) {
        std::string next_a;
        next_a.reserve(a.size() * 2);
        next_a += a;
        next_a += b;
        std::string next_b;
        next_b.reserve(a.size() * 2);
        next_b += a;
        next_b += a;
        a = std::move(next_a);
        b = std::move(next_b);
    }
    return {std::move(a), std::move(b)};
}

}  // namespace

Word block_a(int m, int max_order) {
    return detail::adopt(iterate_blocks(m, max_order, "block_a").first);
}

Word block_b(int m, int max_order) {
    return detail::adopt(iterate_blocks(m, max_order, "block_b").second);
}

SequenceStore::SequenceStore(std::size_t max_length)
    : max_length_(max_length), d_(std::make_shared<const std::string>("ab")) {}

void SequenceStore::require_within_cap(std::size_t n) const {
    if (n > max_length_) {
        throw CapExceededError("requested prefix of length " + std::to_string(n) +
                               " exceeds the sequence cap " + std::to_string(max_length_));
    }
}

void SequenceStore::grow_d_locked(std::size_t n) {
    if (d_->size() >= n) return;
    std::string next = *d_;
    while (next.size() < n) {
        // sigma maps the length-k prefix of D onto the length-2k prefix, so
        // the letters past the current end are the images of the second half
        // of the buffer. Appending them never rewrites existing letters.
        const std::size_t size = next.size();
        std::string tail;
        tail.reserve(size);
        for (std::size_t i = size / 2; i < size; ++i) {
            if (next[i] == 'a') {
                tail += "ab";
            } else {
                tail += "aa";
            }
        }
        next += tail;
    }
    d_ = std::make_shared<const std::string>(std::move(next));
}

const Morphism& SequenceStore::tau_for(int kind) {
    if (kind == 1) return Morphism::tau1();
    if (kind == 2) return Morphism::tau2();
    throw InvalidInputError("theta kind must be 1 or 2, got " + std::to_string(kind));
}

void SequenceStore::grow_theta_locked(int kind, std::size_t n) {
    ThetaChannel& ch = theta_[kind - 1];
    if (!ch.buf) ch.buf = std::make_shared<const std::string>();
    if (ch.buf->size() >= n) return;
    // Every image is at least one letter (two for tau2), so consuming
    // `need` letters of D yields at least n coded letters.
    std::size_t need = (kind == 1) ? n : (n + 1) / 2;
    need = std::max(need, ch.consumed);
    grow_d_locked(need);
    const Morphism& tau = tau_for(kind);
    const std::string& d = *d_;
    std::string next = *ch.buf;
    for (std::size_t i = ch.consumed; i < need; ++i) {
        next += tau.image(static_cast<Letter>(d[i])).str();
    }
    ch.consumed = need;
    ch.buf = std::make_shared<const std::string>(std::move(next));
}

std::shared_ptr<const std::string> SequenceStore::d_buffer(std::size_t min_len) {
    require_within_cap(min_len);
    {
        std::shared_lock lock(mutex_);
        if (d_->size() >= min_len) return d_;
    }
    std::unique_lock lock(mutex_);
    grow_d_locked(min_len);
    return d_;
}

std::shared_ptr<const std::string> SequenceStore::theta_buffer(int kind, std::size_t min_len) {
    tau_for(kind);  // validates kind
    require_within_cap(min_len);
    {
        std::shared_lock lock(mutex_);
        const auto& buf = theta_[kind - 1].buf;
        if (buf && buf->size() >= min_len) return buf;
    }
    std::unique_lock lock(mutex_);
    grow_theta_locked(kind, min_len);
    return theta_[kind - 1].buf;
}

Word SequenceStore::d_prefix(std::size_t n) {
    auto buf = d_buffer(n);
    return detail::adopt(buf->substr(0, n));
}

Word SequenceStore::theta_prefix(int kind, std::size_t n) {
    auto buf = theta_buffer(kind, n);
    return detail::adopt(buf->substr(0, n));
}

std::size_t SequenceStore::d_cached_length() const {
    std::shared_lock lock(mutex_);
    return d_->size();
}

bool SequenceStore::is_factor(const Word& w) {
    if (w.empty()) {
        throw InvalidInputError("factor membership requires a nonempty word");
    }
    std::size_t window = std::max<std::size_t>(1024, 64 * w.size());
    require_within_cap(window);
    auto contains = [&](std::size_t len) {
        auto buf = d_buffer(len);
        return std::string_view(*buf).substr(0, len).find(w.view()) != std::string_view::npos;
    };
    bool prev = contains(window);
    while (true) {
        if (prev) return true;
        if (window > max_length_ / 2) {
            throw CapExceededError("factor membership for \"" + w.str() +
                                   "\" did not stabilize within a window of length " +
                                   std::to_string(window));
        }
        window *= 2;
        bool cur = contains(window);
        if (cur == prev) return cur;
        prev = cur;
    }
}

void SequenceStore::flip_letter(std::size_t pos) {
    std::unique_lock lock(mutex_);
    if (pos < 1 || pos > d_->size()) {
        throw InvalidInputError("flip_letter position " + std::to_string(pos) +
                                " outside the cached prefix of length " +
                                std::to_string(d_->size()));
    }
    std::string mutated = *d_;
    mutated[pos - 1] = mutated[pos - 1] == 'a' ? 'b' : 'a';
    d_ = std::make_shared<const std::string>(std::move(mutated));
    theta_[0] = ThetaChannel{};
    theta_[1] = ThetaChannel{};
}

}  // namespace pdwords
