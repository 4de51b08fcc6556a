#include "pdwords/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <string_view>
#include <thread>

#include "pdwords/envelope.hpp"
#include "pdwords/morphism.hpp"

namespace pdwords {

namespace {

using ordered_json = nlohmann::ordered_json;

class Check {
public:
    Check(std::string id, ordered_json params) : start_(std::chrono::steady_clock::now()) {
        result_.check_id = std::move(id);
        result_.params = std::move(params);
    }

    void fail(ordered_json counterexample) {
        if (violations_ == 0) result_.counterexample = std::move(counterexample);
        ++violations_;
    }

    std::size_t violations() const noexcept { return violations_; }

    CheckResult finish() {
        if (violations_ > 0) {
            result_.pass = false;
            result_.counterexample["violations"] = violations_;
        }
        result_.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(result_);
    }

private:
    CheckResult result_;
    std::chrono::steady_clock::time_point start_;
    std::size_t violations_ = 0;
};

template <typename Body>
CheckResult run_check(std::string id, ordered_json params, Body&& body) {
    Check check(std::move(id), std::move(params));
    try {
        body(check);
    } catch (const ClassificationMismatchError& e) {
        check.fail({{"error", e.what()},
                    {"factor", e.factor()},
                    {"expected", e.expected()},
                    {"actual", e.actual()}});
    } catch (const Error& e) {
        check.fail({{"error", e.what()}});
    }
    return check.finish();
}

// Factor-level checks are independent; run them on `jobs` workers and merge
// in input order so reports do not depend on scheduling.
template <typename Fn>
std::vector<CheckResult> for_each_factor(const std::vector<Word>& factors, unsigned jobs,
                                         Fn&& fn) {
    std::vector<std::vector<CheckResult>> slots(factors.size());
    auto run_one = [&](std::size_t i) {
        try {
            slots[i] = fn(factors[i]);
        } catch (const std::exception& e) {
            CheckResult r;
            r.check_id = "internal-error";
            r.params = {{"factor", factors[i].str()}};
            r.pass = false;
            r.counterexample = {{"error", e.what()}};
            slots[i] = {std::move(r)};
        }
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < factors.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= factors.size()) break;
                run_one(i);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
    }
    std::vector<CheckResult> out;
    for (auto& s : slots) {
        for (auto& r : s) out.push_back(std::move(r));
    }
    return out;
}

ordered_json positions_json(const std::vector<std::size_t>& v) {
    ordered_json j = ordered_json::array();
    for (auto p : v) j.push_back(p);
    return j;
}

}  // namespace

std::vector<Word> distinct_factors(SequenceStore& store, std::size_t len_max) {
    if (len_max < 1) throw InvalidInputError("len_max must be >= 1");
    auto collect = [&](std::size_t window) {
        auto buf = store.d_buffer(window);
        std::string_view text = std::string_view(*buf).substr(0, window);
        std::set<std::string> set;
        for (std::size_t len = 1; len <= len_max; ++len) {
            for (std::size_t i = 0; i + len <= text.size(); ++i) {
                set.insert(std::string(text.substr(i, len)));
            }
        }
        return set;
    };
    std::size_t window = 64 * len_max;
    auto prev = collect(window);
    for (;;) {
        if (window > store.max_length() / 2) {
            throw CapExceededError("factor enumeration did not stabilize within window " +
                                   std::to_string(window));
        }
        window *= 2;
        auto cur = collect(window);
        if (cur == prev) break;
        prev = std::move(cur);
    }
    std::vector<Word> out;
    out.reserve(prev.size());
    for (const auto& s : prev) out.push_back(Word(s));
    std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
        return x.size() != y.size() ? x.size() < y.size() : x.str() < y.str();
    });
    return out;
}

std::vector<CheckResult> verify_theorem_envelope(SequenceStore& store, int kind, int m_max,
                                                 std::size_t count) {
    if (kind != 1 && kind != 2) throw InvalidInputError("kind must be 1 or 2");
    if (m_max < 1) throw InvalidInputError("m_max must be >= 1");
    if (count < 1) throw InvalidInputError("count must be >= 1");

    std::vector<CheckResult> out;
    const char* thm_id = kind == 1 ? "thm-2.1" : "thm-2.2";
    const char* prop_id = kind == 1 ? "prop-2.4" : "prop-2.5";
    const char* cor_id = kind == 1 ? "cor-2.1" : "cor-2.2";

    for (int m = 1; m <= m_max; ++m) {
        const EnvelopeWord e = envelope_word(kind, m);
        const Word a_m = block_a(m);
        const Word a_m1 = block_a(m - 1);
        const std::size_t half = std::size_t{1} << (m - 1);

        out.push_back(run_check(thm_id, {{"m", m}, {"P", count}}, [&](Check& c) {
            const EnvelopeWord found = env(store, e.word);
            if (found != e) {
                c.fail({{"m", m},
                        {"expected_env", {{"kind", kind}, {"m", m}}},
                        {"actual_env", {{"kind", found.kind}, {"m", found.order}}}});
                return;
            }
            const ReturnDecomposition dec = decompose(store, e.word, count);
            const Word theta = store.theta_prefix(kind, count);
            if (dec.coded != theta) {
                c.fail({{"m", m}, {"expected", theta.str()}, {"actual", dec.coded.str()}});
            }
            std::map<Letter, Word> expect;
            if (kind == 1) {
                expect = {{Letter::a, a_m}, {Letter::b, a_m1}};
            } else {
                expect = {{Letter::a, a_m1},
                          {Letter::b, a_m1 + a_m + block_b(m + 1)},
                          {Letter::c, block_b(m) + block_b(m - 1)}};
            }
            for (const auto& [code, word] : dec.alphabet) {
                if (expect.at(code) != word) {
                    c.fail({{"m", m},
                            {"slot", std::string(1, to_char(code))},
                            {"expected", expect.at(code).str()},
                            {"actual", word.str()}});
                }
            }
        }));

        out.push_back(run_check(prop_id, {{"m", m}}, [&](Check& c) {
            const std::size_t want = std::min<std::size_t>(count, kind == 1 ? 3 : 5);
            const auto occ = occurrences(store, e.word, want);
            std::vector<std::size_t> closed;
            if (kind == 1) {
                closed = {1, 2 * half + 1, 3 * half + 1};
            } else {
                closed = {2 * half + 1, 3 * half + 1, 10 * half + 1, 11 * half + 1,
                          14 * half + 1};
            }
            closed.resize(want);
            if (occ.positions != closed) {
                c.fail({{"m", m},
                        {"expected_positions", positions_json(closed)},
                        {"actual_positions", positions_json(occ.positions)}});
            }
            const std::size_t words_wanted = std::min<std::size_t>(count, kind == 1 ? 2 : 4);
            const ReturnWords rw = return_words(store, e.word, words_wanted);
            std::vector<Word> expect_words;
            Word expect_r0;
            if (kind == 1) {
                expect_r0 = Word();
                expect_words = {a_m, a_m1};
            } else {
                expect_r0 = a_m;
                expect_words = {a_m1, a_m1 + a_m + block_b(m + 1), a_m1,
                                block_b(m) + block_b(m - 1)};
            }
            expect_words.resize(words_wanted);
            if (rw.r0 != expect_r0) {
                c.fail({{"m", m}, {"field", "r0"}, {"expected", expect_r0.str()},
                        {"actual", rw.r0.str()}});
            }
            for (std::size_t p = 0; p < words_wanted; ++p) {
                if (rw.words[p] != expect_words[p]) {
                    c.fail({{"m", m},
                            {"p", p + 1},
                            {"expected", expect_words[p].str()},
                            {"actual", rw.words[p].str()}});
                }
            }
        }));

        out.push_back(run_check(cor_id, {{"m", m}}, [&](Check& c) {
            const std::size_t words_wanted = std::min<std::size_t>(count, kind == 1 ? 2 : 4);
            const ReturnWords rw = return_words(store, e.word, words_wanted);
            std::vector<std::pair<const char*, std::size_t>> expect;
            std::vector<std::size_t> actual;
            actual.push_back(rw.r0.size());
            if (kind == 1) {
                expect = {{"|r0|", 0}, {"|r1|", 2 * half}, {"|r2|", half}};
            } else {
                expect = {{"|r0|", 2 * half}, {"|r1|", half}, {"|r2|", 7 * half},
                          {"|r4|", 3 * half}};
            }
            if (words_wanted >= 1) actual.push_back(rw.words[0].size());
            if (words_wanted >= 2) actual.push_back(rw.words[1].size());
            if (kind == 2 && words_wanted >= 4) actual.push_back(rw.words[3].size());
            for (std::size_t i = 0; i < actual.size() && i < expect.size(); ++i) {
                if (actual[i] != expect[i].second) {
                    c.fail({{"m", m},
                            {"length", expect[i].first},
                            {"expected", expect[i].second},
                            {"actual", actual[i]}});
                }
            }
        }));
    }
    return out;
}

namespace {

std::vector<CheckResult> extension_checks(SequenceStore& store, const Word& factor,
                                          std::size_t count) {
    std::vector<CheckResult> out;
    out.push_back(run_check("thm-3.1", {{"factor", factor.str()}}, [&](Check& c) {
        const EnvelopeWord e = env(store, factor);
        const auto occ = find_occurrences(factor, e.word);
        if (occ.size() != 1) {
            c.fail({{"factor", factor.str()},
                    {"envelope", e.word.str()},
                    {"occurrences", positions_json(occ)}});
        }
    }));
    out.push_back(run_check("thm-3.7", {{"factor", factor.str()}, {"P", count}}, [&](Check& c) {
        const EnvelopeExtension ext = env_extension(store, factor);
        const auto occ_f = occurrences(store, factor, count).positions;
        const auto occ_e = occurrences(store, ext.envelope.word, count).positions;
        for (std::size_t p = 0; p < count; ++p) {
            if (occ_f[p] != occ_e[p] + ext.mu1.size()) {
                c.fail({{"factor", factor.str()},
                        {"p", p + 1},
                        {"factor_position", occ_f[p]},
                        {"envelope_position", occ_e[p]},
                        {"mu1_length", ext.mu1.size()}});
            }
        }
    }));
    return out;
}

std::vector<CheckResult> general_checks(SequenceStore& store, const Word& factor,
                                        std::size_t count) {
    std::vector<CheckResult> out;
    out.push_back(run_check("thm-4", {{"factor", factor.str()}, {"P", count}}, [&](Check& c) {
        const ReturnDecomposition scanned = decompose(store, factor, count);
        const ReturnDecomposition predicted = predicted_decomposition(store, factor, count);
        auto mismatch = [&](const char* field, const std::string& exp, const std::string& act) {
            c.fail({{"factor", factor.str()}, {"field", field}, {"predicted", exp},
                    {"scanned", act}});
        };
        if (scanned.r0 != predicted.r0) mismatch("r0", predicted.r0.str(), scanned.r0.str());
        if (scanned.coded != predicted.coded) {
            mismatch("coded", predicted.coded.str(), scanned.coded.str());
        }
        if (scanned.classification != predicted.classification) {
            mismatch("classification", to_string(predicted.classification),
                     to_string(scanned.classification));
        }
        for (std::size_t p = 0; p < count; ++p) {
            if (scanned.returns[p] != predicted.returns[p]) {
                c.fail({{"factor", factor.str()},
                        {"field", "returns"},
                        {"p", p + 1},
                        {"predicted", predicted.returns[p].str()},
                        {"scanned", scanned.returns[p].str()}});
            }
        }
        if (scanned.alphabet != predicted.alphabet ||
            scanned.alphabet_complete != predicted.alphabet_complete) {
            c.fail({{"factor", factor.str()}, {"field", "alphabet"}});
        }
        const auto scanned_positions = occurrences(store, factor, count).positions;
        const auto predicted_pos = predicted_positions(store, factor, count);
        if (scanned_positions != predicted_pos) {
            c.fail({{"factor", factor.str()},
                    {"field", "positions"},
                    {"predicted", positions_json(predicted_pos)},
                    {"scanned", positions_json(scanned_positions)}});
        }
        if (scanned.alphabet_complete) {
            std::set<Word> distinct(scanned.returns.begin(), scanned.returns.end());
            const std::size_t expected_count =
                scanned.classification == Classification::theta1 ? 2 : 3;
            if (distinct.size() != expected_count) {
                c.fail({{"factor", factor.str()},
                        {"field", "distinct_return_words"},
                        {"expected", expected_count},
                        {"actual", distinct.size()}});
            }
        }
    }));
    out.push_back(run_check("cor-c3.2", {{"factor", factor.str()}}, [&](Check& c) {
        const EnvelopeExtension ext = env_extension(store, factor);
        const std::size_t half = std::size_t{1} << (ext.envelope.order - 1);
        const std::size_t words_wanted =
            std::min<std::size_t>(count, ext.envelope.kind == 1 ? 2 : 4);
        const ReturnWords rw = return_words(store, factor, words_wanted);
        std::vector<std::pair<const char*, std::size_t>> expect;
        std::vector<std::size_t> actual;
        actual.push_back(rw.r0.size());
        if (ext.envelope.kind == 1) {
            expect = {{"|r0|", ext.mu1.size()}, {"|r1|", 2 * half}, {"|r2|", half}};
        } else {
            expect = {{"|r0|", 2 * half + ext.mu1.size()},
                      {"|r1|", half},
                      {"|r2|", 7 * half},
                      {"|r4|", 3 * half}};
        }
        if (words_wanted >= 1) actual.push_back(rw.words[0].size());
        if (words_wanted >= 2) actual.push_back(rw.words[1].size());
        if (ext.envelope.kind == 2 && words_wanted >= 4) actual.push_back(rw.words[3].size());
        for (std::size_t i = 0; i < actual.size() && i < expect.size(); ++i) {
            if (actual[i] != expect[i].second) {
                c.fail({{"factor", factor.str()},
                        {"length", expect[i].first},
                        {"expected", expect[i].second},
                        {"actual", actual[i]}});
            }
        }
    }));
    return out;
}

}  // namespace

std::vector<CheckResult> verify_extension(SequenceStore& store, std::size_t len_max,
                                          std::size_t count, unsigned jobs) {
    const auto factors = distinct_factors(store, len_max);
    return for_each_factor(factors, jobs,
                           [&](const Word& f) { return extension_checks(store, f, count); });
}

std::vector<CheckResult> verify_general(SequenceStore& store, std::size_t len_max,
                                        std::size_t count, unsigned jobs) {
    const auto factors = distinct_factors(store, len_max);
    return for_each_factor(factors, jobs,
                           [&](const Word& f) { return general_checks(store, f, count); });
}

namespace {

struct StructureBounds {
    int identity_max;
    int envelope_max;
    int prefix_palindrome_max;
    int palindrome_class_max;
    int occurrence_lemma_max;
    int context_max;
    int separator_max;
    std::size_t power_window;
    std::size_t stability_window;

    static StructureBounds from_m_max(int m_max) {
        StructureBounds b;
        b.identity_max = std::min(m_max + 8, 22);
        b.envelope_max = std::min(m_max + 6, 20);
        b.prefix_palindrome_max = std::min(m_max, 14);
        b.palindrome_class_max = std::min(m_max, 8);
        b.occurrence_lemma_max = std::min(m_max + 2, 16);
        b.context_max = std::min(m_max, 10);
        b.separator_max = std::min(m_max, 10);
        b.power_window = std::size_t{1} << std::min(m_max + 6, 18);
        b.stability_window = std::max<std::size_t>(4096, std::size_t{1} << std::min(m_max, 20));
        return b;
    }
};

// Independent regeneration of the D prefix, written without the store's
// append-only growth path.
std::string regenerate_d(std::size_t n) {
    std::string w = "a";
    while (w.size() < n) {
        std::string next;
        next.reserve(w.size() * 2);
        for (char c : w) next += (c == 'a') ? "ab" : "aa";
        w = std::move(next);
    }
    return w.substr(0, n);
}

void context_lemma_check(SequenceStore& store, Check& c, int m, const Word& pattern,
                         const Word& pre, const Word& post) {
    const std::size_t window = std::size_t{1} << 16;
    auto buf = store.d_buffer(window);
    std::string_view text = std::string_view(*buf).substr(0, window);
    std::size_t eligible = 0;
    std::size_t from = 0;
    for (;;) {
        const std::size_t hit = text.find(pattern.view(), from);
        if (hit == std::string_view::npos) break;
        from = hit + 1;
        const std::size_t q = hit + 1;  // 1-indexed
        if (q <= pre.size()) continue;
        if (q + pattern.size() - 1 + post.size() > text.size()) continue;
        ++eligible;
        const std::string_view before = text.substr(q - 1 - pre.size(), pre.size());
        const std::string_view after = text.substr(q - 1 + pattern.size(), post.size());
        if (before != pre.view() || after != post.view()) {
            c.fail({{"m", m},
                    {"position", q},
                    {"pattern", pattern.str()},
                    {"expected_before", pre.str()},
                    {"actual_before", std::string(before)},
                    {"expected_after", post.str()},
                    {"actual_after", std::string(after)}});
        }
    }
    if (eligible == 0) {
        c.fail({{"m", m}, {"pattern", pattern.str()}, {"error", "no eligible occurrence"}});
    }
}

}  // namespace

std::vector<CheckResult> verify_structure(SequenceStore& store, int m_max) {
    if (m_max < 1) throw InvalidInputError("m_max must be >= 1");
    if (m_max > 22) throw CapExceededError("structure suite supports m_max <= 22");
    const StructureBounds bounds = StructureBounds::from_m_max(m_max);
    std::vector<CheckResult> out;

    for (int m = 0; m <= bounds.identity_max; ++m) {
        out.push_back(run_check("sec1-identities", {{"m", m}}, [&](Check& c) {
            const Word a = block_a(m);
            const Word b = block_b(m);
            if (m >= 1 && strip_last(a) != strip_last(b)) {
                c.fail({{"m", m}, {"identity", "A_m delta^-1 = B_m delta^-1"}});
            }
            if (m < bounds.identity_max) {
                if (block_a(m + 1) != a + b) {
                    c.fail({{"m", m}, {"identity", "A_{m+1} = A_m B_m"}});
                }
                if (block_b(m + 1) != a + a) {
                    c.fail({{"m", m}, {"identity", "B_{m+1} = A_m A_m"}});
                }
            }
            Word product = Word("a");
            for (int j = 0; j < m; ++j) product += block_b(j);
            if (product != a) {
                c.fail({{"m", m}, {"identity", "A_m = a B_0 ... B_{m-1}"}});
            }
            if (a.at(a.size()) != delta(m)) {
                c.fail({{"m", m}, {"identity", "delta_m is the last letter of A_m"}});
            }
            if (b.at(b.size()) != delta(m + 1)) {
                c.fail({{"m", m}, {"identity", "delta_{m+1} is the last letter of B_m"}});
            }
        }));
    }

    out.push_back(run_check("fixed-point",
                            {{"exhaustive_to", 4096}, {"strided_to", 32768}, {"stride", 811}},
                            [&](Check& c) {
                                auto check_n = [&](std::size_t n) {
                                    const Word image = Morphism::sigma()(store.d_prefix(n));
                                    if (image != store.d_prefix(2 * n)) {
                                        c.fail({{"n", n}});
                                    }
                                };
                                for (std::size_t n = 0; n <= 4096; ++n) check_n(n);
                                for (std::size_t n = 4096 + 811; n <= 32768; n += 811) check_n(n);
                            }));

    out.push_back(run_check(
        "power-avoidance",
        {{"d_window", bounds.power_window}, {"theta1_window", bounds.power_window / 2}},
        [&](Check& c) {
            auto has_quad = [](std::string_view text, const char* quad) {
                return text.find(quad) != std::string_view::npos;
            };
            auto d = store.d_buffer(bounds.power_window);
            std::string_view dv = std::string_view(*d).substr(0, bounds.power_window);
            if (has_quad(dv, "aaaa") || has_quad(dv, "bbbb")) {
                c.fail({{"sequence", "D"}, {"error", "single-letter 4th power found"}});
            }
            auto t = store.theta_buffer(1, bounds.power_window / 2);
            std::string_view tv = std::string_view(*t).substr(0, bounds.power_window / 2);
            if (has_quad(tv, "aaaa") || has_quad(tv, "bbbb")) {
                c.fail({{"sequence", "Theta1"}, {"error", "single-letter 4th power found"}});
            }
        }));

    out.push_back(run_check("cache-stability", {{"window", bounds.stability_window}},
                            [&](Check& c) {
                                const std::size_t w = bounds.stability_window;
                                const Word cached = store.d_prefix(w);
                                const std::string fresh = regenerate_d(w);
                                if (cached.str() != fresh) {
                                    std::size_t at = 0;
                                    while (at < w && cached.str()[at] == fresh[at]) ++at;
                                    c.fail({{"window", w}, {"first_mismatch", at + 1}});
                                }
                                const Word half = store.d_prefix(w / 2);
                                if (!is_prefix(half, cached)) {
                                    c.fail({{"window", w},
                                            {"error", "prefix of half length diverges"}});
                                }
                                const Word theta1 = store.theta_prefix(1, w / 2);
                                const Word from_d = Morphism::tau1()(cached);
                                if (theta1 != from_d.slice(1, w / 2)) {
                                    c.fail({{"window", w},
                                            {"error", "Theta1 cache diverges from tau1(D)"}});
                                }
                            }));

    for (int m = 1; m <= bounds.envelope_max; ++m) {
        out.push_back(run_check("prop-3.1", {{"m", m}}, [&](Check& c) {
            const Word e1 = envelope_word(1, m).word;
            const Word d_m = Word(delta(m));
            if (envelope_word(1, m + 1).word != e1 + d_m + e1) {
                c.fail({{"m", m}, {"identity", "E_{1,m+1} = E_{1,m} d E_{1,m}"}});
            }
            if (envelope_word(2, m + 1).word != e1 + d_m + e1 + d_m + e1) {
                c.fail({{"m", m}, {"identity", "E_{2,m+1} = E_{1,m} d E_{1,m} d E_{1,m}"}});
            }
        }));
    }

    for (int m = 1; m <= bounds.envelope_max; ++m) {
        out.push_back(run_check("cor-3.1", {{"m", m}}, [&](Check& c) {
            for (int kind : {1, 2}) {
                if (!is_palindrome(envelope_word(kind, m).word)) {
                    c.fail({{"kind", kind}, {"m", m}});
                }
            }
        }));
    }

    for (int m = 2; m <= bounds.envelope_max; ++m) {
        out.push_back(run_check("lem-3.2", {{"m", m}}, [&](Check& c) {
            const Word e = envelope_word(1, m).word;
            if (e.at(1) != Letter::a || e.at(2) != Letter::b || e.at(e.size()) != Letter::a) {
                c.fail({{"m", m}, {"word_prefix", e.slice(1, 2).str()}});
            }
        }));
    }

    for (int m = 1; m <= bounds.prefix_palindrome_max; ++m) {
        out.push_back(run_check("prop-3.4", {{"m", m}}, [&](Check& c) {
            const Word e = envelope_word(1, m).word;
            std::set<std::string> expected;
            for (int n = 1; n <= m; ++n) expected.insert(envelope_word(1, n).word.str());
            std::set<std::string> prefixes, suffixes;
            for (std::size_t len = 1; len <= e.size(); ++len) {
                const Word p = e.slice(1, len);
                if (is_palindrome(p)) prefixes.insert(p.str());
                const Word s = e.slice(e.size() - len + 1, e.size());
                if (is_palindrome(s)) suffixes.insert(s.str());
            }
            if (prefixes != expected) {
                c.fail({{"m", m}, {"side", "prefix"},
                        {"count_expected", expected.size()},
                        {"count_actual", prefixes.size()}});
            }
            if (suffixes != expected) {
                c.fail({{"m", m}, {"side", "suffix"},
                        {"count_expected", expected.size()},
                        {"count_actual", suffixes.size()}});
            }
        }));
    }

    for (int m = 1; m <= bounds.prefix_palindrome_max; ++m) {
        out.push_back(run_check("prop-3.5", {{"m", m}}, [&](Check& c) {
            const Word e = envelope_word(2, m).word;
            std::set<std::string> allowed;
            for (int n = 1; n <= m; ++n) allowed.insert(envelope_word(1, n).word.str());
            for (std::size_t len = 1; len < e.size(); ++len) {
                const Word p = e.slice(1, len);
                if (is_palindrome(p) && !allowed.contains(p.str())) {
                    c.fail({{"m", m}, {"side", "prefix"}, {"palindrome", p.str()}});
                }
                const Word s = e.slice(e.size() - len + 1, e.size());
                if (is_palindrome(s) && !allowed.contains(s.str())) {
                    c.fail({{"m", m}, {"side", "suffix"}, {"palindrome", s.str()}});
                }
            }
        }));
    }

    out.push_back(run_check("lem-l1.3", {{"max_order", bounds.palindrome_class_max}},
                            [&](Check& c) {
                                const int top = bounds.palindrome_class_max;
                                for (int n = 1; n <= top; ++n) {
                                    for (int k = 1; k <= top; ++k) {
                                        for (int m = 1; m <= top; ++m) {
                                            const Word w = envelope_word(1, n).word +
                                                           Word(delta(m)) +
                                                           envelope_word(1, k).word;
                                            const bool expected =
                                                n == k ||
                                                (std::abs(n - k) == 1 &&
                                                 (m - std::min(n, k)) % 2 == 0);
                                            if (is_palindrome(w) != expected) {
                                                c.fail({{"n", n}, {"k", k}, {"m", m},
                                                        {"expected_palindrome", expected}});
                                            }
                                        }
                                    }
                                }
                            }));

    out.push_back(run_check("lem-l1.4", {{"max_order", bounds.palindrome_class_max}},
                            [&](Check& c) {
                                const int top = bounds.palindrome_class_max;
                                for (int m = 2; m <= top; ++m) {
                                    const Word mid =
                                        Word(delta(m)) + envelope_word(1, m).word + Word(delta(m));
                                    for (int n = 1; n < m; ++n) {
                                        for (int k = 1; k < m; ++k) {
                                            const Word w = envelope_word(1, n).word + mid +
                                                           envelope_word(1, k).word;
                                            if (is_palindrome(w) != (n == k)) {
                                                c.fail({{"n", n}, {"k", k}, {"m", m},
                                                        {"expected_palindrome", n == k}});
                                            }
                                        }
                                    }
                                }
                            }));

    for (int m = 0; m <= bounds.occurrence_lemma_max; ++m) {
        out.push_back(run_check("lem-2.1", {{"m", m}}, [&](Check& c) {
            const Word a = block_a(m);
            const Word b = block_b(m);
            const std::size_t len = a.size();
            const std::vector<std::size_t> twice = {1, len + 1};
            if (find_occurrences(a, a + a) != twice) {
                c.fail({{"m", m}, {"text", "A_m A_m"}});
            }
            const std::vector<std::size_t> outer = {1, 2 * len + 1};
            if (find_occurrences(a, a + b + a) != outer) {
                c.fail({{"m", m}, {"text", "A_m B_m A_m"}});
            }
        }));
    }

    for (int m = 0; m <= bounds.occurrence_lemma_max; ++m) {
        out.push_back(run_check("lem-2.3", {{"m", m}}, [&](Check& c) {
            const Word a = block_a(m);
            const Word b = block_b(m);
            const std::size_t len = b.size();
            if (find_occurrences(b, a + b) != std::vector<std::size_t>{len + 1}) {
                c.fail({{"m", m}, {"text", "A_m B_m"}});
            }
            if (m >= 1) {
                const std::vector<std::size_t> in_bab = {1, len / 2 + 1, 2 * len + 1};
                if (find_occurrences(b, b + a + b) != in_bab) {
                    c.fail({{"m", m}, {"text", "B_m A_m B_m"}});
                }
                const std::vector<std::size_t> in_baaab = {1, len / 2 + 1, 4 * len + 1};
                if (find_occurrences(b, b + a + a + a + b) != in_baaab) {
                    c.fail({{"m", m}, {"text", "B_m A_m A_m A_m B_m"}});
                }
            }
        }));
    }

    for (int m = 3; m <= bounds.context_max; ++m) {
        out.push_back(run_check("lem-3.4", {{"m", m}, {"window", 1 << 16}}, [&](Check& c) {
            const Word e2 = envelope_word(1, m - 2).word;
            const Word pattern = Word(delta(m)) + e2 + Word(delta(m - 1));
            context_lemma_check(store, c, m, pattern, e2, envelope_word(1, m - 1).word);
        }));
    }

    for (int m = 4; m <= bounds.context_max; ++m) {
        out.push_back(run_check("lem-3.5", {{"m", m}, {"window", 1 << 16}}, [&](Check& c) {
            const Word e2 = envelope_word(1, m - 2).word;
            const Word e3 = envelope_word(1, m - 3).word;
            const Word pattern = Word(delta(m - 1)) + e2 + Word(delta(m - 1));
            const Word pre = e2 + Word(delta(m)) + e3;
            const Word post = e3 + Word(delta(m)) + e2;
            if (pre != strip_last(block_a(m - 2) + block_a(m - 3))) {
                c.fail({{"m", m}, {"identity", "pre = A_{m-2} A_{m-3} d^{-1}"}});
            }
            if (post != strip_last(block_b(m - 3) + block_a(m - 2))) {
                c.fail({{"m", m}, {"identity", "post = B_{m-3} A_{m-2} d^{-1}"}});
            }
            context_lemma_check(store, c, m, pattern, pre, post);
        }));
    }

    for (int m = 3; m <= bounds.context_max; ++m) {
        out.push_back(run_check("lem-3.6", {{"m", m}, {"window", 1 << 16}}, [&](Check& c) {
            const Word e2 = envelope_word(1, m - 2).word;
            const Word pattern = Word(delta(m - 1)) + e2 + Word(delta(m));
            context_lemma_check(store, c, m, pattern, envelope_word(1, m - 1).word, e2);
        }));
    }

    for (int m = 2; m <= bounds.context_max; ++m) {
        out.push_back(run_check("lem-3.7", {{"m", m}, {"window", 1 << 16}}, [&](Check& c) {
            const Word e1 = envelope_word(1, m - 1).word;
            const Word pattern = Word(delta(m - 1)) + e1 + Word(delta(m - 1));
            context_lemma_check(store, c, m, pattern, e1, e1);
        }));
    }

    for (int kind : {1, 2}) {
        const char* id = kind == 1 ? "prop-3.2" : "prop-3.3";
        for (int m = 2; m <= bounds.separator_max; ++m) {
            out.push_back(run_check(id, {{"m", m}}, [&, kind, m](Check& c) {
                for (int n = 1; n < m; ++n) {
                    const Word sep = separator_word(kind, m, n);
                    const Word inner = envelope_word(kind, m - n).word;
                    const Word expected = n % 2 == 0 ? inner : complement(inner);
                    if (sep != expected) {
                        c.fail({{"kind", kind}, {"m", m}, {"n", n},
                                {"expected", expected.str()}, {"actual", sep.str()}});
                    }
                    const Word base = envelope_word(1, n).word;
                    Word rebuilt = base;
                    for (std::size_t i = 1; i <= sep.size(); ++i) {
                        rebuilt += Word(sep.at(i));
                        rebuilt += base;
                    }
                    if (rebuilt != envelope_word(kind, m).word) {
                        c.fail({{"kind", kind}, {"m", m}, {"n", n},
                                {"error", "interleaving does not rebuild the envelope word"}});
                    }
                }
            }));
        }
    }

    return out;
}

VerificationReport sweep(SequenceStore& store, const VerifyConfig& cfg) {
    if (cfg.len_max < 1 || cfg.count < 1 || cfg.m_max < 1) {
        throw InvalidInputError("sweep bounds must be positive");
    }
    VerificationReport report;
    report.config = cfg;
    auto append = [&](std::vector<CheckResult> results) {
        for (auto& r : results) report.results.push_back(std::move(r));
    };
    append(verify_theorem_envelope(store, 1, cfg.m_max, cfg.count));
    append(verify_theorem_envelope(store, 2, cfg.m_max, cfg.count));
    const auto factors = distinct_factors(store, cfg.len_max);
    append(for_each_factor(factors, cfg.jobs, [&](const Word& f) {
        return extension_checks(store, f, cfg.count);
    }));
    append(for_each_factor(factors, cfg.jobs, [&](const Word& f) {
        return general_checks(store, f, cfg.count);
    }));
    append(verify_structure(store, cfg.m_max));
    for (const auto& r : report.results) {
        if (r.pass) {
            ++report.passed;
        } else {
            ++report.failed;
        }
    }
    return report;
}

nlohmann::ordered_json check_to_json(const CheckResult& r) {
    return {{"check_id", r.check_id},
            {"params", r.params},
            {"status", r.pass ? "pass" : "fail"},
            {"counterexample", r.pass ? nlohmann::ordered_json() : r.counterexample}};
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& r : report.results) results.push_back(check_to_json(r));
    // jobs is an execution detail: reports must be byte-identical across
    // worker counts, so it is not serialized.
    return {{"config",
             {{"len_max", report.config.len_max},
              {"count", report.config.count},
              {"m_max", report.config.m_max}}},
            {"results", std::move(results)},
            {"totals", {{"pass", report.passed}, {"fail", report.failed}}}};
}

}  // namespace pdwords
