// pdw: command-line front end for the period-doubling word toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pdwords/envelope.hpp"
#include "pdwords/returns.hpp"
#include "pdwords/sequence.hpp"
#include "pdwords/verify.hpp"
#include "pdwords/word.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pdwords;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidInput = 2;

struct GlobalOptions {
    std::uint64_t max_len = kDefaultMaxSequenceLength;
    std::uint64_t max_count = std::uint64_t{1} << 20;
};

void require_count_cap(std::uint64_t count, const GlobalOptions& g) {
    if (count > g.max_count) {
        throw InvalidInputError("count " + std::to_string(count) + " exceeds --max-count " +
                                std::to_string(g.max_count));
    }
}

int cmd_generate(const GlobalOptions& g, const std::string& source, std::uint64_t length,
                 const std::string& format) {
    SequenceStore store(g.max_len);
    Word word;
    if (source == "D") {
        word = store.d_prefix(length);
    } else if (source == "Theta1") {
        word = store.theta_prefix(1, length);
    } else if (source == "Theta2") {
        word = store.theta_prefix(2, length);
    } else {
        throw InvalidInputError("unknown sequence \"" + source +
                                "\": expected D, Theta1 or Theta2");
    }
    if (format == "json") {
        ordered_json j{{"source", source}, {"length", length}, {"word", word.str()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << word << "\n";
    }
    return kExitOk;
}

ordered_json envelope_json(const EnvelopeExtension& ext) {
    return {{"kind", ext.envelope.kind},
            {"m", ext.envelope.order},
            {"word", ext.envelope.word.str()},
            {"mu1", ext.mu1.str()},
            {"mu2", ext.mu2.str()}};
}

int cmd_envelope(const GlobalOptions& g, const std::string& factor, const std::string& format) {
    SequenceStore store(g.max_len);
    const EnvelopeExtension ext = env_extension(store, Word::parse(factor));
    if (format == "json") {
        std::cout << envelope_json(ext).dump() << "\n";
    } else {
        std::cout << "envelope: kind " << ext.envelope.kind << ", order " << ext.envelope.order
                  << "\n"
                  << "word: " << ext.envelope.word << "\n"
                  << "mu1: " << ext.mu1 << "\n"
                  << "mu2: " << ext.mu2 << "\n";
    }
    return kExitOk;
}

int cmd_returns(const GlobalOptions& g, const std::string& factor, std::uint64_t count,
                const std::string& format) {
    require_count_cap(count, g);
    SequenceStore store(g.max_len);
    const Word w = Word::parse(factor);
    const ReturnDecomposition dec = decompose(store, w, count);
    const EnvelopeWord e = env(store, w);
    const auto occ = occurrences(store, w, count);

    if (format == "json") {
        ordered_json returns = ordered_json::array();
        for (const auto& r : dec.returns) returns.push_back(r.str());
        ordered_json positions = ordered_json::array();
        for (auto p : occ.positions) positions.push_back(p);
        ordered_json j{{"factor", dec.factor.str()},
                       {"env", {{"kind", e.kind}, {"m", e.order}}},
                       {"r0", dec.r0.str()},
                       {"returns", returns},
                       {"coded", dec.coded.str()},
                       {"classification", to_string(dec.classification)},
                       {"positions", positions}};
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "position,return_word,code_letter\n";
        for (std::size_t p = 0; p < count; ++p) {
            std::cout << occ.positions[p] << "," << dec.returns[p] << ","
                      << to_char(dec.coded.at(p + 1)) << "\n";
        }
    } else {
        std::cout << "factor: " << dec.factor << "\n"
                  << "envelope: E_" << e.kind << "," << e.order << " = " << e.word << "\n"
                  << "classification: " << to_string(dec.classification) << "\n"
                  << "r0: " << dec.r0 << "\n"
                  << "coded: " << dec.coded << "\n";
        for (std::size_t p = 0; p < count; ++p) {
            std::cout << "r" << (p + 1) << " @ " << occ.positions[p] << ": " << dec.returns[p]
                      << "\n";
        }
    }
    return kExitOk;
}

int cmd_occurrences(const GlobalOptions& g, const std::string& factor, std::uint64_t count,
                    const std::string& format) {
    require_count_cap(count, g);
    SequenceStore store(g.max_len);
    const auto occ = occurrences(store, Word::parse(factor), count);
    if (format == "json") {
        ordered_json positions = ordered_json::array();
        for (auto p : occ.positions) positions.push_back(p);
        ordered_json j{{"factor", occ.factor.str()}, {"positions", positions}};
        std::cout << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < occ.positions.size(); ++i) {
            std::cout << (i ? " " : "") << occ.positions[i];
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const VerifyConfig& cfg, const std::string& format,
               bool verbose) {
    require_count_cap(cfg.count, g);
    SequenceStore store(g.max_len);
    const VerificationReport report = sweep(store, cfg);
    if (format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        for (const auto& r : report.results) {
            if (!r.pass) {
                std::cout << "FAIL " << r.check_id << " " << r.params.dump()
                          << " counterexample=" << r.counterexample.dump() << "\n";
            } else if (verbose) {
                std::cout << "pass " << r.check_id << " " << r.params.dump() << "\n";
            }
        }
        std::cout << report.passed << " passed, " << report.failed << " failed\n";
    }
    return report.failed == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"period-doubling sequence, envelope words and return words"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--max-len", global.max_len, "cap on cached sequence length")
        ->capture_default_str();
    app.add_option("--max-count", global.max_count, "cap on occurrence counts")
        ->capture_default_str();

    std::string format = "text";
    std::string factor;
    std::string source = "D";
    std::uint64_t length = 64;
    std::uint64_t count = 8;
    bool verbose = false;
    VerifyConfig vcfg;
    vcfg.jobs = std::max(1u, std::thread::hardware_concurrency());

    auto* generate = app.add_subcommand("generate", "print a prefix of D, Theta1 or Theta2");
    generate->add_option("--word", source, "sequence name: D, Theta1 or Theta2")
        ->capture_default_str();
    generate->add_option("--length", length, "prefix length")->capture_default_str();
    generate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* envelope = app.add_subcommand("envelope", "envelope word and extension of a factor");
    envelope->add_option("--factor", factor, "factor over {a,b}")->required();
    envelope->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* returns = app.add_subcommand("returns", "return-word decomposition of a factor");
    returns->add_option("--factor", factor, "factor over {a,b}")->required();
    returns->add_option("--count", count, "number of return words")->capture_default_str();
    returns->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* occ = app.add_subcommand("occurrences", "occurrence positions of a factor");
    occ->add_option("--factor", factor, "factor over {a,b}")->required();
    occ->add_option("--count", count, "number of occurrences")->capture_default_str();
    occ->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--len-max", vcfg.len_max, "max factor length")->capture_default_str();
    verify->add_option("--count", vcfg.count, "occurrences per factor")->capture_default_str();
    verify->add_option("--m-max", vcfg.m_max, "max envelope order")->capture_default_str();
    verify->add_option("--jobs", vcfg.jobs, "worker threads")->capture_default_str();
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--verbose", verbose, "also print passing checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (generate->parsed()) return cmd_generate(global, source, length, format);
        if (envelope->parsed()) return cmd_envelope(global, factor, format);
        if (returns->parsed()) return cmd_returns(global, factor, count, format);
        if (occ->parsed()) return cmd_occurrences(global, factor, count, format);
        if (verify->parsed()) return cmd_verify(global, vcfg, format, verbose);
    } catch (const ClassificationMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const InternalCheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
