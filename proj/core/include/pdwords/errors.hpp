#pragma once

#include <stdexcept>
#include <string>

namespace pdwords {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: letters outside {a,b,c}, empty patterns where a nonempty
// word is required, invalid orders, a morphism applied to a letter without
// an image, and similar precondition violations.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// The queried word does not occur in the period-doubling sequence.
class NotAFactorError : public Error {
public:
    using Error::Error;
};

// A request would grow a sequence or block past its configured cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

// A scanned return-word sequence disagrees with its predicted coding.
// Carries both sides so callers can record a re-checkable counterexample.
class ClassificationMismatchError : public Error {
public:
    ClassificationMismatchError(const std::string& message, std::string factor,
                                std::string expected, std::string actual)
        : Error(message),
          factor_(std::move(factor)),
          expected_(std::move(expected)),
          actual_(std::move(actual)) {}

    const std::string& factor() const noexcept { return factor_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& actual() const noexcept { return actual_; }

private:
    std::string factor_;
    std::string expected_;
    std::string actual_;
};

// An internal consistency condition failed, e.g. a factor occurred more than
// once in its envelope or an envelope scan did not terminate within its
// bound. These conditions cannot arise unless the underlying combinatorics
// (or this implementation) is wrong.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

}  // namespace pdwords
