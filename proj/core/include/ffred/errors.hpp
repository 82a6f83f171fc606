#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffred {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An exact division left a nonzero remainder (or had a zero divisor).
// This never happens on well-formed inputs: every division performed by the
// reduction divides a value that is provably a multiple of the divisor.
// Hitting it means the input violated a precondition or there is a bug.
class InexactDivision : public Error {
public:
    InexactDivision(const std::string& what, std::string remainder_text)
        : Error(what), remainder(std::move(remainder_text)) {}
    std::string remainder;  // formatted remainder, for diagnostics
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Raised by operations that require a specific matrix shape (square input,
// more columns than rows, ...).
class ShapeError : public Error {
public:
    using Error::Error;
};

// Argument outside the documented domain of a function (size not a power of
// two for a closed-form predictor, oversized input for a factorial-cost
// oracle, unknown enum value, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

// Where and why a reduction failed because a leading corner minor vanished.
// failing_order is k such that the k-by-k leading minor of the (possibly
// permuted) matrix is zero.  When a row permutation was attempted first, the
// permutation and its sign are recorded too.
struct SingularReport {
    std::size_t failing_order = 0;
    std::optional<std::vector<std::size_t>> permutation;
    int sign = 1;
};

class SingularMinor : public Error {
public:
    SingularMinor(const std::string& what, SingularReport rep)
        : Error(what), report(std::move(rep)) {}
    SingularReport report;
};

// The leading n-by-n block is rank deficient: no row order can make all
// corner minors nonzero.
class StructurallySingular : public Error {
public:
    using Error::Error;
};

// Malformed text input; position is a byte offset into the parsed text (or a
// line number for file-level parsers, see the message).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what), position(pos) {}
    std::size_t position = 0;
};

}  // namespace ffred
