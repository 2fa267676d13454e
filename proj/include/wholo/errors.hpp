#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace wholo {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// The modulus divides a denominator: the value is not p-integral.
class DenominatorNotInvertible : public Error {
public:
    explicit DenominatorNotInvertible(const std::string& what,
                                      std::optional<long> exponent = std::nullopt)
        : Error(what), exponent_(exponent) {}

    /// Exponent of the offending series coefficient, when known.
    std::optional<long> exponent() const { return exponent_; }

private:
    std::optional<long> exponent_;
};

/// Inversion of a series that is zero to its known precision.
class ZeroLeadingCoefficient : public Error {
public:
    using Error::Error;
};

/// A coefficient beyond the certified precision window was requested.
class OutOfPrecision : public Error {
public:
    OutOfPrecision(const std::string& what, long exponent)
        : Error(what), exponent_(exponent) {}

    long exponent() const { return exponent_; }

private:
    long exponent_;
};

/// Input series is not in the claimed space (greedy elimination left a nonzero remainder).
class NotInSpan : public Error {
public:
    using Error::Error;
};

class WeightMismatch : public Error {
public:
    using Error::Error;
};

class PoleTooDeep : public Error {
public:
    using Error::Error;
};

/// A weight-2 certificate found a nonzero constant term; indicates a bug, not bad input.
class ConstantTermNonzero : public Error {
public:
    ConstantTermNonzero(const std::string& what, std::string constant)
        : Error(what), constant_(std::move(constant)) {}

    const std::string& constant_term() const { return constant_; }

private:
    std::string constant_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset, std::string expected)
        : Error(what), offset_(offset), expected_(std::move(expected)) {}

    /// 1-based byte offset into the source text.
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

class UnknownGenerator : public Error {
public:
    UnknownGenerator(const std::string& what, std::size_t offset)
        : Error(what), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace wholo
