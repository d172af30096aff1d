#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieaut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two subspaces (or a subspace and a vector) live in different ambient spaces.
class AmbientMismatch : public Error {
public:
    using Error::Error;
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

class NotNilpotent : public Error {
public:
    using Error::Error;
};

/// A parametrization still carries unsolved equations where a fully solved one is required.
class ResidualSystem : public Error {
public:
    using Error::Error;
};

/// A bracket of two fields falls outside the span of the given fields.
class NotClosed : public Error {
public:
    NotClosed(std::string left, std::string right, std::string bracket)
        : Error("bracket [" + left + ", " + right + "] = " + bracket + " is not in the span"),
          left_(std::move(left)), right_(std::move(right)), bracket_(std::move(bracket)) {}

    const std::string& left() const noexcept { return left_; }
    const std::string& right() const noexcept { return right_; }
    const std::string& bracket() const noexcept { return bracket_; }

private:
    std::string left_, right_, bracket_;
};

/// The given fields are linearly dependent; `witness` is a nontrivial relation.
class LinearlyDependent : public Error {
public:
    explicit LinearlyDependent(std::string witness)
        : Error("fields are linearly dependent: " + witness + " = 0"), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

/// Syntax error in a textual input; `position` is a 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Structurally valid input that violates a file-format rule.
class LoadError : public Error {
public:
    using Error::Error;
};

}  // namespace lieaut
