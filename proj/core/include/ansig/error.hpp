#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ansig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class InvalidPermutation : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// No even permutation conjugates one element onto the other: the
/// S_n class splits in A_n and the two elements lie in different halves.
class ClassSplit : public Error {
public:
    using Error::Error;
};

/// A constructive routine could not produce its object within budget.
class ConstructionFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("at position " + std::to_string(position) + ": " + what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace ansig
