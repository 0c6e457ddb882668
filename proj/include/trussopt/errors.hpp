#pragma once

#include <stdexcept>
#include <string>

namespace trussopt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The reduced stiffness matrix is singular: the structure is a mechanism.
class SingularStructure : public Error {
public:
    using Error::Error;
};

/// Two nodes of an element coincide.
class ZeroLengthElement : public Error {
public:
    using Error::Error;
};

/// A buckling limit was requested for a group without a buckling constant.
class BucklingNotEnabled : public Error {
public:
    using Error::Error;
};

class NonPositiveTemperature : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed model document. `location()` is a JSON pointer to the offending
/// field, or "line L, column C" for syntax errors.
class ParseError : public Error {
public:
    ParseError(std::string location, const std::string& what)
        : Error(location + ": " + what), location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

}  // namespace trussopt
