#ifndef CLBL_ERRORS_HPP
#define CLBL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clbl {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes do not conform to an operation's rules.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Input values lie outside an operation's documented domain
/// (log below 1e-12, division by a near-zero value, exp overflow).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An API precondition was violated (non-scalar backward root,
/// out-of-range class index, mismatched argument lengths).
class ContractError : public Error {
public:
    using Error::Error;
};

/// A configuration value is invalid or inconsistent.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// An iterative routine failed to converge or produced non-finite values.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A file could not be parsed; message carries the byte offset when known.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure (unreadable input, unwritable output directory).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace clbl

#endif
