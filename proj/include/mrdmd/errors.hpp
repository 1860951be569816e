#pragma once

#include <stdexcept>
#include <string>

namespace mrdmd {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input data violates a precondition (non-finite entries, bad shapes).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A parameter is out of its documented range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An iterative numerical procedure failed to converge or hit a
/// degenerate configuration (e.g. a retained zero singular value).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Snapshot window has too few columns for the requested operation.
class WindowTooSmallError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

/// A (level, bin, mode) lookup addressed a node or index that does not exist.
class NodeLookupError : public Error {
public:
    using Error::Error;
};

/// Base class for file-format errors.
class IoError : public Error {
public:
    using Error::Error;
};

class BadMagicError : public IoError {
public:
    using IoError::IoError;
};

class VersionMismatchError : public IoError {
public:
    using IoError::IoError;
};

class TruncatedPayloadError : public IoError {
public:
    using IoError::IoError;
};

class ParseError : public IoError {
public:
    using IoError::IoError;
};

}  // namespace mrdmd
