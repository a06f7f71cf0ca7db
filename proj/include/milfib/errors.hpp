#pragma once

#include <stdexcept>
#include <string>

namespace milfib {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix shape mismatch (concatenation, multiplication, ambient rank, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Invalid argument value (non-prime modulus, bad sign entry, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// An operation needs an optional datum that the diagram does not carry.
class DataMissingError : public Error {
public:
    using Error::Error;
};

/// Two sources of information contradict each other (e.g. a lower bound
/// exceeding an upper bound). The message quotes both sources.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// A diagram file failed schema parsing; message carries field context.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A set of special points fails to cover every branch.
class CoverageError : public Error {
public:
    using Error::Error;
};

}  // namespace milfib
