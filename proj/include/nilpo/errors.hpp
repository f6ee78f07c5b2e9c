#pragma once

#include <stdexcept>
#include <string>

namespace nilpo {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied inconsistent or out-of-range input.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotASubspace : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotNilpotent : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class FormNotClosed : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotAnAutomorphism : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// An internal consistency check failed; always indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

class DecompositionMismatch : public InternalError {
public:
    using InternalError::InternalError;
};

class InternalExpansionFailure : public InternalError {
public:
    using InternalError::InternalError;
};

} // namespace nilpo
