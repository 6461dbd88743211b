#pragma once

#include <stdexcept>
#include <string>

namespace polykernel {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised on precondition violations (bad parameters, mismatched dimensions).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The point set does not determine a unique interpolant.
class NotUnisolvent : public Error {
public:
    using Error::Error;
};

/// The symmetric factorization of the kernel matrix broke down.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// No candidate raised the rank within the candidate budget.
class CompletionFailed : public Error {
public:
    using Error::Error;
};

class UnsupportedFamily : public Error {
public:
    using Error::Error;
};

} // namespace polykernel
