#pragma once

#include <stdexcept>
#include <string>

namespace ncprob {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on alphabet size, degree cap or matrix dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A size parameter is outside the supported range.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Fock data is too shallow for the requested degree.
class DepthError : public Error {
public:
    using Error::Error;
};

/// A scalar argument is outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    using Error::Error;
};

/// Substitution argument with a nonzero constant term.
class SubstitutionError : public Error {
public:
    using Error::Error;
};

/// Compositional inversion requested for a tuple whose linear part is not the identity.
class UnsupportedLinearPartError : public Error {
public:
    using Error::Error;
};

/// The input is well formed but violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed text or document input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ncprob
