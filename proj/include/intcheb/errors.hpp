#ifndef INTCHEB_ERRORS_HPP
#define INTCHEB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace intcheb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A requested tolerance cannot be met at the working precision.
class PrecisionError : public Error {
public:
  using Error::Error;
};

/// The compact contains an integer point, so a non-integer constant cannot be approximated.
class InfeasibleError : public Error {
public:
  using Error::Error;
};

/// Input does not satisfy a normalization the operation relies on.
class ProtocolError : public Error {
public:
  using Error::Error;
};

/// Case deliberately outside what the constructions support.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// Certified nonexistence (e.g. no unit polynomial on a long interval).
class NonexistenceError : public Error {
public:
  using Error::Error;
};

/// Bounded search finished without a hit; says nothing about existence.
class NotFoundError : public Error {
public:
  using Error::Error;
};

/// Input is degenerate for the requested quantity (e.g. division by f(0) = 0).
class DegenerateError : public Error {
public:
  using Error::Error;
};

/// Oracle refused to run (degree cap) or detected an inconsistent search box.
class OracleError : public Error {
public:
  using Error::Error;
};

} // namespace intcheb

#endif // INTCHEB_ERRORS_HPP
