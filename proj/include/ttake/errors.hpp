#pragma once

#include <stdexcept>
#include <string>

namespace ttake {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the admissible system or group parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Prime search exhausted its attempt budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Plaintext integer outside [1, q].
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Value is not a member of the order-q subgroup.
class EncodingError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Brute-force search refused because the group is too large.
class RefusalError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public Error {
 public:
  using Error::Error;
};

class InconsistentSystemError : public Error {
 public:
  using Error::Error;
};

/// Period index outside [1, T].
class PeriodError : public Error {
 public:
  using Error::Error;
};

/// Keys combined out of order or across users/periods.
class SequencingError : public Error {
 public:
  using Error::Error;
};

/// Malformed pirate decoder contents.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Exposure bounds cannot accommodate the request.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The discrete-log reduction could not complete (forger misbehaved).
class ReductionFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ttake
