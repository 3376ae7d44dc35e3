#pragma once

#include <stdexcept>
#include <string>

namespace affsl2 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied indices outside the operation's domain.
class BadRange : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

/// Brute-force routine refused an input above its cost guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Errors that indicate an internal inconsistency rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// An exact quotient was requested but none exists.
class NotDivisible : public InternalError {
 public:
  using InternalError::InternalError;
};

/// A quantity that must be integral came out fractional.
class NonInteger : public InternalError {
 public:
  using InternalError::InternalError;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BadRequest : public Error {
 public:
  using Error::Error;
};

class CorruptCache : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace affsl2
