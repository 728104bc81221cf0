#pragma once

#include <stdexcept>
#include <string>

namespace gchar {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: parse failures, dimension mismatches, bad parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// A computation needed a degree or homological stage beyond the window.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, int first_uncertified)
      : Error(what), first_uncertified_(first_uncertified) {}

  int first_uncertified() const noexcept { return first_uncertified_; }

 private:
  int first_uncertified_;
};

// A documented precondition (regularity, total reflexivity, ...) failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagreed. Always an engine bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// No supported algorithm applies (e.g. rank without component data).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace gchar
