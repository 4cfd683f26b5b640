#pragma once

#include <stdexcept>
#include <string>

namespace deltang {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: out-of-range endpoint, self-loop, bad probability.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Bytes that do not decode as graph6 or edge-list text.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Invariant queried outside its domain, e.g. δ of the empty graph.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a size budget of an exact or exhaustive routine.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace deltang
