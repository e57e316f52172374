#pragma once

#include <stdexcept>
#include <string>

namespace qwick {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input exceeded a configured size cap (enumeration or permutation).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A required table entry (substitution rule, vector assignment) is missing.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A creation operator would push a tensor past the truncation level.
class TruncationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwick
