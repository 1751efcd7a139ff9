#pragma once

#include <stdexcept>
#include <string>

namespace emotif {

// Root of every exception thrown by the library. Each module derives its own
// error type carrying a Kind enum so callers can branch without parsing text.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace emotif
