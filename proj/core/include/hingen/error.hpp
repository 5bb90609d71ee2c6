#pragma once

#include <stdexcept>
#include <string>

namespace hingen {

// Base error for everything raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad inputs: malformed files, invalid schemas, out-of-range parameters.
// The CLI maps these to exit code 2.
struct UserError : Error {
  using Error::Error;
};

// A broken internal invariant; indicates a bug in the generator itself.
// The CLI maps these to exit code 3.
struct InternalError : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw UserError(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace hingen
