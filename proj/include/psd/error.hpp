#pragma once

#include <stdexcept>
#include <string>

namespace psd {

/// Base for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a precondition or supplied malformed input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check between two independent computations disagreed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace psd
