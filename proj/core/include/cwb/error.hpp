#pragma once

#include <stdexcept>
#include <string>

namespace cwb {

/// Base class for every error raised by the workbench core.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad shape, bad parameter).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two values live over different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// The operation is not offered for this kind of ring.
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

/// A finite-horizon computation could not reach the requested certificate.
class HorizonInsufficient : public Error {
 public:
  using Error::Error;
};

}  // namespace cwb
