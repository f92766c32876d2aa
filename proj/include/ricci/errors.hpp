#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

// Base of every error the library raises. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Loop or duplicate edge during graph construction.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

class DegreeZeroError : public Error {
 public:
  using Error::Error;
};

class MarginalMismatch : public Error {
 public:
  using Error::Error;
};

// A hypothesis of the statement being checked does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotHypercubeError : public Error {
 public:
  using Error::Error;
};

// Instance size beyond what the exhaustive routines accept.
class ScaleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Solver invariant broken; never expected on valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ricci
