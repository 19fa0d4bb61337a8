#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Kernel evaluated at zero displacement.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Two configuration points coincide inside an energy sum.
class CoincidentPointsError : public SingularityError {
 public:
  using SingularityError::SingularityError;
};

class UnsupportedOracleError : public Error {
 public:
  using Error::Error;
};

class InfeasibleInputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace riesz
