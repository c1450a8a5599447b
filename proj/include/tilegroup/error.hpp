#pragma once

#include <stdexcept>
#include <string>

namespace tilegroup {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DiscriminantMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A query fell outside the finite window a structure was built from.
class OutOfTruncation : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A model-set enumeration produced no points.
class EmptyModelSet : public Error {
 public:
  using Error::Error;
};

}  // namespace tilegroup
