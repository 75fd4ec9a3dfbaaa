#pragma once

#include <stdexcept>
#include <string>

namespace grdet {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: unsupported tower exponent, mismatched sizes, etc.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A residue-class precondition failed (e.g. a prime that is not 3 mod 8).
class BadResidue : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BadPrime : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotMultipleOf1024 : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// The following signal bugs in the library, never bad input.

// A Galois orbit product that should be a rational integer was not.
class NonScalarProduct : public Error {
 public:
  using Error::Error;
};

// A factored determinant disagreed with the regular-representation oracle.
class FormulaMismatch : public Error {
 public:
  using Error::Error;
};

class NoRepresentation : public Error {
 public:
  using Error::Error;
};

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace grdet
