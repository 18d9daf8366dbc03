#pragma once

#include <stdexcept>
#include <string>

namespace malnorm {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit was hit. The CLI maps these to exit code 3.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal mathematical consistency check failed. These must never fire;
/// the CLI maps them to exit code 1.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidParameters : public InputError {
 public:
  using InputError::InputError;
};

class NotPrime : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedField : public InputError {
 public:
  using InputError::InputError;
};

class NotHyperbolic : public InputError {
 public:
  using InputError::InputError;
};

class NotFrobeniusPair : public InputError {
 public:
  using InputError::InputError;
};

class ActionNotHomomorphism : public InputError {
 public:
  using InputError::InputError;
};

/// Subgroups of different parent groups were combined.
class CrossParent : public InputError {
 public:
  using InputError::InputError;
};

class IterationBudgetExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class DefinitionsDisagree : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};

class EquivalenceViolated : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};

class IdentityFailed : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};

/// Exact integer arithmetic left the representable range.
class ArithmeticOverflow : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};

}  // namespace malnorm
