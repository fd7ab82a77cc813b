#pragma once

#include <stdexcept>
#include <string>

namespace asd {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index outside the valid range of a text or substring reference.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// An online symbol would be delivered a second time (rewind, re-read).
class SinglePassViolation : public Error {
 public:
  using Error::Error;
};

/// Input pair breaks the access model (unequal lengths, misaligned padding).
class ModelViolation : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its documented range (delta, epsilon, alphabet codes).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Empty input where a non-empty one is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Mapping enumeration would exceed the configured work budget.
class TractabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace asd
