#pragma once

#include <stdexcept>
#include <string>

namespace boolcd {

/// Operand shapes do not line up (products, folds, slot stacking).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configuration value is outside its documented range.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested result would exceed a hard size guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An operation was asked for an input outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A file or text stream could not be parsed; messages carry line numbers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data is readable but invalid (non-finite cell, mismatched slot shape).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an object in the wrong lifecycle state.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Caller-supplied arguments are structurally unusable (too few slots, empty sweep).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace boolcd
