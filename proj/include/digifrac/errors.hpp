#pragma once

#include <stdexcept>
#include <string>

namespace digifrac {

/// Input violates a mathematical precondition (illegal radix, value outside
/// the digit interval, mismatched systems, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text input: numerals, rationals, JSON documents.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace digifrac
