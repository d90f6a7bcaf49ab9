#pragma once

#include <stdexcept>
#include <string>

namespace qfock {

/// Input outside the mathematical domain of an operation (bad q, k > n,
/// letter outside the basis, non-contractive map, division by zero).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A configured degree or enumeration cap would be exceeded.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

/// Malformed textual input (q literal, word, coefficient).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace qfock
