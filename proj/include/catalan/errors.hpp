#pragma once

#include <stdexcept>
#include <string>

namespace catalan {

/// Caller violated an operation's precondition (bad range, mismatched ring, ...).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// The value is mathematically undefined at the requested point.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Exhaustive work was requested beyond the supported desk-scale size.
class SizeError : public std::length_error {
 public:
  explicit SizeError(const std::string& what) : std::length_error(what) {}
};

}  // namespace catalan
