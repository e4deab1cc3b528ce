#pragma once

#include <stdexcept>
#include <string>

namespace hdt {

/// Invalid input: bad rank, singular matrix, division by zero, non-dominant weight.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A theorem-level identity failed to hold. Always an implementation bug.
class StructuralError : public std::logic_error {
 public:
  explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

/// Floating-point overflow or a non-finite intermediate value.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure was set up so that it cannot run (bad bracket, rank too large).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hdt
