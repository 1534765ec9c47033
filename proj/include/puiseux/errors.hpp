#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace puiseux {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The atomic structure of a family is not known under its parameters.
class AtomicityUnknown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parametric construction violates its growth hypothesis at level `index`.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::size_t index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A scan was cut off by a caller-imposed cap.
class ScanCapError : public std::runtime_error {
 public:
  ScanCapError(std::size_t cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace puiseux
