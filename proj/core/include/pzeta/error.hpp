#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pzeta {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource limit (group order, lattice size, ...) was exceeded.
/// Carries the limit so callers can report it instead of crashing.
class LimitError : public Error {
 public:
  LimitError(const std::string& what, std::int64_t limit)
      : Error(what), limit_(limit) {}

  std::int64_t limit() const noexcept { return limit_; }

 private:
  std::int64_t limit_;
};

}  // namespace pzeta
