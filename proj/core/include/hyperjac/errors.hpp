#pragma once

#include <stdexcept>
#include <string>

namespace hyperjac {

/// Base class for all domain errors raised by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closure enumeration hit its element cap before completing.  The partial
/// set is discarded; callers must treat this as an abort, not a result.
class closure_limit_error : public error {
 public:
  explicit closure_limit_error(std::size_t cap)
      : error("closure aborted: element cap of " + std::to_string(cap) +
              " reached before the set closed"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// A condition that is mathematically impossible given correct code was
/// observed (e.g. a vanishing norm in a field, or a Lagrange violation).
class consistency_error : public error {
 public:
  using error::error;
};

}  // namespace hyperjac
