#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bogo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or construction guard (size, degree, prime bound) was hit.
class GuardViolation : public Error {
 public:
  using Error::Error;
};

/// Numerical refinement did not reach the requested accuracy.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public GuardViolation {
 public:
  DegreeCapExceeded(std::int64_t needed, std::int64_t cap)
      : GuardViolation("field degree " + std::to_string(needed) +
                       " exceeds cap " + std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}
  std::int64_t needed() const { return needed_; }
  std::int64_t cap() const { return cap_; }

 private:
  std::int64_t needed_;
  std::int64_t cap_;
};

}  // namespace bogo
