#ifndef GROWTHLAB_ERRORS_HPP
#define GROWTHLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace growthlab {

// Exit-code taxonomy used by the CLI:
//   usage/domain errors -> 2, resource exhaustion -> 3,
//   violated mathematical invariant -> 4.

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual int exit_code() const { return 1; }
};

class UsageError : public Error {
public:
  explicit UsageError(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 2; }
};

class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 2; }
};

// Enumeration budget exceeded; carries how far the computation got so
// partial results can still be reported.
class ResourceError : public Error {
public:
  ResourceError(const std::string& msg, int achieved_radius = -1)
      : Error(msg), achieved_radius_(achieved_radius) {}
  int exit_code() const override { return 3; }
  int achieved_radius() const { return achieved_radius_; }

private:
  int achieved_radius_;
};

// A query left the enumerated region of a lazily grown model.
class RegionExhausted : public ResourceError {
public:
  RegionExhausted(const std::string& msg, int achieved_radius = -1)
      : ResourceError(msg, achieved_radius) {}
};

// A checked assertion from the underlying mathematics failed.
class InvariantViolation : public Error {
public:
  explicit InvariantViolation(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 4; }
};

}  // namespace growthlab

#endif
