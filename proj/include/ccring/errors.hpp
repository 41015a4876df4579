#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccring {

/// Input that does not describe a well-formed object (dimension mismatch,
/// parse failure, element of the wrong shape).
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource limit would be exceeded.
class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(const std::string& limit, std::size_t value, std::size_t bound)
      : std::runtime_error("resource limit '" + limit + "' exceeded: " + std::to_string(value) +
                           " > " + std::to_string(bound)),
        limit_(limit) {}
  const std::string& limit() const noexcept { return limit_; }

 private:
  std::string limit_;
};

/// Operation applied outside its mathematical domain (e.g. quotient by a
/// subset that is not a two-sided ideal).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor was asked to build something that is not a ring.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown names and similar caller mistakes.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runtime size caps. Operations that would exceed them throw LimitExceeded.
struct Limits {
  std::size_t max_elements = std::size_t{1} << 16;          // element enumeration
  std::size_t max_lattice_elements = std::size_t{1} << 9;   // ideal lattices, completely-CE
  std::size_t max_ideals = std::size_t{1} << 14;            // ideals per lattice
  std::size_t max_quadratic_elements = std::size_t{1} << 13;  // O(|R|^2) scans
  std::size_t max_group_order = 64;
};

inline void check_limit(const char* name, std::size_t value, std::size_t bound) {
  if (value > bound) throw LimitExceeded(name, value, bound);
}

}  // namespace ccring
