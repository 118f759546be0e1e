#pragma once

#include <stdexcept>
#include <string>

namespace pn {

/// Caller supplied something outside an operation's domain (bad n, malformed
/// partition string, mismatched ground sets, ...). CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource budget (entries, bit size, wall time, enumeration
/// cap) would be exceeded. Never signals a wrong answer. CLI exit code 3.
class ResourceExhausted : public std::runtime_error {
 public:
  explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed. Always a bug. CLI exit code 4.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] void throw_invalid(const std::string& what);
[[noreturn]] void throw_resource(const std::string& what);
[[noreturn]] void throw_invariant(const std::string& what);

}  // namespace pn
