#pragma once

#include <stdexcept>
#include <string>

namespace chessdeg {

/// Input that does not parse or violates a structural invariant.
class MalformedInput : public std::runtime_error {
 public:
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

/// Arguments outside an operation's admissible range.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computed object failed a consistency check it must satisfy.
class IntegrityError : public std::logic_error {
 public:
  explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace chessdeg
