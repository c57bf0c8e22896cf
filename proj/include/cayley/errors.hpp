#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

enum class ErrorKind {
  InvalidSpec,        // malformed group / construction parameters
  InvalidGenerators,  // generator set not symmetric, contains 0, or empty
  InvalidInput,       // operation precondition violated
  InstanceTooLarge,   // configured budget exceeded
  SearchExhausted,    // randomized search gave up
  TheoremViolation,   // an exact check that must hold did not
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cayley
