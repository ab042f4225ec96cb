#pragma once

#include <stdexcept>
#include <string>

namespace bv {

// Invalid run configuration or violated standing hypothesis (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside the domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size bound was exceeded (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation contradicted a mathematical statement the library relies on
// (CLI exit code 1).
class FalsifiedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bv
