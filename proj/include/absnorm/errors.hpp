#pragma once

#include <stdexcept>
#include <string>

namespace absnorm {

// Input data fails a structural invariant (bad polygon, bad file).
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition of an operation was violated by the caller.
class contract_error : public std::runtime_error {
public:
  explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

// The operation is not defined for this representation (e.g. exact duality
// of a black-box norm).
class unsupported_error : public std::runtime_error {
public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// Unparseable input (files, rational literals).
class malformed_error : public std::runtime_error {
public:
  explicit malformed_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace absnorm
