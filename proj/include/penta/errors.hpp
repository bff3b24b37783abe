#pragma once

#include <stdexcept>
#include <string>

namespace penta {

// Precondition violated by the caller (bad vertex, wrong family, n out of range).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input (graph6, edge list, rotation text).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural invariant failed to hold, e.g. a rotation system that is not
// a sphere embedding.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace penta
