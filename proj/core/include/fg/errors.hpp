#pragma once

#include <stdexcept>
#include <string>

namespace fg {

// Malformed textual input (word syntax, subgroup files, serialized cores).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated precondition.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// A configured resource cap (vertices, stages) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fg
