#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quiverkit {

// Invalid parameters or malformed input (CLI exit code 2).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap was exceeded (CLI exit code 3).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultVertexCap = 5000;

// Vertex cap used when callers do not pass one: kDefaultVertexCap unless the
// QUIVERKIT_CAP environment variable holds a positive integer.
std::size_t default_vertex_cap();

void check_vertex_cap(std::size_t vertices, std::size_t cap, const std::string& what);

}  // namespace quiverkit
