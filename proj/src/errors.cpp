#include "quiverkit/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace quiverkit {

std::size_t default_vertex_cap() {
  const char* env = std::getenv("QUIVERKIT_CAP");
  if (env == nullptr || *env == '\0') return kDefaultVertexCap;
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return kDefaultVertexCap;
  return value;
}

void check_vertex_cap(std::size_t vertices, std::size_t cap, const std::string& what) {
  if (vertices > cap) {
    throw CapExceeded(what + ": " + std::to_string(vertices) + " vertices exceeds cap " +
                      std::to_string(cap));
  }
}

}  // namespace quiverkit
