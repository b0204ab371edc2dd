#pragma once

#include <span>
#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

using Path = std::vector<VertexId>;

// Consecutive vertices are joined by arrows of tq (and the path is nonempty).
bool is_path(std::span<const VertexId> path, const TranslationQuiver& tq);

// tau(x_{i+1}) != x_{i-1} at every interior index where tau(x_{i+1}) is defined.
bool is_sectional(std::span<const VertexId> path, const TranslationQuiver& tq);

// Number of sectional paths of length m from `from` to `to`, by plain
// enumeration.
std::size_t count_sectional_paths(const TranslationQuiver& tq, VertexId from, VertexId to, int m);

// An arrow of the power carried by more than one sectional path.
struct RepeatedArrow {
  VertexId source = 0;
  VertexId target = 0;
  std::size_t paths = 0;
};

struct PowerQuiver {
  TranslationQuiver base;
  int m = 1;
  // Same vertices as base; one arrow per sectional path of length m; tau^m.
  TranslationQuiver result;
  std::vector<RepeatedArrow> repeated_arrows;
};

PowerQuiver power(const TranslationQuiver& tq, int m);

struct PowerComponent {
  // Vertex ids of the power (and base), ascending.
  VertexSet vertices;
  TranslationQuiver quiver;
  // tau^m and its inverse keep the component inside itself.
  bool tau_closed = true;
};

// Splits the power into connected translation quivers (arrows and tau links),
// ordered by size descending, then least vertex.
std::vector<PowerComponent> decompose(const PowerQuiver& pq);

// Component of gamma(nm,1)^m containing the diagonal (1, m+2). Throws
// std::logic_error if it is not isomorphic to gamma(n, m).
TranslationQuiver principal_component(int n, int m);

}  // namespace quiverkit
