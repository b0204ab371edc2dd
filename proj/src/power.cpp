#include "quiverkit/power.hpp"

#include <algorithm>
#include <stdexcept>

#include "quiverkit/parallel.hpp"
#include "quiverkit/polygon.hpp"

namespace quiverkit {

bool is_path(std::span<const VertexId> path, const TranslationQuiver& tq) {
  if (path.empty()) return false;
  for (VertexId v : path) {
    if (v >= tq.vertex_count()) return false;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (tq.quiver().multiplicity(path[i], path[i + 1]) == 0) return false;
  }
  return true;
}

bool is_sectional(std::span<const VertexId> path, const TranslationQuiver& tq) {
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    auto t = tq.tau(path[i + 1]);
    if (t && *t == path[i - 1]) return false;
  }
  return true;
}

namespace {

// Depth-first walk over sectional paths of exactly `remaining` more arrows.
// Parallel arrows are walked once per copy, so endpoints are counted with
// path multiplicity.
void walk(const TranslationQuiver& tq, std::optional<VertexId> previous, VertexId current,
          int remaining, std::vector<std::size_t>& hits) {
  if (remaining == 0) {
    ++hits[current];
    return;
  }
  for (VertexId next : tq.quiver().successors(current)) {
    if (previous) {
      auto t = tq.tau(next);
      if (t && *t == *previous) continue;
    }
    walk(tq, current, next, remaining - 1, hits);
  }
}

std::optional<VertexId> tau_power(const TranslationQuiver& tq, VertexId v, int m) {
  std::optional<VertexId> cur = v;
  for (int i = 0; i < m && cur; ++i) cur = tq.tau(*cur);
  return cur;
}

}  // namespace

std::size_t count_sectional_paths(const TranslationQuiver& tq, VertexId from, VertexId to, int m) {
  std::vector<std::size_t> hits(tq.vertex_count(), 0);
  walk(tq, std::nullopt, from, m, hits);
  return hits.at(to);
}

PowerQuiver power(const TranslationQuiver& tq, int m) {
  if (m < 1) throw ArgumentError("power exponent must be at least 1");
  const std::size_t n = tq.vertex_count();

  std::vector<std::vector<Arrow>> per_start(n);
  std::vector<std::vector<RepeatedArrow>> repeated_per_start(n);
  parallel_for(n, [&](std::size_t start) {
    std::vector<std::size_t> hits(n, 0);
    walk(tq, std::nullopt, static_cast<VertexId>(start), m, hits);
    for (VertexId end = 0; end < n; ++end) {
      for (std::size_t c = 0; c < hits[end]; ++c) {
        per_start[start].push_back({static_cast<VertexId>(start), end});
      }
      if (hits[end] > 1) repeated_per_start[start].push_back({static_cast<VertexId>(start), end, hits[end]});
    }
  });

  std::vector<Arrow> arrows;
  std::vector<RepeatedArrow> repeated;
  for (std::size_t v = 0; v < n; ++v) {
    arrows.insert(arrows.end(), per_start[v].begin(), per_start[v].end());
    repeated.insert(repeated.end(), repeated_per_start[v].begin(), repeated_per_start[v].end());
  }
  std::vector<std::optional<VertexId>> tau(n);
  for (VertexId v = 0; v < n; ++v) tau[v] = tau_power(tq, v, m);

  return PowerQuiver{tq, m, TranslationQuiver(Quiver(tq.quiver().labels(), std::move(arrows)), std::move(tau)),
                     std::move(repeated)};
}

std::vector<PowerComponent> decompose(const PowerQuiver& pq) {
  std::vector<PowerComponent> out;
  for (auto& part : translation_components(pq.result)) {
    PowerComponent c;
    c.quiver = induced_subquiver(pq.result, part);
    c.tau_closed = is_tau_closed(pq.result, part);
    c.vertices = std::move(part);
    out.push_back(std::move(c));
  }
  return out;
}

TranslationQuiver principal_component(int n, int m) {
  if (n < 2 || m < 1) throw ArgumentError("principal component needs n >= 2 and m >= 1");
  TranslationQuiver base = gamma(n * m, 1);
  PowerQuiver pq = power(base, m);
  const VertexId root = pq.result.quiver().at(diagonal_label(make_diagonal(1, m + 2, n * m + 2)));
  for (PowerComponent& c : decompose(pq)) {
    if (!std::binary_search(c.vertices.begin(), c.vertices.end(), root)) continue;
    if (!iso_translation_quivers(c.quiver, gamma(n, m))) {
      throw std::logic_error("component of (1," + std::to_string(m + 2) + ") in Gamma(" +
                             std::to_string(n * m) + ",1)^" + std::to_string(m) +
                             " is not isomorphic to Gamma(" + std::to_string(n) + "," +
                             std::to_string(m) + ")");
    }
    return std::move(c.quiver);
  }
  throw std::logic_error("root vertex missing from decomposition");
}

}  // namespace quiverkit
