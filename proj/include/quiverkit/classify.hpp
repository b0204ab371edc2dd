#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverkit/export.hpp"
#include "quiverkit/orbit_model.hpp"
#include "quiverkit/power.hpp"

namespace quiverkit {

struct OrbitMatch {
  int k = 0;
  int s = 0;
  int r = 0;

  auto operator<=>(const OrbitMatch&) const = default;
};

struct ClassifiedComponent {
  std::size_t size = 0;
  std::string least_label;
  std::vector<std::string> labels;
  // Every (k, s, r) in the search range whose orbit quiver is isomorphic to
  // the component, lexicographically sorted. Empty means unmatched.
  std::vector<OrbitMatch> matches;
};

// Comparison of observed parameters with r = (m-1)/2, s = (m-1)(n-1)/2 + 1
// for odd m, and with m/2 <= r <= m for even m. Never gating.
struct ParameterComparison {
  bool odd = false;
  int predicted_r = 0;
  int predicted_s = 0;
  // Odd m: every non-principal component has a match with the predicted
  // (r, s). Absent when there is nothing to compare.
  std::optional<bool> agrees;
  // Every non-principal component has some match with s < n.
  std::optional<bool> s_below_n;
  // Even m: distinct r values observed and whether they lie in [m/2, m].
  std::vector<int> observed_r;
  std::optional<bool> r_within_even_bound;
  std::vector<std::string> notes;
};

struct ComponentReport {
  int n = 0;
  int m = 0;
  std::size_t principal_size = 0;
  std::string principal_root;
  bool principal_matches_gamma = false;
  std::vector<ClassifiedComponent> others;
  // Arrows of the power carried by more than one sectional path.
  std::size_t repeated_arrows = 0;
  ParameterComparison comparison;
};

// Decomposes gamma(nm,1)^m, checks the principal component against
// gamma(n,m), and searches k in [1, nm-1], r in [1, m], s bounded by the
// component size for orbit quivers isomorphic to every other component.
ComponentReport classify_components(int n, int m);
ComponentReport classify_components(int n, int m, std::size_t vertex_cap);

Json to_json(const ComponentReport& report);
std::string to_text(const ComponentReport& report);

}  // namespace quiverkit
