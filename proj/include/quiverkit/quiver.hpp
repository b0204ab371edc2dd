#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "quiverkit/errors.hpp"

namespace quiverkit {

// Vertices are dense indices 0..n-1; every vertex carries a unique display
// label. Builders insert vertices in a canonical order, and that order is the
// tie-break used by component sorting and isomorphism search.
using VertexId = std::uint32_t;

struct Arrow {
  VertexId source = 0;
  VertexId target = 0;

  auto operator<=>(const Arrow&) const = default;
};

// Finite directed multigraph. Multiplicity is represented by repeating an
// arrow; arrows() is sorted by (source, target).
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> labels, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;
  VertexId at(std::string_view label) const;

  std::span<const Arrow> arrows() const { return arrows_; }

  // Targets of arrows leaving v (repeated per multiplicity, ascending).
  std::span<const VertexId> successors(VertexId v) const;
  // Sources of arrows entering v (repeated per multiplicity, ascending).
  std::span<const VertexId> predecessors(VertexId v) const;

  std::size_t multiplicity(VertexId from, VertexId to) const;
  std::size_t max_multiplicity() const;
  bool has_self_loop() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_sources_;
  std::unordered_map<std::string, VertexId> index_;
};

// A quiver with a partial translation. The mesh axiom and injectivity are not
// enforced here; validate_translation_quiver reports them as data.
class TranslationQuiver {
 public:
  TranslationQuiver() = default;
  TranslationQuiver(Quiver quiver, std::vector<std::optional<VertexId>> tau);

  const Quiver& quiver() const { return quiver_; }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }
  const std::string& label(VertexId v) const { return quiver_.label(v); }

  std::optional<VertexId> tau(VertexId v) const { return tau_.at(v); }
  // The preimage of v under tau (the first one, if tau is not injective).
  std::optional<VertexId> tau_inverse(VertexId v) const { return tau_inverse_.at(v); }
  const std::vector<std::optional<VertexId>>& tau_map() const { return tau_; }

  // tau total and surjective.
  bool is_stable() const { return stable_; }

 private:
  Quiver quiver_;
  std::vector<std::optional<VertexId>> tau_;
  std::vector<std::optional<VertexId>> tau_inverse_;
  bool stable_ = false;
};

struct Violation {
  enum class Kind { NonInjectiveTau, MeshMismatch };

  Kind kind = Kind::MeshMismatch;
  // MeshMismatch: #arrows(x -> y) != #arrows(tau y -> x).
  // NonInjectiveTau: tau(x) == tau(y) with x != y.
  VertexId x = 0;
  VertexId y = 0;
  std::size_t arrows_x_to_y = 0;
  std::size_t arrows_tau_y_to_x = 0;

  std::string describe(const TranslationQuiver& tq) const;
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool stable = false;

  bool ok() const { return violations.empty(); }
};

ValidationResult validate_translation_quiver(const TranslationQuiver& tq);

// Image of a under the bijection is result[a].
using VertexBijection = std::vector<VertexId>;

// Checks that phi is a bijection preserving arrow multiplicities and
// commuting with tau (including where tau is undefined).
bool is_translation_isomorphism(const TranslationQuiver& a, const TranslationQuiver& b,
                                const VertexBijection& phi);

// Backtracking search for a translation-quiver isomorphism a -> b. Candidates
// are taken in vertex order, so the answer is deterministic. Throws
// CapExceeded if either side has more than vertex_cap vertices.
std::optional<VertexBijection> iso_translation_quivers(const TranslationQuiver& a,
                                                       const TranslationQuiver& b,
                                                       std::size_t vertex_cap);
std::optional<VertexBijection> iso_translation_quivers(const TranslationQuiver& a,
                                                       const TranslationQuiver& b);

using VertexSet = std::vector<VertexId>;

// Weakly connected components of the underlying graph (arrows only), each
// sorted ascending; the list is ordered by size descending, then least vertex.
std::vector<VertexSet> connected_components(const Quiver& q);

// Same, but tau links also join vertices. This is the notion used to split a
// translation quiver into translation quivers.
std::vector<VertexSet> translation_components(const TranslationQuiver& tq);

// Full subquiver on `vertices` (kept in the given order) with tau restricted;
// tau(v) outside the set becomes undefined.
TranslationQuiver induced_subquiver(const TranslationQuiver& tq, std::span<const VertexId> vertices);

// True iff tau and tau^{-1} map the set into itself wherever defined.
bool is_tau_closed(const TranslationQuiver& tq, std::span<const VertexId> vertices);

}  // namespace quiverkit
