#include "quiverkit/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quiverkit {

Quiver::Quiver(std::vector<std::string> labels, std::vector<Arrow> arrows)
    : labels_(std::move(labels)), arrows_(std::move(arrows)) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], static_cast<VertexId>(v)).second) {
      throw ArgumentError("duplicate vertex label " + labels_[v]);
    }
  }
  for (const Arrow& a : arrows_) {
    if (a.source >= n || a.target >= n) throw ArgumentError("arrow endpoint out of range");
  }
  std::sort(arrows_.begin(), arrows_.end());

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Arrow& a : arrows_) {
    ++out_offsets_[a.source + 1];
    ++in_offsets_[a.target + 1];
  }
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
  std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());

  out_targets_.resize(arrows_.size());
  in_sources_.resize(arrows_.size());
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // arrows_ is sorted by (source, target), so both fills come out ascending.
  for (const Arrow& a : arrows_) {
    out_targets_[out_fill[a.source]++] = a.target;
    in_sources_[in_fill[a.target]++] = a.source;
  }
}

std::optional<VertexId> Quiver::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Quiver::at(std::string_view label) const {
  auto v = find(label);
  if (!v) throw ArgumentError("no vertex labeled " + std::string(label));
  return *v;
}

std::span<const VertexId> Quiver::successors(VertexId v) const {
  return {out_targets_.data() + out_offsets_.at(v), out_targets_.data() + out_offsets_.at(v + 1)};
}

std::span<const VertexId> Quiver::predecessors(VertexId v) const {
  return {in_sources_.data() + in_offsets_.at(v), in_sources_.data() + in_offsets_.at(v + 1)};
}

std::size_t Quiver::multiplicity(VertexId from, VertexId to) const {
  auto succ = successors(from);
  auto [lo, hi] = std::equal_range(succ.begin(), succ.end(), to);
  return static_cast<std::size_t>(hi - lo);
}

std::size_t Quiver::max_multiplicity() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < arrows_.size();) {
    std::size_t j = i;
    while (j < arrows_.size() && arrows_[j] == arrows_[i]) ++j;
    best = std::max(best, j - i);
    i = j;
  }
  return best;
}

bool Quiver::has_self_loop() const {
  return std::any_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.source == a.target; });
}

TranslationQuiver::TranslationQuiver(Quiver quiver, std::vector<std::optional<VertexId>> tau)
    : quiver_(std::move(quiver)), tau_(std::move(tau)) {
  const std::size_t n = quiver_.vertex_count();
  if (tau_.size() != n) throw ArgumentError("translation map size does not match vertex count");
  tau_inverse_.assign(n, std::nullopt);
  bool total = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!tau_[v]) {
      total = false;
      continue;
    }
    if (*tau_[v] >= n) throw ArgumentError("translation target out of range");
    if (!tau_inverse_[*tau_[v]]) tau_inverse_[*tau_[v]] = static_cast<VertexId>(v);
  }
  bool surjective = std::all_of(tau_inverse_.begin(), tau_inverse_.end(),
                                [](const auto& p) { return p.has_value(); });
  stable_ = total && surjective;
}

std::string Violation::describe(const TranslationQuiver& tq) const {
  std::ostringstream out;
  if (kind == Kind::NonInjectiveTau) {
    out << "tau not injective: tau" << tq.label(x) << " = tau" << tq.label(y);
  } else {
    out << "mesh at " << tq.label(y) << ": arrows " << tq.label(x) << "->" << tq.label(y) << " = "
        << arrows_x_to_y << ", arrows " << tq.label(*tq.tau(y)) << "->" << tq.label(x) << " = "
        << arrows_tau_y_to_x;
  }
  return out.str();
}

ValidationResult validate_translation_quiver(const TranslationQuiver& tq) {
  ValidationResult result;
  result.stable = tq.is_stable();
  const Quiver& q = tq.quiver();
  const std::size_t n = tq.vertex_count();

  std::vector<std::optional<VertexId>> first_preimage(n);
  for (VertexId v = 0; v < n; ++v) {
    auto t = tq.tau(v);
    if (!t) continue;
    if (first_preimage[*t]) {
      result.violations.push_back(
          {Violation::Kind::NonInjectiveTau, *first_preimage[*t], v, 0, 0});
    } else {
      first_preimage[*t] = v;
    }
  }

  // Only x adjacent to y (as a predecessor) or to tau(y) (as a successor) can
  // have a nonzero count on either side of the mesh equation.
  for (VertexId y = 0; y < n; ++y) {
    auto ty = tq.tau(y);
    if (!ty) continue;
    std::vector<VertexId> xs;
    auto pred = q.predecessors(y);
    auto succ = q.successors(*ty);
    std::set_union(pred.begin(), pred.end(), succ.begin(), succ.end(), std::back_inserter(xs));
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (VertexId x : xs) {
      std::size_t left = q.multiplicity(x, y);
      std::size_t right = q.multiplicity(*ty, x);
      if (left != right) {
        result.violations.push_back({Violation::Kind::MeshMismatch, x, y, left, right});
      }
    }
  }
  return result;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<VertexSet> collect_components(DisjointSets& sets, std::size_t n) {
  std::vector<VertexSet> by_root(n);
  for (std::size_t v = 0; v < n; ++v) by_root[sets.find(v)].push_back(static_cast<VertexId>(v));
  std::vector<VertexSet> parts;
  for (auto& part : by_root) {
    if (!part.empty()) parts.push_back(std::move(part));
  }
  std::stable_sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return parts;
}

}  // namespace

std::vector<VertexSet> connected_components(const Quiver& q) {
  DisjointSets sets(q.vertex_count());
  for (const Arrow& a : q.arrows()) sets.join(a.source, a.target);
  return collect_components(sets, q.vertex_count());
}

std::vector<VertexSet> translation_components(const TranslationQuiver& tq) {
  DisjointSets sets(tq.vertex_count());
  for (const Arrow& a : tq.quiver().arrows()) sets.join(a.source, a.target);
  for (VertexId v = 0; v < tq.vertex_count(); ++v) {
    if (auto t = tq.tau(v)) sets.join(v, *t);
  }
  return collect_components(sets, tq.vertex_count());
}

TranslationQuiver induced_subquiver(const TranslationQuiver& tq, std::span<const VertexId> vertices) {
  const std::size_t n = tq.vertex_count();
  std::vector<std::optional<VertexId>> local(n);
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (local.at(vertices[i])) throw ArgumentError("repeated vertex in induced subquiver");
    local[vertices[i]] = static_cast<VertexId>(i);
    labels.push_back(tq.label(vertices[i]));
  }

  std::vector<Arrow> arrows;
  std::vector<std::optional<VertexId>> tau(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : tq.quiver().successors(vertices[i])) {
      if (local[w]) arrows.push_back({static_cast<VertexId>(i), *local[w]});
    }
    if (auto t = tq.tau(vertices[i]); t && local[*t]) tau[i] = local[*t];
  }
  return TranslationQuiver(Quiver(std::move(labels), std::move(arrows)), std::move(tau));
}

bool is_tau_closed(const TranslationQuiver& tq, std::span<const VertexId> vertices) {
  std::vector<bool> member(tq.vertex_count(), false);
  for (VertexId v : vertices) member.at(v) = true;
  for (VertexId v : vertices) {
    if (auto t = tq.tau(v); t && !member[*t]) return false;
    if (auto t = tq.tau_inverse(v); t && !member[*t]) return false;
  }
  return true;
}

}  // namespace quiverkit
