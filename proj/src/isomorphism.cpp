#include <algorithm>
#include <array>
#include <tuple>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

namespace {

constexpr VertexId kUnmapped = static_cast<VertexId>(-1);

// Per-vertex invariant that any translation-quiver isomorphism preserves.
struct Signature {
  std::size_t out_degree = 0;
  std::size_t in_degree = 0;
  bool has_tau = false;
  bool has_tau_inverse = false;
  std::size_t tau_cycle = 0;  // length of the tau-cycle through v, 0 if none
  std::size_t component_size = 0;

  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const TranslationQuiver& tq) {
  const std::size_t n = tq.vertex_count();
  std::vector<Signature> sig(n);
  std::vector<std::size_t> component_size(n, 0);
  for (const auto& part : translation_components(tq)) {
    for (VertexId v : part) component_size[v] = part.size();
  }
  for (VertexId v = 0; v < n; ++v) {
    Signature& s = sig[v];
    s.out_degree = tq.quiver().successors(v).size();
    s.in_degree = tq.quiver().predecessors(v).size();
    s.has_tau = tq.tau(v).has_value();
    s.has_tau_inverse = tq.tau_inverse(v).has_value();
    s.component_size = component_size[v];
    auto cur = tq.tau(v);
    for (std::size_t steps = 1; cur && steps <= n; ++steps) {
      if (*cur == v) {
        s.tau_cycle = steps;
        break;
      }
      cur = tq.tau(*cur);
    }
  }
  return sig;
}

enum class Link { Root, ArrowFromParent, ArrowToParent, TauOfParent, TauInverseOfParent };

struct Step {
  VertexId vertex;
  VertexId parent;
  Link link;
};

// Breadth-first order over arrows and tau links, one tree per component,
// roots taken in increasing vertex order.
std::vector<Step> search_order(const TranslationQuiver& tq) {
  const std::size_t n = tq.vertex_count();
  std::vector<Step> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::size_t head = order.size();
    order.push_back({root, root, Link::Root});
    while (head < order.size()) {
      VertexId u = order[head++].vertex;
      auto visit = [&](VertexId w, Link link) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back({w, u, link});
        }
      };
      for (VertexId w : tq.quiver().successors(u)) visit(w, Link::ArrowFromParent);
      for (VertexId w : tq.quiver().predecessors(u)) visit(w, Link::ArrowToParent);
      if (auto t = tq.tau(u)) visit(*t, Link::TauOfParent);
      if (auto t = tq.tau_inverse(u)) visit(*t, Link::TauInverseOfParent);
    }
  }
  return order;
}

class Matcher {
 public:
  Matcher(const TranslationQuiver& a, const TranslationQuiver& b)
      : a_(a),
        b_(b),
        sig_a_(signatures(a)),
        sig_b_(signatures(b)),
        order_(search_order(a)),
        forward_(a.vertex_count(), kUnmapped),
        backward_(b.vertex_count(), kUnmapped) {}

  bool run() { return extend(0); }
  const VertexBijection& mapping() const { return forward_; }

 private:
  std::vector<VertexId> candidates(const Step& step) const {
    std::vector<VertexId> out;
    if (step.link == Link::Root) {
      for (VertexId w = 0; w < b_.vertex_count(); ++w) out.push_back(w);
      return out;
    }
    VertexId image = forward_[step.parent];
    switch (step.link) {
      case Link::ArrowFromParent: {
        auto s = b_.quiver().successors(image);
        out.assign(s.begin(), s.end());
        break;
      }
      case Link::ArrowToParent: {
        auto s = b_.quiver().predecessors(image);
        out.assign(s.begin(), s.end());
        break;
      }
      case Link::TauOfParent:
        if (auto t = b_.tau(image)) out.push_back(*t);
        break;
      case Link::TauInverseOfParent:
        if (auto t = b_.tau_inverse(image)) out.push_back(*t);
        break;
      case Link::Root:
        break;
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool same_arrows(std::span<const VertexId> a_side, std::span<const VertexId> b_side, VertexId v,
                   VertexId w, bool outgoing) const {
    // Every already-mapped neighbor must see the same multiplicity on both sides.
    for (VertexId u : a_side) {
      VertexId image = u == v ? w : forward_[u];
      if (image == kUnmapped) continue;
      std::size_t ma = outgoing ? a_.quiver().multiplicity(v, u) : a_.quiver().multiplicity(u, v);
      std::size_t mb = outgoing ? b_.quiver().multiplicity(w, image)
                                : b_.quiver().multiplicity(image, w);
      if (ma != mb) return false;
    }
    for (VertexId x : b_side) {
      VertexId pre = x == w ? v : backward_[x];
      if (pre == kUnmapped) continue;
      std::size_t mb = outgoing ? b_.quiver().multiplicity(w, x) : b_.quiver().multiplicity(x, w);
      std::size_t ma = outgoing ? a_.quiver().multiplicity(v, pre) : a_.quiver().multiplicity(pre, v);
      if (ma != mb) return false;
    }
    return true;
  }

  bool consistent(VertexId v, VertexId w) const {
    if (sig_a_[v] != sig_b_[w]) return false;
    auto ta = a_.tau(v);
    auto tb = b_.tau(w);
    if (ta && forward_[*ta] != kUnmapped && forward_[*ta] != *tb) return false;
    if (tb && backward_[*tb] != kUnmapped && backward_[*tb] != *ta) return false;
    if (ta && *ta == v && *tb != w) return false;
    auto ia = a_.tau_inverse(v);
    auto ib = b_.tau_inverse(w);
    if (ia && forward_[*ia] != kUnmapped && forward_[*ia] != *ib) return false;
    if (ib && backward_[*ib] != kUnmapped && backward_[*ib] != *ia) return false;
    return same_arrows(a_.quiver().successors(v), b_.quiver().successors(w), v, w, true) &&
           same_arrows(a_.quiver().predecessors(v), b_.quiver().predecessors(w), v, w, false);
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const Step& step = order_[pos];
    for (VertexId w : candidates(step)) {
      if (backward_[w] != kUnmapped || !consistent(step.vertex, w)) continue;
      forward_[step.vertex] = w;
      backward_[w] = step.vertex;
      if (extend(pos + 1)) return true;
      forward_[step.vertex] = kUnmapped;
      backward_[w] = kUnmapped;
    }
    return false;
  }

  const TranslationQuiver& a_;
  const TranslationQuiver& b_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<Step> order_;
  VertexBijection forward_;
  std::vector<VertexId> backward_;
};

}  // namespace

bool is_translation_isomorphism(const TranslationQuiver& a, const TranslationQuiver& b,
                                const VertexBijection& phi) {
  const std::size_t n = a.vertex_count();
  if (b.vertex_count() != n || phi.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (VertexId w : phi) {
    if (w >= n || hit[w]) return false;
    hit[w] = true;
  }
  if (a.quiver().arrow_count() != b.quiver().arrow_count()) return false;
  for (const Arrow& arrow : a.quiver().arrows()) {
    if (a.quiver().multiplicity(arrow.source, arrow.target) !=
        b.quiver().multiplicity(phi[arrow.source], phi[arrow.target])) {
      return false;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    auto ta = a.tau(v);
    auto tb = b.tau(phi[v]);
    if (ta.has_value() != tb.has_value()) return false;
    if (ta && phi[*ta] != *tb) return false;
  }
  return true;
}

std::optional<VertexBijection> iso_translation_quivers(const TranslationQuiver& a,
                                                       const TranslationQuiver& b,
                                                       std::size_t vertex_cap) {
  check_vertex_cap(a.vertex_count(), vertex_cap, "isomorphism search");
  check_vertex_cap(b.vertex_count(), vertex_cap, "isomorphism search");
  if (a.vertex_count() != b.vertex_count() ||
      a.quiver().arrow_count() != b.quiver().arrow_count() || a.is_stable() != b.is_stable()) {
    return std::nullopt;
  }

  Matcher matcher(a, b);
  {
    // Cheap rejection before backtracking: the signature multisets must agree.
    auto sa = signatures(a);
    auto sb = signatures(b);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  if (!matcher.run()) return std::nullopt;
  return matcher.mapping();
}

std::optional<VertexBijection> iso_translation_quivers(const TranslationQuiver& a,
                                                       const TranslationQuiver& b) {
  return iso_translation_quivers(a, b, default_vertex_cap());
}

}  // namespace quiverkit
