#include "quiverkit/orbit_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace quiverkit {

ZAQuiver::ZAQuiver(int k) : k_(k) {
  if (k < 1) throw ArgumentError("ZA_k needs k >= 1");
}

std::vector<ZAVertex> ZAQuiver::successors(ZAVertex v) const {
  std::vector<ZAVertex> out;
  if (v.row < k_) out.push_back({v.slice, v.row + 1});
  if (v.row > 1) out.push_back({v.slice + 1, v.row - 1});
  return out;
}

std::vector<ZAVertex> ZAQuiver::predecessors(ZAVertex v) const {
  std::vector<ZAVertex> out;
  if (v.row > 1) out.push_back({v.slice, v.row - 1});
  if (v.row < k_) out.push_back({v.slice - 1, v.row + 1});
  return out;
}

bool ZAQuiver::has_arrow(ZAVertex from, ZAVertex to) const {
  auto s = successors(from);
  return std::find(s.begin(), s.end(), to) != s.end();
}

ZAVertex ZAQuiver::shift(ZAVertex v) const { return {v.slice + v.row, k_ + 1 - v.row}; }

ZAVertex shift(int k, ZAVertex v) { return ZAQuiver(k).shift(v); }

namespace {

std::string za_label(ZAVertex v) {
  return "[" + std::to_string(v.slice) + "," + std::to_string(v.row) + "]";
}

}  // namespace

TranslationQuiver ZAQuiver::window(std::int64_t first_slice, std::int64_t last_slice) const {
  if (last_slice < first_slice) throw ArgumentError("empty window");
  auto id = [&](ZAVertex v) {
    return static_cast<VertexId>((v.slice - first_slice) * k_ + (v.row - 1));
  };
  std::vector<std::string> labels;
  std::vector<Arrow> arrows;
  std::vector<std::optional<VertexId>> translation;
  for (std::int64_t p = first_slice; p <= last_slice; ++p) {
    for (int i = 1; i <= k_; ++i) {
      ZAVertex v{p, i};
      labels.push_back(za_label(v));
      for (ZAVertex w : successors(v)) {
        if (w.slice <= last_slice) arrows.push_back({id(v), id(w)});
      }
      translation.push_back(p > first_slice ? std::optional<VertexId>(id(tau(v))) : std::nullopt);
    }
  }
  return TranslationQuiver(Quiver(std::move(labels), std::move(arrows)), std::move(translation));
}

ZAVertex apply(const ZAQuiver& za, AutoEquivalence g, ZAVertex v) {
  for (int i = 0; i < g.r; ++i) v = za.shift(v);
  v.slice += g.s;
  return v;
}

namespace {

void require_auto_equivalence(int k, AutoEquivalence g) {
  if (k < 1) throw ArgumentError("orbit quiver needs k >= 1");
  if (g.s < 0 || g.r < 0) throw ArgumentError("s and r must be non-negative");
  if (g.s == 0 && g.r == 0) throw ArgumentError("(s, r) = (0, 0) is the identity");
}

void require_free(const ZAQuiver& za, AutoEquivalence g) {
  for (int i = 1; i <= za.rank(); ++i) {
    ZAVertex v{0, i};
    ZAVertex once = apply(za, g, v);
    if (once == v || apply(za, g, once) == v) {
      throw NonFreeAction("tau^-" + std::to_string(g.s) + " o [" + std::to_string(g.r) +
                          "] fixes " + za_label(v) + " in ZA_" + std::to_string(za.rank()));
    }
  }
}

class SlicePartition {
 public:
  SlicePartition(const ZAQuiver& za, AutoEquivalence g, std::int64_t slices)
      : k_(za.rank()), slices_(slices), parent_(static_cast<std::size_t>(slices * k_)) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (std::int64_t p = 0; p < slices; ++p) {
      for (int i = 1; i <= k_; ++i) {
        ZAVertex v{p, i};
        ZAVertex w = apply(za, g, v);
        if (inside(w)) join(index(v), index(w));
      }
    }
  }

  bool inside(ZAVertex v) const { return v.slice >= 0 && v.slice < slices_; }
  std::size_t index(ZAVertex v) const { return static_cast<std::size_t>(v.slice * k_ + v.row - 1); }
  ZAVertex vertex(std::size_t idx) const {
    return {static_cast<std::int64_t>(idx / k_), static_cast<int>(idx % k_) + 1};
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  std::size_t class_count() {
    std::size_t count = 0;
    for (std::size_t v = 0; v < parent_.size(); ++v) count += find(v) == v;
    return count;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  int k_;
  std::int64_t slices_;
  std::vector<std::size_t> parent_;
};

constexpr std::int64_t kMaxWindow = std::int64_t{1} << 20;

}  // namespace

std::size_t orbit_quiver_size(int k, AutoEquivalence g) {
  require_auto_equivalence(k, g);
  ZAQuiver za(k);
  require_free(za, g);
  std::vector<ZAVertex> images;
  for (int i = 1; i <= k; ++i) images.push_back({0, i});
  for (std::size_t power = 1; power <= 2 * static_cast<std::size_t>(k) + 2; ++power) {
    for (ZAVertex& v : images) v = apply(za, g, v);
    bool pure = true;
    for (int i = 1; i <= k && pure; ++i) {
      pure = images[i - 1].row == i && images[i - 1].slice == images[0].slice;
    }
    if (pure) {
      const auto t = static_cast<std::size_t>(images[0].slice);
      return static_cast<std::size_t>(k) * t / power;
    }
  }
  throw std::logic_error("no power of the auto-equivalence is a pure translation");
}

OrbitQuiver orbit_quiver(int k, int s, int r) { return orbit_quiver(k, s, r, 4); }

OrbitQuiver orbit_quiver(int k, int s, int r, std::int64_t initial_window) {
  const AutoEquivalence g{s, r};
  require_auto_equivalence(k, g);
  ZAQuiver za(k);
  require_free(za, g);

  std::int64_t max_step = 0;
  for (int i = 1; i <= k; ++i) max_step = std::max(max_step, apply(za, g, {0, i}).slice);

  // Orbits advance monotonically in slice, so each orbit meets a window in a
  // g-connected run and the class count is the number of orbits that reach it.
  std::int64_t window = std::max<std::int64_t>(initial_window, max_step + 3);
  std::size_t count = SlicePartition(za, g, window).class_count();
  while (true) {
    if (2 * window > kMaxWindow) throw CapExceeded("orbit window did not stabilize");
    std::size_t doubled = SlicePartition(za, g, 2 * window).class_count();
    if (doubled == count) break;
    window *= 2;
    count = doubled;
  }

  SlicePartition part(za, g, window);
  std::map<std::size_t, std::size_t> class_of_root;  // root -> quotient vertex
  std::vector<ZAVertex> canonical;
  std::vector<ZAVertex> interior;  // representative with neighbors inside the window
  for (std::size_t idx = 0; idx < part.size(); ++idx) {
    std::size_t root = part.find(idx);
    ZAVertex v = part.vertex(idx);
    auto [it, fresh] = class_of_root.emplace(root, canonical.size());
    if (fresh) {
      canonical.push_back(v);
      interior.push_back({-1, 0});
    }
    ZAVertex& rep = interior[it->second];
    if (rep.slice < 0 && v.slice >= 1 && v.slice + 1 < window) rep = v;
  }

  // Index order of quotient vertices: by canonical representative.
  std::vector<std::size_t> order(canonical.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return canonical[a] < canonical[b]; });
  std::vector<VertexId> position(canonical.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<VertexId>(i);

  auto class_of = [&](ZAVertex v) -> VertexId {
    if (!part.inside(v)) throw std::logic_error("orbit representative too close to window edge");
    return position[class_of_root.at(part.find(part.index(v)))];
  };

  std::vector<std::string> labels(canonical.size());
  std::vector<Arrow> arrows;
  std::vector<std::optional<VertexId>> tau(canonical.size());
  OrbitQuiver out;
  out.representatives.resize(canonical.size());
  for (std::size_t c = 0; c < canonical.size(); ++c) {
    const VertexId here = position[c];
    if (interior[c].slice < 0) throw std::logic_error("orbit has no interior representative");
    labels[here] = za_label(canonical[c]);
    out.representatives[here] = canonical[c];
    for (ZAVertex w : za.successors(interior[c])) arrows.push_back({here, class_of(w)});
    tau[here] = class_of(ZAQuiver::tau(interior[c]));
  }

  out.k = k;
  out.g = g;
  out.window = window;
  out.quotient = TranslationQuiver(Quiver(std::move(labels), std::move(arrows)), std::move(tau));
  return out;
}

}  // namespace quiverkit
