#include "quiverkit/polygon.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "quiverkit/parallel.hpp"

namespace quiverkit {

namespace {

int wrap(int x, int polygon_size) {
  int r = ((x - 1) % polygon_size + polygon_size) % polygon_size;
  return r + 1;
}

void require_shape(int n, int m) {
  if (n < 2) throw ArgumentError("n must be at least 2, got " + std::to_string(n));
  if (m < 1) throw ArgumentError("m must be at least 1, got " + std::to_string(m));
}

}  // namespace

Diagonal make_diagonal(int i, int j, int polygon_size) {
  if (polygon_size < 3) throw ArgumentError("polygon needs at least 3 vertices");
  i = wrap(i, polygon_size);
  j = wrap(j, polygon_size);
  Diagonal d{std::min(i, j), std::max(i, j)};
  if (d.first == d.second || gap(d, polygon_size) < 2) {
    throw ArgumentError("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a diagonal");
  }
  return d;
}

int gap(Diagonal d, int polygon_size) {
  int g = d.second - d.first;
  return std::min(g, polygon_size - g);
}

std::string diagonal_label(Diagonal d) {
  return "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")";
}

std::optional<Diagonal> parse_diagonal_label(std::string_view label) {
  if (label.size() < 5 || label.front() != '(' || label.back() != ')') return std::nullopt;
  auto comma = label.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  Diagonal d;
  const char* begin = label.data() + 1;
  const char* mid = label.data() + comma;
  const char* end = label.data() + label.size() - 1;
  auto [p1, e1] = std::from_chars(begin, mid, d.first);
  auto [p2, e2] = std::from_chars(mid + 1, end, d.second);
  if (e1 != std::errc() || p1 != mid || e2 != std::errc() || p2 != end) return std::nullopt;
  return d;
}

bool is_m_diagonal(Diagonal d, int n, int m) {
  require_shape(n, m);
  const int polygon_size = n * m + 2;
  if (d.first < 1 || d.second > polygon_size || d.first >= d.second) return false;
  const int g = d.second - d.first;
  // Both gaps are then 1 mod m; j = (g-1)/m must leave two legal polygons.
  if ((g - 1) % m != 0) return false;
  const int j = (g - 1) / m;
  return j >= 1 && j <= n - 1;
}

bool crossing(Diagonal a, Diagonal b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

int row_of(Diagonal d, int polygon_size) { return gap(d, polygon_size) - 1; }

std::vector<Diagonal> m_diagonals(int n, int m) {
  require_shape(n, m);
  const int polygon_size = n * m + 2;
  std::vector<Diagonal> out;
  for (int i = 1; i <= polygon_size; ++i) {
    for (int j = i + 1; j <= polygon_size; ++j) {
      if (is_m_diagonal({i, j}, n, m)) out.push_back({i, j});
    }
  }
  return out;
}

TranslationQuiver gamma(int n, int m, std::size_t vertex_cap) {
  require_shape(n, m);
  const int polygon_size = n * m + 2;
  check_vertex_cap(static_cast<std::size_t>((n - 1) * polygon_size / 2), vertex_cap, "gamma");

  std::vector<Diagonal> diagonals = m_diagonals(n, m);
  std::map<Diagonal, VertexId> index;
  std::vector<std::string> labels;
  for (const Diagonal& d : diagonals) {
    index.emplace(d, static_cast<VertexId>(labels.size()));
    labels.push_back(diagonal_label(d));
  }

  auto lookup = [&](int i, int j) -> std::optional<VertexId> {
    i = wrap(i, polygon_size);
    j = wrap(j, polygon_size);
    if (i == j) return std::nullopt;
    auto it = index.find({std::min(i, j), std::max(i, j)});
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  std::vector<Arrow> arrows;
  std::vector<std::optional<VertexId>> tau(diagonals.size());
  for (std::size_t v = 0; v < diagonals.size(); ++v) {
    const auto [a, b] = diagonals[v];
    std::vector<VertexId> targets;
    for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
      if (auto t = lookup(i, j + m)) targets.push_back(*t);
      if (auto t = lookup(i + m, j)) targets.push_back(*t);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (VertexId t : targets) arrows.push_back({static_cast<VertexId>(v), t});
    tau[v] = lookup(a - m, b - m);
  }
  return TranslationQuiver(Quiver(std::move(labels), std::move(arrows)), std::move(tau));
}

TranslationQuiver gamma(int n, int m) { return gamma(n, m, default_vertex_cap()); }

namespace {

class AngulationSearch {
 public:
  AngulationSearch(std::vector<Diagonal> diagonals)
      : diagonals_(std::move(diagonals)),
        crosses_(diagonals_.size(), std::vector<bool>(diagonals_.size(), false)) {
    for (std::size_t a = 0; a < diagonals_.size(); ++a) {
      for (std::size_t b = 0; b < diagonals_.size(); ++b) {
        crosses_[a][b] = crossing(diagonals_[a], diagonals_[b]);
      }
    }
  }

  std::size_t size() const { return diagonals_.size(); }

  // Collections whose lexicographically first diagonal is `first`.
  std::vector<Angulation> starting_with(std::size_t first) const {
    std::vector<Angulation> found;
    std::vector<std::size_t> chosen{first};
    // Diagonals before `first` are excluded by construction; one of them not
    // crossing anything chosen would make the collection non-maximal.
    extend(first + 1, chosen, found);
    return found;
  }

 private:
  bool compatible(std::size_t d, const std::vector<std::size_t>& chosen) const {
    return std::none_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return crosses_[d][c]; });
  }

  bool maximal(const std::vector<std::size_t>& chosen) const {
    for (std::size_t d = 0; d < diagonals_.size(); ++d) {
      if (std::find(chosen.begin(), chosen.end(), d) == chosen.end() && compatible(d, chosen)) {
        return false;
      }
    }
    return true;
  }

  void extend(std::size_t next, std::vector<std::size_t>& chosen,
              std::vector<Angulation>& found) const {
    if (next == diagonals_.size()) {
      if (maximal(chosen)) {
        Angulation a;
        for (std::size_t c : chosen) a.push_back(diagonals_[c]);
        found.push_back(std::move(a));
      }
      return;
    }
    if (compatible(next, chosen)) {
      chosen.push_back(next);
      extend(next + 1, chosen, found);
      chosen.pop_back();
    }
    // Skipping `next` is only useful if something chosen later can block it,
    // or something already chosen does.
    bool blocked = !compatible(next, chosen);
    bool blockable = blocked;
    for (std::size_t d = next + 1; d < diagonals_.size() && !blockable; ++d) {
      blockable = crosses_[next][d] && compatible(d, chosen);
    }
    if (blockable) extend(next + 1, chosen, found);
  }

  std::vector<Diagonal> diagonals_;
  std::vector<std::vector<bool>> crosses_;
};

}  // namespace

std::vector<Angulation> enumerate_angulations(int n, int m, int max_polygon_size) {
  require_shape(n, m);
  if (n * m + 2 > max_polygon_size) {
    throw CapExceeded("angulation enumeration: polygon size " + std::to_string(n * m + 2) +
                      " exceeds cap " + std::to_string(max_polygon_size));
  }
  AngulationSearch search(m_diagonals(n, m));
  std::vector<std::vector<Angulation>> per_first(search.size());
  parallel_for(search.size(), [&](std::size_t first) { per_first[first] = search.starting_with(first); });

  std::vector<Angulation> all;
  for (auto& part : per_first) {
    for (auto& a : part) all.push_back(std::move(a));
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace quiverkit
