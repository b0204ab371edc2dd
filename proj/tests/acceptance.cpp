// Acceptance suite: one line per criterion, exit status 0 iff every gating
// criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quiverkit/classify.hpp"
#include "quiverkit/mutation.hpp"
#include "quiverkit/orbit_model.hpp"
#include "quiverkit/polygon.hpp"
#include "quiverkit/power.hpp"

using namespace quiverkit;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

struct Outcome {
  bool passed = true;
  std::vector<std::string> problems;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      problems.push_back(what);
    }
  }
};

using Labels = std::set<std::pair<std::string, std::string>>;

Labels arrow_labels(const TranslationQuiver& tq) {
  Labels out;
  for (const Arrow& a : tq.quiver().arrows()) out.insert({tq.label(a.source), tq.label(a.target)});
  return out;
}

std::string tau_of(const TranslationQuiver& tq, const std::string& v) {
  auto id = tq.quiver().find(v);
  if (!id || !tq.tau(*id)) return "";
  return tq.label(*tq.tau(*id));
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

Outcome hexagon() {
  Outcome o;
  std::vector<double> times;
  TranslationQuiver g;
  for (int i = 0; i < 5; ++i) {
    auto t = Clock::now();
    g = gamma(4, 1);
    times.push_back(ms_since(t));
  }
  std::sort(times.begin(), times.end());
  const double median = times[2];

  o.require(g.vertex_count() == 9, "vertex count " + std::to_string(g.vertex_count()));
  const Labels built = arrow_labels(g);
  for (auto arrow : Labels{{"(1,3)", "(1,4)"}, {"(1,4)", "(1,5)"}, {"(1,5)", "(2,6)"}}) {
    o.require(built.count(arrow) == 1, "no arrow " + arrow.first + "->" + arrow.second);
  }
  o.require(tau_of(g, "(2,4)") == "(1,3)", "tau(2,4) is not (1,3)");

  // The drawn quiver, one copy of each vertex.
  const Labels drawn = {{"(1,3)", "(1,4)"}, {"(2,4)", "(2,5)"}, {"(3,5)", "(3,6)"}, {"(4,6)", "(1,4)"},
                        {"(1,4)", "(2,4)"}, {"(1,4)", "(1,5)"}, {"(2,5)", "(3,5)"}, {"(2,5)", "(2,6)"},
                        {"(3,6)", "(4,6)"}, {"(3,6)", "(1,3)"}, {"(1,5)", "(2,5)"}, {"(2,6)", "(3,6)"}};
  o.require(built == drawn && g.quiver().arrow_count() == drawn.size(), "arrows differ from the drawing");
  const std::map<std::string, std::string> drawn_tau = {
      {"(2,4)", "(1,3)"}, {"(3,5)", "(2,4)"}, {"(4,6)", "(3,5)"}, {"(1,5)", "(4,6)"}, {"(2,5)", "(1,4)"},
      {"(3,6)", "(2,5)"}, {"(1,4)", "(3,6)"}, {"(2,6)", "(1,5)"}, {"(1,3)", "(2,6)"}};
  for (const auto& [v, t] : drawn_tau) o.require(tau_of(g, v) == t, "tau" + v + " differs from the drawing");
  o.require(median < 1.0, "median build " + std::to_string(median) + " ms");
  std::ostringstream d;
  d << "9 vertices, " << g.quiver().arrow_count() << " arrows, build " << median << " ms";
  o.detail = d.str();
  return o;
}

Outcome octagon_vertices() {
  Outcome o;
  TranslationQuiver g = gamma(3, 2);
  const std::set<std::string> expected = {"(1,4)", "(3,6)", "(5,8)", "(2,7)", "(1,6)", "(3,8)", "(2,5)", "(4,7)"};
  const std::set<std::string> built(g.quiver().labels().begin(), g.quiver().labels().end());
  o.require(built == expected && g.vertex_count() == 8, "vertex set differs");
  o.detail = std::to_string(g.vertex_count()) + " vertices";
  return o;
}

Outcome decomposition() {
  Outcome o;
  auto t = Clock::now();
  PowerQuiver pq = power(gamma(6, 1), 2);
  auto parts = decompose(pq);
  std::vector<std::size_t> sizes;
  for (const auto& p : parts) sizes.push_back(p.vertices.size());
  o.require(sizes == std::vector<std::size_t>{8, 6, 6}, "sizes differ from 8, 6, 6");
  if (parts.size() == 3) {
    const VertexId root = pq.result.quiver().at("(1,4)");
    o.require(std::count(parts[0].vertices.begin(), parts[0].vertices.end(), root) == 1, "(1,4) not in size 8");
    o.require(iso_translation_quivers(parts[0].quiver, gamma(3, 2)).has_value(), "size 8 not iso to Gamma(3,2)");
    const TranslationQuiver cylinder = orbit_quiver(3, 0, 1).quotient;
    for (int i = 1; i <= 2; ++i) {
      o.require(iso_translation_quivers(parts[i].quiver, cylinder).has_value(), "size 6 not iso to orbit(3,0,1)");
    }
  }
  const double elapsed = ms_since(t);
  o.require(elapsed < 50.0, "took " + std::to_string(elapsed) + " ms");
  std::ostringstream d;
  d << "sizes 8, 6, 6 in " << elapsed << " ms";
  o.detail = d.str();
  return o;
}

Outcome theorem() {
  Outcome o;
  auto t = Clock::now();
  int cases = 0;
  for (int n = 2; n <= 12; ++n) {
    for (int m = 1; n * m + 2 <= 14; ++m) {
      ++cases;
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
      try {
        TranslationQuiver principal = principal_component(n, m);
        o.require(principal.vertex_count() == static_cast<std::size_t>((n - 1) * (n * m + 2) / 2),
                  tag + " wrong size");
        o.require(iso_translation_quivers(principal, gamma(n, m)).has_value(), tag + " not isomorphic");
      } catch (const std::exception& e) {
        o.require(false, tag + " " + e.what());
      }
    }
  }
  const double elapsed = ms_since(t);
  o.require(elapsed < 10000.0, "sweep took " + std::to_string(elapsed) + " ms");
  std::ostringstream d;
  d << cases << " pairs in " << elapsed << " ms";
  o.detail = d.str();
  return o;
}

Outcome stability() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 10; ++n) {
    for (int m = 1; m <= 4; ++m) {
      ++cases;
      TranslationQuiver base = gamma(n, 1);
      PowerQuiver pq = power(base, m);
      auto v = validate_translation_quiver(pq.result);
      const std::string tag = "Gamma(" + std::to_string(n) + ",1)^" + std::to_string(m);
      o.require(pq.result.vertex_count() == base.vertex_count(), tag + " changed vertex count");
      o.require(v.ok(), tag + " violates the mesh axiom");
      o.require(v.stable, tag + " not stable");
    }
  }
  o.detail = std::to_string(cases) + " powers";
  return o;
}

Outcome model() {
  Outcome o;
  int cases = 0;
  for (int k = 1; k <= 11; ++k) {
    for (int m = 1; (k + 1) * m <= 12; ++m) {
      ++cases;
      o.require(iso_translation_quivers(orbit_quiver(k, 1, m).quotient, gamma(k + 1, m)).has_value(),
                "orbit(" + std::to_string(k) + ",1," + std::to_string(m) + ") not iso to Gamma(" +
                    std::to_string(k + 1) + "," + std::to_string(m) + ")");
    }
  }
  o.detail = std::to_string(cases) + " pairs";
  return o;
}

Outcome mutation() {
  Outcome o;
  auto t = Clock::now();
  std::mt19937_64 rng(20080601);
  std::uniform_int_distribution<std::size_t> dimension(1, 6);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> magnitude(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dimension(rng);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const int a = entry(rng);
        m(i, j) = a;
        m(j, i) = a == 0 ? 0 : (a > 0 ? -magnitude(rng) : magnitude(rng));
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      o.require(mutate_entries(mutate_entries(m, k), k) == m, "matrix " + std::to_string(trial) + " not involutive");
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    Seed seed = initial_seed(type_a_matrix(n));
    for (std::size_t k = 0; k < n; ++k) {
      o.require(mutate_seed(mutate_seed(seed, k), k) == seed, "A_" + std::to_string(n) + " seed not involutive");
    }
  }
  auto a2 = enumerate_cluster_variables(type_a_matrix(2), 1000);
  o.require(a2.variables.size() == 5, "A_2 has " + std::to_string(a2.variables.size()) + " variables");
  for (const auto& x : a2.variables) o.require(is_laurent(x), x.to_string() + " not Laurent");
  auto a3 = enumerate_cluster_variables(type_a_matrix(3), 1000);
  o.require(a3.variables.size() == 9, "A_3 has " + std::to_string(a3.variables.size()) + " variables");
  for (std::size_t n = 1; n <= 4; ++n) {
    auto set = enumerate_cluster_variables(type_a_matrix(n), 100000);
    o.require(set.variables.size() == n * (n + 3) / 2, "A_" + std::to_string(n) + " count off");
    o.require(counting_check(n), "counting_check(" + std::to_string(n) + ") failed");
  }
  const double elapsed = ms_since(t);
  o.require(elapsed < 5000.0, "took " + std::to_string(elapsed) + " ms");
  std::ostringstream d;
  d << "200 matrices, A_2 = 5, A_3 = 9, counting n = 1..4 in " << elapsed << " ms";
  o.detail = d.str();
  return o;
}

Outcome angulations() {
  Outcome o;
  std::ostringstream d;
  for (int n = 2; n <= 6; ++n) {
    auto all = enumerate_angulations(n, 1);
    const std::uint64_t catalan = binomial(2 * n, n) / (n + 1);
    o.require(all.size() == catalan, std::to_string(n + 2) + "-gon: " + std::to_string(all.size()));
    for (const auto& a : all) o.require(a.size() == static_cast<std::size_t>(n - 1), "wrong size");
    d << all.size() << " ";
  }
  auto quads = enumerate_angulations(3, 2);
  o.require(quads.size() == binomial(9, 3) / 7, "octagon: " + std::to_string(quads.size()));
  for (const auto& a : quads) o.require(a.size() == 2, "wrong size");
  d << "triangulations, " << quads.size() << " quadrangulations";
  o.detail = d.str();
  return o;
}

Outcome rows() {
  Outcome o;
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}}) {
    const int N = n * m + 2;
    PowerQuiver pq = power(gamma(n * m, 1), m);
    std::map<VertexId, std::size_t> owner;
    auto parts = decompose(pq);
    for (std::size_t c = 0; c < parts.size(); ++c) {
      for (VertexId v : parts[c].vertices) owner[v] = c;
    }
    std::map<int, std::set<std::size_t>> by_row;
    for (VertexId v = 0; v < pq.result.vertex_count(); ++v) {
      by_row[row_of(*parse_diagonal_label(pq.result.label(v)), N)].insert(owner[v]);
    }
    for (const auto& [row, comps] : by_row) {
      o.require(comps.size() == 1, "(" + std::to_string(n) + "," + std::to_string(m) + ") row " +
                                       std::to_string(row) + " split");
    }
  }
  o.detail = "(2,3) and (3,3)";
  return o;
}

Outcome hypothesis() {
  Outcome o;
  std::ostringstream d;
  for (int n = 2; n <= 12; ++n) {
    for (int m = 1; n * m + 2 <= 14; ++m) {
      ComponentReport r = classify_components(n, m);
      for (const auto& c : r.others) {
        o.require(!c.matches.empty(), "unmatched component at " + c.least_label);
      }
      if (m % 2 == 1 && r.comparison.agrees) {
        d << " (" << n << "," << m << ")" << (*r.comparison.agrees ? "=" : "!=") << "formula";
      }
      if (m % 2 == 0 && r.comparison.r_within_even_bound) {
        d << " (" << n << "," << m << ")" << (*r.comparison.r_within_even_bound ? " r in" : " r outside")
          << " [m/2,m]";
      }
    }
  }
  o.detail = "all components matched;" + d.str();
  return o;
}

struct Criterion {
  int number;
  bool gating;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, true, "hexagon fixture", hexagon},
      {2, true, "octagon fixture", octagon_vertices},
      {3, true, "decomposition fixture", decomposition},
      {4, true, "theorem sweep", theorem},
      {5, true, "stability sweep", stability},
      {6, true, "model pinning", model},
      {7, true, "mutation", mutation},
      {8, true, "angulations", angulations},
      {9, true, "odd-m row property", rows},
      {10, false, "hypothesis report", hypothesis},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const char* verdict = o.passed ? "PASS" : (c.gating ? "FAIL" : "WARN");
    std::printf("criterion %2d %s  %s%s: %s\n", c.number, verdict, c.name, c.gating ? "" : " (non-gating)",
                o.detail.c_str());
    for (const auto& p : o.problems) std::printf("             - %s\n", p.c_str());
    if (c.gating && !o.passed) all = false;
  }
  std::printf("%s\n", all ? "acceptance: all gating criteria passed" : "acceptance: gating failures");
  return all ? 0 : 1;
}
