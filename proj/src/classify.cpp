#include "quiverkit/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quiverkit/parallel.hpp"
#include "quiverkit/polygon.hpp"

namespace quiverkit {

namespace {

std::vector<OrbitMatch> search_orbit_matches(const TranslationQuiver& component, int max_rank, int max_shift,
                                             std::size_t vertex_cap) {
  std::vector<OrbitMatch> matches;
  const std::size_t size = component.vertex_count();
  for (int k = 1; k <= max_rank; ++k) {
    for (int r = 1; r <= max_shift; ++r) {
      const int max_s = static_cast<int>(size) / k;
      for (int s = 0; s <= max_s; ++s) {
        if (s == 0 && r == 0) continue;
        if (orbit_quiver_size(k, {s, r}) != size) continue;
        OrbitQuiver candidate = orbit_quiver(k, s, r);
        if (iso_translation_quivers(component, candidate.quotient, vertex_cap)) matches.push_back({k, s, r});
      }
    }
  }
  return matches;
}

void compare_parameters(ComponentReport& report) {
  ParameterComparison& cmp = report.comparison;
  const int n = report.n;
  const int m = report.m;
  cmp.odd = m % 2 == 1;
  cmp.predicted_r = (m - 1) / 2;
  cmp.predicted_s = (m - 1) * (n - 1) / 2 + 1;

  if (report.others.empty()) {
    cmp.notes.push_back("no non-principal components");
    return;
  }

  bool all_below_n = true;
  std::set<int> r_values;
  for (const auto& c : report.others) {
    all_below_n = all_below_n && std::any_of(c.matches.begin(), c.matches.end(),
                                             [&](const OrbitMatch& x) { return x.s < n; });
    for (const auto& x : c.matches) r_values.insert(x.r);
  }
  cmp.s_below_n = all_below_n;
  cmp.observed_r.assign(r_values.begin(), r_values.end());

  if (cmp.odd) {
    bool agrees = std::all_of(report.others.begin(), report.others.end(), [&](const ClassifiedComponent& c) {
      return std::any_of(c.matches.begin(), c.matches.end(), [&](const OrbitMatch& x) {
        return x.r == cmp.predicted_r && x.s == cmp.predicted_s;
      });
    });
    cmp.agrees = agrees;
    if (!agrees) {
      cmp.notes.push_back("observed (r, s) differ from r = (m-1)/2, s = (m-1)(n-1)/2 + 1");
    }
  } else {
    // A component counts as inside the bound if one of its matches is.
    bool within = std::all_of(report.others.begin(), report.others.end(), [&](const ClassifiedComponent& c) {
      return std::any_of(c.matches.begin(), c.matches.end(),
                         [&](const OrbitMatch& x) { return 2 * x.r >= m && x.r <= m; });
    });
    cmp.r_within_even_bound = within;
    if (std::any_of(report.others.begin(), report.others.end(), [&](const ClassifiedComponent& c) {
          return std::any_of(c.matches.begin(), c.matches.end(), [&](const OrbitMatch& x) { return x.r == m; });
        })) {
      cmp.notes.push_back("r = m occurs");
    }
  }
  if (std::any_of(report.others.begin(), report.others.end(),
                  [](const ClassifiedComponent& c) { return c.matches.empty(); })) {
    cmp.notes.push_back("some components are unmatched");
  }
}

}  // namespace

ComponentReport classify_components(int n, int m) { return classify_components(n, m, default_vertex_cap()); }

ComponentReport classify_components(int n, int m, std::size_t vertex_cap) {
  if (n < 2 || m < 1) throw ArgumentError("classification needs n >= 2 and m >= 1");
  TranslationQuiver base = gamma(n * m, 1, vertex_cap);
  PowerQuiver pq = power(base, m);
  const VertexId root = pq.result.quiver().at(diagonal_label(make_diagonal(1, m + 2, n * m + 2)));

  ComponentReport report;
  report.n = n;
  report.m = m;
  report.principal_root = pq.result.label(root);
  report.repeated_arrows = pq.repeated_arrows.size();

  std::vector<PowerComponent> parts = decompose(pq);
  std::vector<const PowerComponent*> others;
  for (const PowerComponent& c : parts) {
    if (std::binary_search(c.vertices.begin(), c.vertices.end(), root)) {
      report.principal_size = c.vertices.size();
      report.principal_matches_gamma = iso_translation_quivers(c.quiver, gamma(n, m), vertex_cap).has_value();
    } else {
      others.push_back(&c);
    }
  }

  report.others.resize(others.size());
  parallel_for(others.size(), [&](std::size_t i) {
    const PowerComponent& c = *others[i];
    ClassifiedComponent& out = report.others[i];
    out.size = c.vertices.size();
    for (VertexId v : c.vertices) out.labels.push_back(pq.result.label(v));
    out.least_label = out.labels.front();
    out.matches = search_orbit_matches(c.quiver, n * m - 1, m, vertex_cap);
  });

  compare_parameters(report);
  return report;
}

namespace {

Json match_json(const OrbitMatch& x) { return Json{{"k", x.k}, {"s", x.s}, {"r", x.r}}; }

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json("n/a"); }

}  // namespace

Json to_json(const ComponentReport& report) {
  Json out = Json::object();
  out["schema"] = kSchema;
  out["n"] = report.n;
  out["m"] = report.m;
  out["principal"] = Json{{"size", report.principal_size},
                          {"root", report.principal_root},
                          {"iso_gamma", report.principal_matches_gamma}};
  Json others = Json::array();
  for (const auto& c : report.others) {
    Json item = Json::object();
    item["size"] = c.size;
    item["least_vertex"] = c.least_label;
    item["match"] = c.matches.empty() ? Json(nullptr) : match_json(c.matches.front());
    Json all = Json::array();
    for (const auto& x : c.matches) all.push_back(match_json(x));
    item["matches"] = std::move(all);
    others.push_back(std::move(item));
  }
  out["others"] = std::move(others);
  out["repeated_arrows"] = report.repeated_arrows;

  const ParameterComparison& cmp = report.comparison;
  Json observed = Json::array();
  for (const auto& c : report.others) {
    Json per = Json::array();
    for (const auto& x : c.matches) per.push_back(match_json(x));
    observed.push_back(std::move(per));
  }
  Json ducrest = Json::object();
  ducrest["predicted"] = cmp.odd ? Json{{"r", cmp.predicted_r}, {"s", cmp.predicted_s}} : Json(nullptr);
  ducrest["observed"] = std::move(observed);
  ducrest["agrees"] = cmp.odd ? optional_bool(cmp.agrees) : Json("n/a");
  ducrest["s_below_n"] = optional_bool(cmp.s_below_n);
  out["ducrest_odd_m"] = std::move(ducrest);
  if (!cmp.odd) {
    out["even_m"] = Json{{"bound", Json::array({report.m / 2, report.m})},
                         {"observed_r", cmp.observed_r},
                         {"within", optional_bool(cmp.r_within_even_bound)}};
  }
  out["notes"] = cmp.notes;
  return out;
}

std::string to_text(const ComponentReport& report) {
  std::ostringstream out;
  out << "Gamma(" << report.n * report.m << ",1)^" << report.m << ": " << report.others.size() + 1
      << " components\n";
  out << "  principal through " << report.principal_root << ": " << report.principal_size << " vertices, "
      << (report.principal_matches_gamma ? "isomorphic" : "NOT isomorphic") << " to Gamma(" << report.n << ","
      << report.m << ")\n";
  for (const auto& c : report.others) {
    out << "  component through " << c.least_label << ": " << c.size << " vertices, ";
    if (c.matches.empty()) {
      out << "unmatched\n";
      continue;
    }
    out << "matches";
    for (const auto& x : c.matches) out << " (k=" << x.k << ",s=" << x.s << ",r=" << x.r << ")";
    out << "\n";
  }
  const ParameterComparison& cmp = report.comparison;
  if (cmp.odd) {
    out << "  odd m prediction r=" << cmp.predicted_r << " s=" << cmp.predicted_s << ": "
        << (cmp.agrees ? (*cmp.agrees ? "agrees" : "differs") : "n/a") << "\n";
  } else if (cmp.r_within_even_bound) {
    out << "  even m bound m/2 <= r <= m: " << (*cmp.r_within_even_bound ? "holds" : "violated") << "\n";
  }
  for (const auto& note : cmp.notes) out << "  note: " << note << "\n";
  return out.str();
}

}  // namespace quiverkit
