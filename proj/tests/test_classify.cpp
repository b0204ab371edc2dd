#include <doctest.h>

#include <algorithm>

#include "quiverkit/classify.hpp"
#include "quiverkit/errors.hpp"
#include "quiverkit/orbit_model.hpp"
#include "quiverkit/parallel.hpp"

using namespace quiverkit;

TEST_CASE("octagon report") {
  ComponentReport report = classify_components(3, 2);
  CHECK(report.principal_size == 8);
  CHECK(report.principal_root == "(1,4)");
  CHECK(report.principal_matches_gamma);
  REQUIRE(report.others.size() == 2);
  for (const auto& c : report.others) {
    CHECK(c.size == 6);
    CHECK(std::find(c.matches.begin(), c.matches.end(), OrbitMatch{3, 0, 1}) != c.matches.end());
    CHECK(std::is_sorted(c.matches.begin(), c.matches.end()));
  }
  CHECK_FALSE(report.comparison.odd);
  CHECK(report.comparison.r_within_even_bound.has_value());
  CHECK(report.repeated_arrows == 0);

  Json j = to_json(report);
  CHECK(j["schema"] == "quiverkit/1");
  CHECK(j["principal"]["size"] == 8);
  CHECK(j["others"][0]["size"] == 6);
  CHECK(j["others"][0]["match"]["k"] == 3);
  CHECK(j["ducrest_odd_m"]["agrees"] == "n/a");
  CHECK(to_text(report).find("isomorphic to Gamma(3,2)") != std::string::npos);
}

TEST_CASE("every match is a genuine isomorphism with the right size") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}}) {
    ComponentReport report = classify_components(n, m);
    CHECK(report.principal_matches_gamma);
    for (const auto& c : report.others) {
      CHECK_FALSE(c.matches.empty());
      for (const auto& x : c.matches) {
        CHECK(x.r >= 1);
        CHECK(x.r <= m);
        CHECK(orbit_quiver_size(x.k, {x.s, x.r}) == c.size);
      }
    }
  }
}

TEST_CASE("odd m comparison always carries a verdict") {
  ComponentReport report = classify_components(2, 3);
  CHECK(report.comparison.odd);
  CHECK(report.comparison.predicted_r == 1);
  CHECK(report.comparison.predicted_s == 2);
  CHECK(report.comparison.agrees.has_value());
  Json j = to_json(report);
  CHECK(j["ducrest_odd_m"]["predicted"]["r"] == 1);
  CHECK(j["ducrest_odd_m"]["agrees"].is_boolean());
}

TEST_CASE("classification is deterministic across worker counts") {
  set_worker_limit(1);
  std::string a = to_json(classify_components(4, 3)).dump();
  set_worker_limit(4);
  std::string b = to_json(classify_components(4, 3)).dump();
  set_worker_limit(0);
  CHECK(a == b);
}

TEST_CASE("classification argument and cap errors") {
  CHECK_THROWS_AS(classify_components(1, 3), ArgumentError);
  CHECK_THROWS_AS(classify_components(4, 3, 10), CapExceeded);
}
