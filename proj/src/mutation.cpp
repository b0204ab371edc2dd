#include "quiverkit/mutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "quiverkit/errors.hpp"
#include "quiverkit/polygon.hpp"

namespace quiverkit {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ArgumentError("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(n_, std::vector<std::int64_t>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

bool is_sign_skew_symmetric(const IntMatrix& m) {
  auto sign = [](std::int64_t x) { return (x > 0) - (x < 0); };
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      if (sign(m(i, j)) != -sign(m(j, i))) return false;
    }
  }
  return true;
}

IntMatrix mutate_entries(const IntMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k >= n) throw std::out_of_range("mutation direction " + std::to_string(k) + " out of range");
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -m(i, j);
        continue;
      }
      const std::int64_t a = m(i, k);
      const std::int64_t b = m(k, j);
      // Both summands equal when a and b share a sign, cancel otherwise.
      const std::int64_t bracket = std::abs(a) * b + a * std::abs(b);
      if (bracket % 2 != 0) throw std::logic_error("odd mutation bracket");
      out(i, j) = m(i, j) + bracket / 2;
    }
  }
  return out;
}

ExchangeMatrix::ExchangeMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!is_sign_skew_symmetric(entries_)) throw ArgumentError("exchange matrix is not sign-skew-symmetric");
}

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  return ExchangeMatrix(IntMatrix::from_rows(rows));
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k) {
  IntMatrix out = mutate_entries(m.entries(), k);
  if (!is_sign_skew_symmetric(out)) {
    throw NotSignSkewSymmetric("mutation in direction " + std::to_string(k + 1) +
                               " leaves the sign-skew-symmetric matrices");
  }
  return ExchangeMatrix(std::move(out));
}

ExchangeMatrix type_a_matrix(std::size_t n) {
  if (n == 0) throw ArgumentError("type A needs rank >= 1");
  IntMatrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = 1;
    m(i + 1, i) = -1;
  }
  return ExchangeMatrix(std::move(m));
}

Seed initial_seed(const ExchangeMatrix& m) {
  Seed seed{{}, m};
  for (std::size_t i = 0; i < m.size(); ++i) seed.cluster.push_back(LaurentFraction::variable(m.size(), i));
  return seed;
}

namespace {

LaurentFraction power_of(const LaurentFraction& x, std::int64_t e) {
  return {pow(x.numerator(), static_cast<unsigned>(e)), pow(x.denominator(), static_cast<unsigned>(e))};
}

}  // namespace

Seed mutate_seed(const Seed& seed, std::size_t k) {
  const std::size_t n = seed.matrix.size();
  if (k >= n) throw std::out_of_range("mutation direction " + std::to_string(k) + " out of range");
  if (seed.cluster.size() != n) throw ArgumentError("cluster length does not match matrix size");
  if (seed.cluster[k].is_zero()) throw std::domain_error("cannot exchange a zero cluster variable");

  const std::size_t vars = seed.cluster[k].variables();
  LaurentFraction positive(Polynomial::constant(vars, 1), Polynomial::constant(vars, 1));
  LaurentFraction negative = positive;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t e = seed.matrix(i, k);
    if (e > 0) positive = positive * power_of(seed.cluster[i], e);
    if (e < 0) negative = negative * power_of(seed.cluster[i], -e);
  }

  Seed out{seed.cluster, mutate_matrix(seed.matrix, k)};
  out.cluster[k] = (positive + negative) / seed.cluster[k];
  return out;
}

namespace {

// Cluster sorted by canonical string, matrix permuted along with it.
std::string seed_key(const Seed& seed) {
  const std::size_t n = seed.cluster.size();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = seed.cluster[i].to_string();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });

  std::string key;
  for (std::size_t i : order) key += names[i] + ";";
  key += "|";
  for (std::size_t i : order) {
    for (std::size_t j : order) key += std::to_string(seed.matrix(i, j)) + ",";
  }
  return key;
}

}  // namespace

ClusterVariableSet enumerate_cluster_variables(const ExchangeMatrix& m, std::size_t seed_cap) {
  if (seed_cap == 0) throw ArgumentError("seed cap must be positive");
  ClusterVariableSet result;
  std::unordered_set<std::string> seen;
  std::set<std::string> names;
  std::vector<LaurentFraction> variables;
  std::deque<Seed> frontier;

  auto record = [&](const Seed& s) {
    for (const LaurentFraction& x : s.cluster) {
      if (names.insert(x.to_string()).second) variables.push_back(x);
    }
  };

  Seed start = initial_seed(m);
  seen.insert(seed_key(start));
  record(start);
  frontier.push_back(std::move(start));

  while (!frontier.empty()) {
    Seed current = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t k = 0; k < current.matrix.size(); ++k) {
      Seed next = mutate_seed(current, k);
      if (!seen.insert(seed_key(next)).second) continue;
      if (seen.size() > seed_cap) {
        result.cap_reached = true;
        frontier.clear();
        break;
      }
      record(next);
      frontier.push_back(std::move(next));
    }
  }

  result.seeds_visited = std::min(seen.size(), seed_cap);
  std::sort(variables.begin(), variables.end(),
            [](const LaurentFraction& a, const LaurentFraction& b) { return a.to_string() < b.to_string(); });
  result.variables = std::move(variables);
  return result;
}

bool counting_check(std::size_t n) {
  const auto variables = enumerate_cluster_variables(type_a_matrix(n), 100000);
  if (variables.cap_reached) return false;
  return variables.variables.size() == gamma(static_cast<int>(n) + 1, 1).vertex_count();
}

}  // namespace quiverkit
