#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiverkit/polynomial.hpp"

namespace quiverkit {

// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }
  std::vector<std::vector<std::int64_t>> rows() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

// M_ij > 0 iff M_ji < 0, and M_ij = 0 iff M_ji = 0.
bool is_sign_skew_symmetric(const IntMatrix& m);

// The matrix mutation formula in direction k (0-based) applied to any square
// integer matrix: -M_ij if i = k or j = k, otherwise
// M_ij + (|M_ik| M_kj + M_ik |M_kj|) / 2. Involutive on every input.
IntMatrix mutate_entries(const IntMatrix& m, std::size_t k);

class NotSignSkewSymmetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Sign-skew-symmetric integer matrix.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  // Throws ArgumentError if not square or not sign-skew-symmetric.
  explicit ExchangeMatrix(IntMatrix entries);
  static ExchangeMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const { return entries_; }

  bool operator==(const ExchangeMatrix&) const = default;

 private:
  IntMatrix entries_;
};

// Throws std::out_of_range for k >= n and NotSignSkewSymmetric when the result
// leaves the class (possible for matrices that are not skew-symmetrizable).
ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k);

// Linear A_n: M_{i,i+1} = 1, M_{i+1,i} = -1.
ExchangeMatrix type_a_matrix(std::size_t n);

struct Seed {
  std::vector<LaurentFraction> cluster;
  ExchangeMatrix matrix;

  bool operator==(const Seed&) const = default;
};

// ((u_1, ..., u_n), m)
Seed initial_seed(const ExchangeMatrix& m);

// Replaces x_k by (prod_{M_ik > 0} x_i^{M_ik} + prod_{M_ik < 0} x_i^{-M_ik}) / x_k
// and mutates the matrix. Empty products are 1. k is 0-based.
Seed mutate_seed(const Seed& seed, std::size_t k);

struct ClusterVariableSet {
  // Distinct cluster variables, ordered by their canonical strings.
  std::vector<LaurentFraction> variables;
  std::size_t seeds_visited = 0;
  bool cap_reached = false;
};

// Breadth-first closure of the initial seed under all mutations. Seeds are
// identified up to simultaneous relabeling of cluster and matrix. Stops
// exploring once more than `seed_cap` distinct seeds have been seen.
ClusterVariableSet enumerate_cluster_variables(const ExchangeMatrix& m, std::size_t seed_cap);

// Number of cluster variables of type A_n equals the number of diagonals of
// an (n+3)-gon, i.e. the vertex count of gamma(n+1, 1).
bool counting_check(std::size_t n);

}  // namespace quiverkit
