#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Vertex (slice, row) of ZA_k, rows 1..k.
struct ZAVertex {
  std::int64_t slice = 0;
  int row = 1;

  auto operator<=>(const ZAVertex&) const = default;
};

// ZA_k for the linear orientation 1 -> 2 -> ... -> k: arrows
// (p,i) -> (p,i+1) and (p,i+1) -> (p+1,i), translation (p,i) -> (p-1,i), and
// shift [1](p,i) = (p+i, k+1-i), so that [2] = tau^{-(k+1)}.
class ZAQuiver {
 public:
  explicit ZAQuiver(int k);

  int rank() const { return k_; }
  bool contains(ZAVertex v) const { return v.row >= 1 && v.row <= k_; }

  std::vector<ZAVertex> successors(ZAVertex v) const;
  std::vector<ZAVertex> predecessors(ZAVertex v) const;
  bool has_arrow(ZAVertex from, ZAVertex to) const;

  static ZAVertex tau(ZAVertex v) { return {v.slice - 1, v.row}; }
  static ZAVertex tau_inverse(ZAVertex v) { return {v.slice + 1, v.row}; }
  ZAVertex shift(ZAVertex v) const;

  // Slices first_slice..last_slice as a finite translation quiver; tau is
  // undefined on the first slice. Labels are "[p,i]".
  TranslationQuiver window(std::int64_t first_slice, std::int64_t last_slice) const;

 private:
  int k_;
};

ZAVertex shift(int k, ZAVertex v);

// tau^{-s} o [r]
struct AutoEquivalence {
  int s = 0;
  int r = 0;

  auto operator<=>(const AutoEquivalence&) const = default;
};

ZAVertex apply(const ZAQuiver& za, AutoEquivalence g, ZAVertex v);

class NonFreeAction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Number of g-orbits, from the smallest power g^j that is a pure translation
// tau^{-t}: k*t/j.
std::size_t orbit_quiver_size(int k, AutoEquivalence g);

struct OrbitQuiver {
  int k = 1;
  AutoEquivalence g;
  TranslationQuiver quotient;
  // Canonical representative of each quotient vertex (least slice >= 0).
  std::vector<ZAVertex> representatives;
  // Number of slices in the window the quotient was read from.
  std::int64_t window = 0;
};

// Finite quotient ZA_k / <tau^{-s} o [r]>. Orbits are collected on a window of
// slices that doubles until the orbit count stops changing. Throws
// ArgumentError for k < 1, negative or zero (s, r); NonFreeAction if g fixes a
// vertex; CapExceeded if the window never stabilizes.
OrbitQuiver orbit_quiver(int k, int s, int r);
OrbitQuiver orbit_quiver(int k, int s, int r, std::int64_t initial_window);

}  // namespace quiverkit
