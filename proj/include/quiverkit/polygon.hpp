#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Chord {first, second} of a polygon with vertices 1..N, stored with
// first < second. Coordinates are always in 1..N, never 0.
struct Diagonal {
  int first = 0;
  int second = 0;

  auto operator<=>(const Diagonal&) const = default;
};

// Reduces i and j modulo N into 1..N and orders them. Throws ArgumentError if
// the result is not a diagonal (equal or adjacent endpoints).
Diagonal make_diagonal(int i, int j, int polygon_size);

// Minimal cyclic distance between the endpoints.
int gap(Diagonal d, int polygon_size);

// "(i,j)"
std::string diagonal_label(Diagonal d);
std::optional<Diagonal> parse_diagonal_label(std::string_view label);

// d is an m-diagonal of the (nm+2)-gon: a cyclic gap equals m*j + 1 for some
// 1 <= j <= n-1.
bool is_m_diagonal(Diagonal d, int n, int m);

// Strict interleaving of endpoints; a shared endpoint is not a crossing.
bool crossing(Diagonal a, Diagonal b);

// gap - 1, using the minimal cyclic gap.
int row_of(Diagonal d, int polygon_size);

// m-diagonals of the (nm+2)-gon in increasing (first, second) order. Vertex v
// of gamma(n, m) is element v of this list.
std::vector<Diagonal> m_diagonals(int n, int m);

// The translation quiver Gamma(n, m) of m-diagonals of the (nm+2)-gon:
// arrows (i,j) -> (i,j+m) and (i,j) -> (i+m,j) taken from both ordered
// representatives of each diagonal, tau(i,j) = (i-m,j-m).
TranslationQuiver gamma(int n, int m, std::size_t vertex_cap);
TranslationQuiver gamma(int n, int m);

inline constexpr int kDefaultAngulationPolygonCap = 16;

using Angulation = std::vector<Diagonal>;

// All maximal collections of pairwise non-crossing m-diagonals of the
// (nm+2)-gon, each sorted, the list sorted lexicographically. Throws
// CapExceeded if nm+2 > max_polygon_size.
std::vector<Angulation> enumerate_angulations(int n, int m,
                                              int max_polygon_size = kDefaultAngulationPolygonCap);

}  // namespace quiverkit
