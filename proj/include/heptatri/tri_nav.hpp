#pragma once

// 2-triangle coordinates of the heptatrigrid and their side neighbours.
//
// Each heptagon is cut into seven slices (the triangle on side tau with the
// heptagon centre as apex) and each slice into four places: 0 and 1 at the two
// ends of the heptagon side, 2 at the centre, 3 the medial triangle. Corner 0
// of slice tau is the end it shares with slice tau-1, corner 1 the end it
// shares with slice tau+1.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "hepta_nav.hpp"

namespace heptatri {

struct TriCoord {
  HeptaCoord hepta;
  int slice = 1;  ///< 1..7
  int place = 0;  ///< 0..3

  bool valid() const { return hepta.valid() && slice >= 1 && slice <= 7 && place >= 0 && place <= 3; }

  /// Lexicographic by (sector, nu, slice, place).
  auto operator<=>(const TriCoord&) const = default;
};

inline std::string to_string(const TriCoord& t) {
  return "(" + std::to_string(t.hepta.sector) + "," + std::to_string(t.hepta.nu) + "," + std::to_string(t.slice) +
         "," + std::to_string(t.place) + ")";
}

/// The cell across the heptagon side of slice t.slice, for places 0 and 1.
inline TriCoord cross_edge(const TriCoord& t) {
  const HeptaStep k = hepta_neighbor(t.hepta, t.slice);
  // Tree heptagons are all numbered with the same orientation and the central one
  // with the opposite: the corner swap 0 <-> 1 holds only between two tree heptagons.
  const bool same_orientation = !t.hepta.is_central() && !k.hepta.is_central();
  const int place = same_orientation ? 1 - t.place : t.place;
  return {k.hepta, k.side, place};
}

/**
 * Neighbour @p i (1..3) of @p t; neighbour i shares side i of the triangle.
 * Neighbour 0 would be the cell itself.
 */
inline TriCoord tri_neighbor(const TriCoord& t, int i) {
  if (!t.valid()) throw std::invalid_argument("invalid 2-triangle " + to_string(t));
  if (i < 1 || i > 3) throw std::invalid_argument("neighbour index must be in 1..3, got " + std::to_string(i));
  const HeptaCoord& h = t.hepta;
  const int tau = t.slice;
  switch (t.place) {
    case 0:
      if (i == 1) return {h, tau, 3};
      if (i == 2) return cross_edge(t);
      return {h, sector_add(tau, -1), 1};
    case 1:
      if (i == 1) return cross_edge(t);
      if (i == 2) return {h, tau, 3};
      return {h, sector_add(tau, 1), 0};
    case 2:
      if (i == 1) return {h, sector_add(tau, -1), 2};
      if (i == 2) return {h, sector_add(tau, 1), 2};
      return {h, tau, 3};
    default:
      return {h, tau, i - 1};
  }
}

inline std::array<TriCoord, 3> neighbors(const TriCoord& t) {
  return {tri_neighbor(t, 1), tri_neighbor(t, 2), tri_neighbor(t, 3)};
}

/// All 28 cells of a heptagon, in coordinate order.
inline std::array<TriCoord, 28> cells_of(const HeptaCoord& h) {
  std::array<TriCoord, 28> out{};
  std::size_t k = 0;
  for (int tau = 1; tau <= 7; ++tau)
    for (int pi = 0; pi <= 3; ++pi) out[k++] = {h, tau, pi};
  return out;
}

}  // namespace heptatri

template <>
struct std::hash<heptatri::TriCoord> {
  std::size_t operator()(const heptatri::TriCoord& t) const noexcept {
    std::uint64_t x = t.hepta.nu;
    x = x * 8 + static_cast<std::uint64_t>(t.hepta.sector);
    x = x * 8 + static_cast<std::uint64_t>(t.slice);
    x = x * 4 + static_cast<std::uint64_t>(t.place);
    // splitmix64 finaliser
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};
