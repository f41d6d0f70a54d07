#pragma once

// Neighbour algebra of the heptagrid.
//
// A heptagon is addressed by (sector, nu). The central heptagon is (0, 0); its
// side i touches the root (i, 1) of sector i. Any other heptagon has side 1 on
// its father, sides 3..5 (white) or 4..5 (black) on its sons and side 7 on a
// neighbour of the same level. Neighbours across a sector border live in the
// adjacent tree: the low-index border (leftmost branch) looks into sector
// s+1, the high-index border (rightmost branch) into sector s-1.

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sector_tree.hpp"

namespace heptatri {

struct HeptaCoord {
  int sector = 0;  ///< 0 for the central heptagon, else 1..7
  NodeIndex nu = 0;

  bool is_central() const { return sector == 0; }
  bool valid() const { return (sector == 0 && nu == 0) || (sector >= 1 && sector <= 7 && nu >= 1); }

  auto operator<=>(const HeptaCoord&) const = default;
};

inline constexpr HeptaCoord kCentral{0, 0};

/// Neighbour across a side, and the number that side carries inside the neighbour.
struct HeptaStep {
  HeptaCoord hepta;
  int side = 0;

  bool operator==(const HeptaStep&) const = default;
};

/// Cyclic addition on 1..7: sector_add(1, -1) == 7, sector_add(7, 1) == 1.
constexpr int sector_add(int s, int delta) { return ((s - 1 + delta) % 7 + 7) % 7 + 1; }

inline std::string to_string(const HeptaCoord& h) {
  return "(" + std::to_string(h.sector) + "," + std::to_string(h.nu) + ")";
}

namespace detail {

inline void require_valid(const HeptaCoord& h, int side) {
  if (!h.valid()) throw std::invalid_argument("invalid heptagon " + to_string(h));
  if (side < 1 || side > 7) throw std::invalid_argument("side must be in 1..7, got " + std::to_string(side));
}

}  // namespace detail

/**
 * The heptagon across @p side of @p h, together with the number of that side
 * as seen from the neighbour.
 */
inline HeptaStep hepta_neighbor(const HeptaCoord& h, int side) {
  detail::require_valid(h, side);
  if (h.is_central()) return {{side, 1}, 1};

  SectorTree& tree = sector_tree();
  const int s = h.sector;
  const NodeIndex nu = h.nu;

  if (nu == 1) {
    const NodeIndex sigma = tree.preferred_son(1);
    switch (side) {
      case 1: return {kCentral, s};
      case 2: return {{sector_add(s, 1), 1}, 7};
      case 3: return {{s, sigma - 1}, 1};
      case 4: return {{s, sigma}, 1};
      case 5: return {{s, sigma + 1}, 1};
      case 6: return {{sector_add(s, -1), 2}, 2};
      default: return {{sector_add(s, -1), 1}, 2};
    }
  }

  const NodeRecord r = tree.record(nu);
  const NodeIndex f = r.father;
  const NodeIndex sigma = r.preferred_son;

  if (side == 1) {
    const auto below = static_cast<std::int64_t>(nu) - static_cast<std::int64_t>(tree.preferred_son(f));
    return {{s, f}, static_cast<int>(4 + below)};
  }
  if (side == 4) return {{s, sigma}, 1};
  if (side == 5) return {{s, sigma + 1}, 1};

  if (r.status == Status::Black) {
    const bool left = r.on_leftmost;
    switch (side) {
      case 2: return left ? HeptaStep{{sector_add(s, 1), nu - 1}, 6} : HeptaStep{{s, f - 1}, 6};
      case 3: return left ? HeptaStep{{sector_add(s, 1), sigma - 1}, 7} : HeptaStep{{s, nu - 1}, 7};
      case 6: return {{s, sigma + 2}, 2};
      default: return {{s, nu + 1}, 2};
    }
  }

  const bool right = r.on_rightmost;
  switch (side) {
    case 2: return {{s, nu - 1}, 7};
    case 3: return {{s, sigma - 1}, 1};
    case 6: return right ? HeptaStep{{sector_add(s, -1), nu + 1}, 2} : HeptaStep{{s, sigma + 2}, 2};
    default:
      if (right) return {{sector_add(s, -1), f + 1}, 3};
      return {{s, nu + 1}, tree.status(nu + 1) == Status::White ? 2 : 3};
  }
}

/// Last node index on tree level @p levels (0 for level 0).
inline NodeIndex last_index_of_level(int levels) {
  if (levels <= 0) return 0;
  SectorTree& tree = sector_tree();
  return tree.level_first(levels) + tree.level_count(levels) - 1;
}

/// The central heptagon followed by every tree heptagon of level <= @p levels, sector by sector.
inline std::vector<HeptaCoord> ball_heptagons(int levels) {
  std::vector<HeptaCoord> out{kCentral};
  const NodeIndex last = last_index_of_level(levels);
  out.reserve(1 + 7 * last);
  for (int s = 1; s <= 7; ++s)
    for (NodeIndex nu = 1; nu <= last; ++nu) out.push_back({s, nu});
  return out;
}

}  // namespace heptatri

template <>
struct std::hash<heptatri::HeptaCoord> {
  std::size_t operator()(const heptatri::HeptaCoord& h) const noexcept {
    return std::hash<std::uint64_t>{}(h.nu * 8 + static_cast<std::uint64_t>(h.sector));
  }
};
