#pragma once

// Structural statistics of configurations: blocked white cells and colony components.

#include <algorithm>
#include <cstddef>
#include <set>
#include <unordered_set>
#include <vector>

#include "ca_engine.hpp"

namespace heptatri {

/**
 * White cells outside the central heptagon with at least two coloured
 * neighbours. Under the one-neighbour growth rules these stay white for ever.
 */
inline std::set<TriCoord> blocked_cells(const Configuration& c) {
  std::set<TriCoord> out;
  for (const auto& [t, s] : c.cells())
    for (const TriCoord& n : neighbors(t)) {
      if (n.hepta.is_central() || !c.at(n).quiescent()) continue;
      int coloured = 0;
      for (const TriCoord& m : neighbors(n)) coloured += c.at(m).quiescent() ? 0 : 1;
      if (coloured >= 2) out.insert(n);
    }
  return out;
}

struct ResidueComparison {
  std::size_t left = 0, right = 0, common = 0;
  double jaccard() const {
    const std::size_t uni = left + right - common;
    return uni == 0 ? 1.0 : static_cast<double>(common) / static_cast<double>(uni);
  }
};

inline ResidueComparison compare_residue(const std::set<TriCoord>& a, const std::set<TriCoord>& b) {
  ResidueComparison r{a.size(), b.size(), 0};
  for (const TriCoord& t : a) r.common += b.count(t);
  return r;
}

/// Sizes of the side-connected components of coloured cells outside the central heptagon, largest first.
inline std::vector<std::size_t> colony_components(const Configuration& c) {
  std::unordered_set<TriCoord> seen;
  std::vector<std::size_t> sizes;
  for (const auto& [start, s] : c.sorted()) {
    if (start.hepta.is_central() || seen.count(start)) continue;
    std::size_t size = 0;
    std::vector<TriCoord> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const TriCoord t = stack.back();
      stack.pop_back();
      ++size;
      for (const TriCoord& n : neighbors(t))
        if (!n.hepta.is_central() && !c.at(n).quiescent() && seen.insert(n).second) stack.push_back(n);
    }
    sizes.push_back(size);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace heptatri
