#pragma once

// Self-checks of the navigation layer over a ball of heptagons.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ca_engine.hpp"
#include "disc_geometry.hpp"

namespace heptatri {

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string first_failure;

  void fail(const std::string& msg) {
    if (passed) first_failure = msg;
    passed = false;
  }
};

inline constexpr int kMaxValidationLevels = 5;

namespace detail {

/// Level sizes of the tree by literal expansion of B -> BW, W -> BWW.
inline std::vector<std::size_t> expanded_level_sizes(int levels) {
  std::vector<std::size_t> sizes;
  std::string level = "W";
  for (int n = 1; n <= levels; ++n) {
    sizes.push_back(level.size());
    std::string next;
    for (char c : level) next += c == 'B' ? "BW" : "BWW";
    level = std::move(next);
  }
  return sizes;
}

inline SuiteResult tree_laws(int levels) {
  SuiteResult r{"tree-laws"};
  SectorTree& tree = sector_tree();
  const auto sizes = expanded_level_sizes(levels + 1);
  for (int n = 1; n <= levels + 1; ++n, ++r.checked)
    if (tree.level_count(n) != sizes[static_cast<std::size_t>(n - 1)])
      r.fail("level " + std::to_string(n) + " size " + std::to_string(tree.level_count(n)));
  for (NodeIndex nu = 1; nu <= last_index_of_level(levels); ++nu, ++r.checked) {
    const NodeRecord rec = tree.record(nu);
    if (tree.father(rec.preferred_son) != nu) r.fail("f(sigma(" + std::to_string(nu) + ")) != nu");
    if (!(rec.father < nu && nu < rec.preferred_son)) r.fail("ordering broken at " + std::to_string(nu));
    if (rec.level > 1 && rec.on_leftmost && rec.status != Status::Black) r.fail("white leftmost node");
    if (rec.level > 1 && rec.on_rightmost && rec.status != Status::White) r.fail("black rightmost node");
  }
  return r;
}

inline SuiteResult hepta_involution(int levels) {
  SuiteResult r{"hepta-involution"};
  for (const HeptaCoord& h : ball_heptagons(levels)) {
    std::set<HeptaCoord> seen;
    for (int side = 1; side <= 7; ++side, ++r.checked) {
      const HeptaStep k = hepta_neighbor(h, side);
      const HeptaStep back = hepta_neighbor(k.hepta, k.side);
      if (back.hepta != h || back.side != side)
        r.fail(to_string(h) + " side " + std::to_string(side) + " does not come back");
      if (k.hepta == h || !seen.insert(k.hepta).second) r.fail(to_string(h) + " has a repeated neighbour");
    }
  }
  return r;
}

inline SuiteResult tri_involution(int levels) {
  SuiteResult r{"tri-involution"};
  for (const HeptaCoord& h : ball_heptagons(levels))
    for (const TriCoord& t : cells_of(h))
      for (int i = 1; i <= 3; ++i, ++r.checked) {
        const auto back = neighbors(tri_neighbor(t, i));
        if (std::find(back.begin(), back.end(), t) == back.end())
          r.fail(to_string(t) + " neighbour " + std::to_string(i) + " does not see it");
      }
  return r;
}

/// Combinatorial neighbours against the brute-force geometric adjacency.
inline SuiteResult oracle_equivalence(int levels) {
  SuiteResult r{"oracle"};
  const auto geo = geometric_adjacency(levels);
  std::map<TriCoord, std::vector<TriCoord>> adj;
  for (const auto& [a, b] : geo) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const auto& [a, b] : geo) {
    ++r.checked;
    const auto ns = neighbors(a);
    if (std::find(ns.begin(), ns.end(), b) == ns.end())
      r.fail("geometric pair " + to_string(a) + " " + to_string(b) + " is not combinatorial");
  }
  for (const HeptaCoord& h : ball_heptagons(levels))
    for (const TriCoord& t : cells_of(h)) {
      auto it = adj.find(t);
      if (it == adj.end() || it->second.size() != 3) continue;  // boundary cell of the ball
      ++r.checked;
      std::vector<TriCoord> g = it->second;
      auto ns = neighbors(t);
      std::vector<TriCoord> c(ns.begin(), ns.end());
      std::sort(g.begin(), g.end());
      std::sort(c.begin(), c.end());
      if (g != c) r.fail("neighbours of interior cell " + to_string(t) + " disagree with geometry");
    }
  return r;
}

}  // namespace detail

/// Runs every suite on the ball of heptagons up to @p levels (at most 5).
inline std::vector<SuiteResult> run_validation(int levels) {
  if (levels < 0 || levels > kMaxValidationLevels)
    throw UsageError("validation levels must be in 0.." + std::to_string(kMaxValidationLevels));
  return {detail::tree_laws(std::max(levels, 1)), detail::hepta_involution(levels), detail::tri_involution(levels),
          detail::oracle_equivalence(levels)};
}

}  // namespace heptatri
