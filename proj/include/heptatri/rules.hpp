#pragma once

// The three colony-growth rules: two-state, four-state v1 and v2.
//
// All three are freezing: a coloured cell keeps its colour for ever, and only
// a white cell (W) can change.

#include <algorithm>
#include <array>
#include <string>
#include <string_view>

#include "ca_engine.hpp"

namespace heptatri::rules {

enum class RuleId { TwoState, FourV1, FourV2 };

inline constexpr std::array<std::string_view, 3> kRuleNames = {"two-state", "four-v1", "four-v2"};

constexpr std::string_view name_of(RuleId id) { return kRuleNames[static_cast<std::size_t>(id)]; }

namespace detail {

inline int count_colored(const Neighborhood& nbrs) {
  return static_cast<int>(std::count_if(nbrs.begin(), nbrs.end(), [](CellState s) { return !s.quiescent(); }));
}

/// The single coloured neighbour, or W if there is not exactly one.
inline CellState lone_colored(const Neighborhood& nbrs) {
  CellState found = states::W;
  for (CellState s : nbrs) {
    if (s.quiescent()) continue;
    if (!found.quiescent()) return states::W;
    found = s;
  }
  return found;
}

}  // namespace detail

/// Any non-white state counts as colony; a white cell with exactly one coloured neighbour turns black.
inline CellState two_state(CellState self, const Neighborhood& nbrs) {
  if (!self.quiescent()) return self;
  return detail::count_colored(nbrs) == 1 ? states::B : states::W;
}

/// A white cell with exactly one coloured neighbour takes that neighbour's colour.
inline CellState four_v1(CellState self, const Neighborhood& nbrs) {
  if (!self.quiescent()) return self;
  return detail::lone_colored(nbrs);
}

/**
 * Four states with a little geometry: the cell knows its place and whether it
 * sits in slice 1. Precedence: frozen colours, then (e), (b), (c), (d).
 */
inline CellState four_v2(CellState self, const Neighborhood& nbrs, int slice, int place) {
  using namespace states;
  if (!self.quiescent()) return self;

  const auto has = [&](CellState s) { return std::find(nbrs.begin(), nbrs.end(), s) != nbrs.end(); };
  const int whites = static_cast<int>(std::count(nbrs.begin(), nbrs.end(), W));

  // (e) neighbours are exactly {W, Y, V}
  if (whites == 1 && has(Y) && has(V) && slice == 1 && place == 3) return R;

  if (whites != 2) return W;
  const CellState third = detail::lone_colored(nbrs);

  // (b)
  if (slice == 1) return third;
  // (c) R -> Y, Y -> V, V -> R
  if (place == 2) {
    if (third == R) return Y;
    if (third == Y) return V;
    if (third == V) return R;
    return W;
  }
  // (d)
  if (third == R) {
    if (place == 3) return R;
    return place == 0 ? V : Y;
  }
  return W;
}

inline Rule make_rule(RuleId id) {
  switch (id) {
    case RuleId::TwoState:
      return {std::string(name_of(id)), [](CellState s, const Neighborhood& n, int, int) { return two_state(s, n); },
              true};
    case RuleId::FourV1:
      return {std::string(name_of(id)), [](CellState s, const Neighborhood& n, int, int) { return four_v1(s, n); },
              true};
    default:
      return {std::string(name_of(id)), four_v2, true};
  }
}

/// Rule by CLI name; throws UsageError for anything else.
inline Rule rule_by_name(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return make_rule(static_cast<RuleId>(i));
  throw UsageError("unknown rule '" + std::string(name) + "' (expected two-state, four-v1 or four-v2)");
}

}  // namespace heptatri::rules
