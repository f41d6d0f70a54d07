#pragma once

// Synchronous cellular automata over the 2-triangles of the heptatrigrid.
//
// State is sparse: only non-quiescent cells are stored. A step evaluates the
// coloured cells and their quiescent boundary against the previous snapshot;
// everything else stays quiescent and is never materialised.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tri_nav.hpp"

namespace heptatri {

struct CellState {
  std::uint8_t value = 0;

  constexpr bool quiescent() const { return value == 0; }
  constexpr auto operator<=>(const CellState&) const = default;
};

namespace states {
inline constexpr CellState W{0};  ///< the medium
inline constexpr CellState B{1};
inline constexpr CellState R{2};
inline constexpr CellState Y{3};
inline constexpr CellState V{4};
inline constexpr int kPaletteSize = 5;
}  // namespace states

/// Letter of a palette state, '?' for states outside the palette.
constexpr char state_letter(CellState s) {
  constexpr char letters[] = {'W', 'B', 'R', 'Y', 'V'};
  return s.value < states::kPaletteSize ? letters[s.value] : '?';
}

constexpr std::optional<CellState> state_from_letter(char c) {
  switch (c) {
    case 'W': return states::W;
    case 'B': return states::B;
    case 'R': return states::R;
    case 'Y': return states::Y;
    case 'V': return states::V;
    default: return std::nullopt;
  }
}

using Neighborhood = std::array<CellState, 3>;

/// Transition of one cell from its own state, its three neighbours (in neighbour order) and its slice/place.
using Transition = std::function<CellState(CellState self, const Neighborhood& nbrs, int slice, int place)>;

struct Rule {
  std::string name;
  Transition transition;
  /// Declares that non-quiescent cells never change; the engine checks it and exploits it.
  bool freezing = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rule broke its declared freezing contract.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A run outgrew its cell budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t step_reached)
      : std::runtime_error(what), step_reached_(step_reached) {}
  std::uint64_t step_reached() const { return step_reached_; }

 private:
  std::uint64_t step_reached_;
};

class Configuration {
 public:
  using Map = std::unordered_map<TriCoord, CellState>;

  CellState at(const TriCoord& t) const {
    auto it = cells_.find(t);
    return it == cells_.end() ? states::W : it->second;
  }

  /// Setting W removes the entry.
  void set(const TriCoord& t, CellState s) {
    if (!t.valid()) throw std::invalid_argument("invalid 2-triangle " + to_string(t));
    if (s.quiescent()) cells_.erase(t);
    else cells_[t] = s;
  }

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const Map& cells() const { return cells_; }

  std::uint64_t step() const { return step_; }
  void set_step(std::uint64_t s) { step_ = s; }

  std::vector<std::pair<TriCoord, CellState>> sorted() const {
    std::vector<std::pair<TriCoord, CellState>> out(cells_.begin(), cells_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Number of cells per state value; index 0 (W) is always 0.
  std::vector<std::size_t> population() const {
    std::vector<std::size_t> counts(states::kPaletteSize, 0);
    for (const auto& [t, s] : cells_) {
      if (s.value >= counts.size()) counts.resize(s.value + 1u, 0);
      ++counts[s.value];
    }
    return counts;
  }

  bool operator==(const Configuration& o) const { return step_ == o.step_ && cells_ == o.cells_; }

 private:
  Map cells_;
  std::uint64_t step_ = 0;
};

/// Named seeds: "core2" (the seven place-2 cells of the central heptagon) and "hepta-core".
inline Configuration init_config(std::string_view name) {
  Configuration c;
  if (name == "core2") {
    for (int tau = 1; tau <= 7; ++tau) c.set({kCentral, tau, 2}, states::R);
  } else if (name == "hepta-core") {
    for (int tau = 1; tau <= 7; ++tau) {
      c.set({kCentral, tau, 0}, states::V);
      c.set({kCentral, tau, 1}, states::Y);
      c.set({kCentral, tau, 2}, states::R);
      c.set({kCentral, tau, 3}, states::R);
    }
  } else {
    throw UsageError("unknown initial configuration '" + std::string(name) + "' (expected core2 or hepta-core)");
  }
  return c;
}

namespace detail {

inline Neighborhood gather(const Configuration& c, const TriCoord& t) {
  const auto ns = neighbors(t);
  return {c.at(ns[0]), c.at(ns[1]), c.at(ns[2])};
}

inline void check_frozen(const Rule& r, const TriCoord& t, CellState before, CellState after) {
  if (r.freezing && !before.quiescent() && after != before)
    throw IntegrityError("rule '" + r.name + "' declared freezing but recoloured " + to_string(t) + " from " +
                         state_letter(before) + " to " + state_letter(after));
}

}  // namespace detail

/**
 * One synchronous step over the whole update region (coloured cells and their
 * quiescent boundary). This is the reference scheduler; Simulator is faster for
 * freezing rules and must agree with it.
 */
inline Configuration step(const Configuration& c, const Rule& r) {
  std::unordered_set<TriCoord> region;
  region.reserve(c.size() * 4);
  for (const auto& [t, s] : c.cells()) {
    region.insert(t);
    for (const TriCoord& n : neighbors(t)) region.insert(n);
  }
  Configuration next;
  next.set_step(c.step() + 1);
  for (const TriCoord& t : region) {
    const CellState self = c.at(t);
    const CellState out = r.transition(self, detail::gather(c, t), t.slice, t.place);
    detail::check_frozen(r, t, self, out);
    next.set(t, out);
  }
  return next;
}

struct PopulationRow {
  std::uint64_t step = 0;
  std::vector<std::size_t> counts;  ///< indexed by state value
  std::size_t colored = 0;
  std::size_t newly_colored = 0;    ///< cells W at the previous step and coloured now
};

struct RunOptions {
  std::size_t max_cells = 10'000'000;
};

/**
 * Stateful stepping. For freezing rules only the quiescent neighbours of the
 * cells coloured at the previous step can change, so those are the only cells
 * evaluated; other rules fall back to step().
 */
class Simulator {
 public:
  Simulator(Configuration init, Rule rule, RunOptions opts = {})
      : config_(std::move(init)), rule_(std::move(rule)), opts_(opts) {
    frontier_.reserve(config_.size());
    for (const auto& [t, s] : config_.cells()) frontier_.push_back(t);
    std::sort(frontier_.begin(), frontier_.end());
    check_budget();
  }

  const Configuration& config() const { return config_; }
  const Rule& rule() const { return rule_; }

  /// Cells coloured by the last advance() (the seed cells before the first one).
  const std::vector<TriCoord>& frontier() const { return frontier_; }

  void advance() {
    if (!rule_.freezing) {
      Configuration next = heptatri::step(config_, rule_);
      std::vector<TriCoord> fresh;
      for (const auto& [t, s] : next.cells())
        if (config_.at(t).quiescent()) fresh.push_back(t);
      std::sort(fresh.begin(), fresh.end());
      config_ = std::move(next);
      frontier_ = std::move(fresh);
      check_budget();
      return;
    }

    std::unordered_set<TriCoord> candidates;
    candidates.reserve(frontier_.size() * 3);
    for (const TriCoord& t : frontier_) {
      const CellState self = config_.at(t);
      detail::check_frozen(rule_, t, self, rule_.transition(self, detail::gather(config_, t), t.slice, t.place));
      for (const TriCoord& n : neighbors(t))
        if (config_.at(n).quiescent()) candidates.insert(n);
    }
    std::vector<std::pair<TriCoord, CellState>> born;
    for (const TriCoord& t : candidates) {
      const CellState out = rule_.transition(states::W, detail::gather(config_, t), t.slice, t.place);
      if (!out.quiescent()) born.emplace_back(t, out);
    }
    std::sort(born.begin(), born.end());
    frontier_.clear();
    for (const auto& [t, s] : born) {
      config_.set(t, s);
      frontier_.push_back(t);
    }
    config_.set_step(config_.step() + 1);
    check_budget();
  }

  PopulationRow row() const {
    PopulationRow r;
    r.step = config_.step();
    r.counts = config_.population();
    r.colored = config_.size();
    r.newly_colored = config_.step() == 0 ? config_.size() : frontier_.size();
    return r;
  }

 private:
  void check_budget() const {
    if (config_.size() > opts_.max_cells)
      throw ResourceError("cell budget of " + std::to_string(opts_.max_cells) + " exceeded at step " +
                              std::to_string(config_.step()) + " (" + std::to_string(config_.size()) + " cells)",
                          config_.step());
  }

  Configuration config_;
  Rule rule_;
  RunOptions opts_;
  std::vector<TriCoord> frontier_;
};

struct RunResult {
  Configuration final;
  std::vector<PopulationRow> series;  ///< one row per step 0..n
};

inline RunResult run(const Configuration& init, const Rule& r, std::uint64_t n, RunOptions opts = {}) {
  Simulator sim(init, r, opts);
  RunResult out;
  out.series.reserve(n + 1);
  out.series.push_back(sim.row());
  for (std::uint64_t i = 0; i < n; ++i) {
    sim.advance();
    out.series.push_back(sim.row());
  }
  out.final = sim.config();
  return out;
}

}  // namespace heptatri
