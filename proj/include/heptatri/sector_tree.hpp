#pragma once

// The Fibonacci spanning tree of one angular sector of the heptagrid.
//
// Every sector of the {7,3} tiling is spanned by the same tree. Nodes are
// either black (two sons, B -> B* W) or white (three sons, W -> B W* W); the
// star marks the preferred son. The root is white. Nodes are numbered level by
// level, left to right, starting at 1 for the root; 0 is reserved for the
// central heptagon, which is the father of every root.
//
// The tables behind the queries are built level by level on demand and shared
// by every caller in the process.

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace heptatri {

using NodeIndex = std::uint64_t;

enum class Status : std::uint8_t { Black, White };

struct NodeRecord {
  NodeIndex nu = 0;
  Status status = Status::White;
  NodeIndex father = 0;         ///< 0 is the central heptagon
  NodeIndex preferred_son = 0;  ///< sigma(nu)
  int level = 0;                ///< root is on level 1
  bool on_leftmost = false;
  bool on_rightmost = false;

  bool operator==(const NodeRecord&) const = default;
};

/// Thrown when a query would need tables deeper than SectorTree::kMaxLevel.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class SectorTree {
 public:
  /// Level 18 holds F(36) ~ 1.5e7 nodes; beyond that the tables stop being cheap.
  static constexpr int kMaxLevel = 18;

  SectorTree() { build_root(); }
  SectorTree(const SectorTree&) = delete;
  SectorTree& operator=(const SectorTree&) = delete;

  /// Pre-sizes the tables so that every level <= @p level is available.
  void reserve_levels(int level) {
    if (level > built()) grow_to(level);
  }

  int built_levels() const { return built(); }

  NodeIndex level_first(int n) {
    check_level(n);
    reserve_levels(n);
    return levels_[n].first;
  }

  NodeIndex level_count(int n) {
    check_level(n);
    reserve_levels(n);
    return levels_[n].status.size();
  }

  int level_of(NodeIndex nu) {
    if (nu == 0) throw std::domain_error("node index 0 is the central heptagon, not a tree node");
    for (int n = 1;; ++n) {
      if (n > kMaxLevel) throw CapacityError("node " + std::to_string(nu) + " lies beyond level " +
                                             std::to_string(kMaxLevel));
      reserve_levels(n);
      const Level& lv = levels_[n];
      if (nu < lv.first + lv.status.size()) return n;
    }
  }

  Status status(NodeIndex nu) {
    const int n = level_of(nu);
    return levels_[n].status[nu - levels_[n].first] ? Status::White : Status::Black;
  }

  NodeIndex preferred_son(NodeIndex nu) {
    const int n = level_of(nu);
    const Level& lv = levels_[n];
    const std::size_t p = nu - lv.first;
    const NodeIndex next_first = lv.first + lv.status.size();
    return next_first + lv.sons_before[p] + (lv.status[p] ? 1 : 0);
  }

  NodeIndex father(NodeIndex nu) {
    const int n = level_of(nu);
    if (n == 1) return 0;
    const Level& up = levels_[n - 1];
    const std::uint64_t q = nu - levels_[n].first;
    // last parent whose son block starts at or before q
    std::size_t lo = 0, hi = up.status.size();
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (up.sons_before[mid] <= q) lo = mid; else hi = mid;
    }
    return up.first + lo;
  }

  NodeRecord record(NodeIndex nu) {
    NodeRecord r;
    r.nu = nu;
    r.level = level_of(nu);
    const Level& lv = levels_[r.level];
    const std::size_t p = nu - lv.first;
    r.status = lv.status[p] ? Status::White : Status::Black;
    r.father = father(nu);
    r.preferred_son = preferred_son(nu);
    r.on_leftmost = p == 0;
    r.on_rightmost = p + 1 == lv.status.size();
    return r;
  }

  /// Side of father(nu) shared with nu: 3/4/5 below a white father, 4/5 below a black one.
  int side_in_father(NodeIndex nu) {
    const NodeIndex f = father(nu);
    if (f == 0) throw std::domain_error("a sector root hangs off the central heptagon");
    return static_cast<int>(4 + static_cast<std::int64_t>(nu) - static_cast<std::int64_t>(preferred_son(f)));
  }

 private:
  struct Level {
    NodeIndex first = 0;
    std::vector<std::uint8_t> status;        // 1 = white
    std::vector<std::uint32_t> sons_before;  // sons of the nodes left of p, size() + 1 entries
  };

  static void check_level(int n) {
    if (n < 1) throw std::domain_error("tree levels start at 1");
    if (n > kMaxLevel) throw CapacityError("level " + std::to_string(n) + " exceeds " + std::to_string(kMaxLevel));
  }

  int built() const { return built_.load(std::memory_order_acquire); }

  static void index_sons(Level& lv) {
    lv.sons_before.assign(lv.status.size() + 1, 0);
    for (std::size_t i = 0; i < lv.status.size(); ++i)
      lv.sons_before[i + 1] = lv.sons_before[i] + (lv.status[i] ? 3 : 2);
  }

  void build_root() {
    Level& root = levels_[1];
    root.first = 1;
    root.status = {1};
    index_sons(root);
    built_.store(1, std::memory_order_release);
  }

  void grow_to(int level) {
    check_level(level);
    std::lock_guard<std::mutex> lock(grow_mutex_);
    for (int n = built(); n < level; ++n) {
      const Level& prev = levels_[n];
      Level& next = levels_[n + 1];
      next.first = prev.first + prev.status.size();
      next.status.clear();
      next.status.reserve(prev.sons_before.back());
      for (std::uint8_t white : prev.status) {
        next.status.push_back(0);
        next.status.push_back(1);
        if (white) next.status.push_back(1);
      }
      index_sons(next);
      built_.store(n + 1, std::memory_order_release);
    }
  }

  std::array<Level, kMaxLevel + 1> levels_{};
  std::atomic<int> built_{0};
  std::mutex grow_mutex_;
};

/// Process-wide tree shared by the navigation functions.
inline SectorTree& sector_tree() {
  static SectorTree tree;
  return tree;
}

inline NodeRecord node_record(std::int64_t nu) {
  if (nu < 1) throw std::domain_error("node_record: index must be >= 1, got " + std::to_string(nu));
  return sector_tree().record(static_cast<NodeIndex>(nu));
}

inline NodeIndex level_count(int n) {
  if (n < 1) throw std::domain_error("level_count: level must be >= 1");
  return sector_tree().level_count(n);
}

}  // namespace heptatri
