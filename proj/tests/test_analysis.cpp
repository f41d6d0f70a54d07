#include <gtest/gtest.h>

#include "heptatri/analysis.hpp"
#include "heptatri/rules.hpp"

using namespace heptatri;

TEST(BlockedCells, NeedTwoColouredNeighbours) {
  Configuration c;
  // (1,1,1,3) touches (1,1,1,0), (1,1,1,1) and (1,1,1,2)
  c.set({{1, 1}, 1, 0}, states::B);
  EXPECT_EQ(blocked_cells(c).count({{1, 1}, 1, 3}), 0u);
  c.set({{1, 1}, 1, 2}, states::B);
  EXPECT_EQ(blocked_cells(c).count({{1, 1}, 1, 3}), 1u);
  for (const TriCoord& t : blocked_cells(c)) EXPECT_FALSE(t.hepta.is_central());
}

TEST(BlockedCells, StayWhiteUnderTwoState) {
  const Rule rule = rules::make_rule(rules::RuleId::TwoState);
  Simulator sim(init_config("core2"), rule);
  for (int i = 0; i < 12; ++i) sim.advance();
  const auto blocked = blocked_cells(sim.config());
  EXPECT_FALSE(blocked.empty());
  for (int i = 0; i < 12; ++i) sim.advance();
  for (const TriCoord& t : blocked) EXPECT_TRUE(sim.config().at(t).quiescent());
}

TEST(CompareResidue, Counts) {
  const std::set<TriCoord> a{{{1, 1}, 1, 0}, {{1, 1}, 1, 1}}, b{{{1, 1}, 1, 1}, {{1, 2}, 1, 1}, {{1, 3}, 1, 1}};
  const ResidueComparison r = compare_residue(a, b);
  EXPECT_EQ(r.common, 1u);
  EXPECT_DOUBLE_EQ(r.jaccard(), 0.25);
  EXPECT_DOUBLE_EQ(compare_residue({}, {}).jaccard(), 1.0);
}

TEST(ColonyComponents, SplitsOnGaps) {
  Configuration c;
  c.set({kCentral, 1, 2}, states::R);  // ignored
  c.set({{1, 1}, 1, 0}, states::Y);
  c.set({{1, 1}, 1, 3}, states::Y);
  c.set({{4, 7}, 2, 2}, states::V);
  EXPECT_EQ(colony_components(c), (std::vector<std::size_t>{2, 1}));
  EXPECT_TRUE(colony_components(init_config("hepta-core")).empty());
}
