#include <gtest/gtest.h>

#include "heptatri/rules.hpp"
#include "heptatri/snapshot.hpp"

using namespace heptatri;

TEST(Snapshot, Format) {
  Configuration c;
  c.set_step(4);
  c.set({{2, 10}, 3, 1}, states::Y);
  c.set({kCentral, 7, 2}, states::R);
  c.set({{2, 9}, 5, 0}, states::B);
  c.set({{2, 10}, 3, 0}, states::V);
  EXPECT_EQ(snapshot_text(c),
            "# step=4\n"
            "sector,nu,slice,place,state\n"
            "0,0,7,2,R\n"
            "2,9,5,0,B\n"
            "2,10,3,0,V\n"
            "2,10,3,1,Y\n");
}

TEST(Snapshot, RoundTripIsByteStable) {
  for (const char* seed : {"core2", "hepta-core"}) {
    const Configuration c = run(init_config(seed), rules::make_rule(rules::RuleId::FourV2), 15).final;
    const std::string text = snapshot_text(c);
    const Configuration back = parse_snapshot(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(snapshot_text(back), text);
  }
}

TEST(Snapshot, EmptyConfiguration) {
  const Configuration back = parse_snapshot("# step=0\nsector,nu,slice,place,state\n");
  EXPECT_TRUE(back.empty());
}

TEST(Snapshot, ToleratesCrlf) {
  const Configuration back = parse_snapshot("# step=2\r\nsector,nu,slice,place,state\r\n1,1,1,0,Y\r\n");
  EXPECT_EQ(back.step(), 2u);
  EXPECT_EQ(back.at({{1, 1}, 1, 0}), states::Y);
}

TEST(Snapshot, ErrorsNameTheLine) {
  const std::string head = "# step=1\nsector,nu,slice,place,state\n";
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_snapshot(text);
    } catch (const SnapshotError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of(head + "1,1,1,0,Y\n1,1,8,0,Y\n"), 4u);        // slice out of range
  EXPECT_EQ(line_of(head + "0,3,1,0,Y\n"), 3u);                  // central heptagon has nu 0
  EXPECT_EQ(line_of(head + "1,1,1,0,Q\n"), 3u);                  // unknown state
  EXPECT_EQ(line_of(head + "1,1,1,0,W\n"), 3u);                  // white is never stored
  EXPECT_EQ(line_of(head + "1,1,1,0\n"), 3u);                    // missing field
  EXPECT_EQ(line_of(head + "1,x,1,0,Y\n"), 3u);                  // not a number
  EXPECT_EQ(line_of(head + "1,1,1,0,Y\n1,1,1,0,V\n"), 4u);       // duplicate
  EXPECT_EQ(line_of("# step=1\nsector,nu,slice,state\n"), 2u);   // wrong header
  EXPECT_EQ(line_of("# step=z\nsector,nu,slice,place,state\n"), 1u);
  EXPECT_GT(line_of(""), 0u);
}
