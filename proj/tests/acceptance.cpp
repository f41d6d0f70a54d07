// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "heptatri/heptatri.hpp"

namespace fs = std::filesystem;
using namespace heptatri;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cli(const std::string& args) {
  const int status = std::system((std::string("\"") + HEPTATRI_CLI + "\" " + args).c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int reach(const Configuration& c) {
  int level = 0;
  for (const auto& [t, s] : c.cells())
    if (!t.hepta.is_central()) level = std::max(level, sector_tree().level_of(t.hepta.nu));
  return level;
}

const Rule& two_state() {
  static const Rule r = rules::make_rule(rules::RuleId::TwoState);
  return r;
}

// Step-36 two-state colony shared by criteria 4 and 6.
const RunResult& two_state_36() {
  static const RunResult r = run(init_config("core2"), two_state(), 36);
  return r;
}

Verdict involution() {
  Verdict v;
  const auto t0 = Clock::now();
  std::size_t cells = 0;
  for (const HeptaCoord& h : ball_heptagons(5))
    for (const TriCoord& t : cells_of(h)) {
      ++cells;
      for (const TriCoord& n : neighbors(t)) {
        const auto back = neighbors(n);
        v.require(std::find(back.begin(), back.end(), t) != back.end(), to_string(t) + " -> " + to_string(n));
      }
    }
  const double dt = seconds_since(t0);
  v.require(dt < 5.0, "took " + fmt(dt) + " s");
  if (v.ok) v.detail = std::to_string(cells) + " cells, " + fmt(dt) + " s";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  const auto t0 = Clock::now();
  const SuiteResult r = detail::oracle_equivalence(4);
  const double dt = seconds_since(t0);
  v.require(r.passed, r.first_failure);
  v.require(dt < 60.0, "took " + fmt(dt) + " s");
  if (v.ok) v.detail = std::to_string(r.checked) + " checks, " + fmt(dt) + " s";
  return v;
}

Verdict tree_laws() {
  Verdict v;
  SectorTree& tree = sector_tree();
  for (NodeIndex nu = 1; nu <= 100'000; ++nu) {
    const NodeIndex s = tree.preferred_son(nu);
    v.require(tree.father(s) == nu, "f(sigma(" + std::to_string(nu) + ")) != " + std::to_string(nu));
  }
  // brute force: expand the level word, a black node has sons BW and a white node BWW
  std::string word = "W";
  std::vector<std::uint64_t> counts;
  for (int n = 1; n <= 10; ++n) {
    counts.push_back(word.size());
    v.require(tree.level_count(n) == word.size(), "level " + std::to_string(n) + " count");
    std::string next;
    for (char c : word) next += c == 'B' ? "BW" : "BWW";
    word.swap(next);
  }
  for (std::size_t n = 2; n < counts.size(); ++n)
    v.require(counts[n] == 3 * counts[n - 1] - counts[n - 2], "recurrence at level " + std::to_string(n + 1));
  if (v.ok) v.detail = "levels 1..10: 1, 3, 8, 21, 55, ..., " + std::to_string(counts.back());
  return v;
}

Verdict two_state_run() {
  Verdict v;
  const auto t0 = Clock::now();
  Simulator sim(init_config("core2"), two_state());
  std::size_t previous = sim.config().size();
  for (int t = 1; t <= 36; ++t) {
    const Configuration before = sim.config();
    sim.advance();
    v.require(sim.config().size() > previous, "count did not increase at step " + std::to_string(t));
    previous = sim.config().size();
    for (const TriCoord& c : sim.frontier()) {
      int coloured = 0;
      for (const TriCoord& n : neighbors(c)) coloured += before.at(n).quiescent() ? 0 : 1;
      v.require(coloured == 1, to_string(c) + " coloured with " + std::to_string(coloured) + " coloured neighbours");
    }
  }
  const double dt = seconds_since(t0);
  v.require(dt < 60.0, "took " + fmt(dt) + " s");
  const Configuration& last = sim.config();
  v.require(last == two_state_36().final, "simulator and run() disagree");

  std::size_t pairs = 0;
  for (const TriCoord& a : blocked_cells(last))
    for (const TriCoord& b : neighbors(a)) {
      if (!(a < b) || !last.at(b).quiescent()) continue;
      bool enclosed = true;
      for (const TriCoord& n : neighbors(a)) enclosed = enclosed && (n == b || !last.at(n).quiescent());
      for (const TriCoord& n : neighbors(b)) enclosed = enclosed && (n == a || !last.at(n).quiescent());
      pairs += enclosed ? 1 : 0;
    }
  v.require(pairs > 0, "no enclosed pair of adjacent white cells");
  if (v.ok)
    v.detail = std::to_string(last.size()) + " coloured cells, " + std::to_string(pairs) + " enclosed white pairs, " +
               fmt(dt) + " s";
  return v;
}

Verdict four_v1_run() {
  Verdict v;
  Simulator sim(init_config("hepta-core"), rules::make_rule(rules::RuleId::FourV1));
  for (int t = 0; t <= 36; ++t) {
    if (t > 0) sim.advance();
    std::size_t red = 0;
    for (const auto& [c, s] : sim.config().cells()) {
      if (s != states::R) continue;
      ++red;
      v.require(c.hepta.is_central(), "red cell " + to_string(c) + " at step " + std::to_string(t));
    }
    v.require(red == 14, std::to_string(red) + " red cells at step " + std::to_string(t));
  }
  if (v.ok) v.detail = "red = 14 at every step, " + std::to_string(sim.config().size()) + " coloured at step 36";
  return v;
}

Verdict four_v2_run() {
  Verdict v;
  const Configuration c = run(init_config("hepta-core"), rules::make_rule(rules::RuleId::FourV2), 36).final;
  for (const auto& [t, s] : c.cells()) {
    if (t.hepta.is_central()) continue;
    const bool allowed = t.slice == 1 || t.slice == 4 || t.slice == 5 || t.place == 2;
    v.require(allowed, to_string(t) + " is coloured");
  }
  const auto pop = c.population();
  // W is the background; it is present as long as the colony is finite
  for (CellState s : {states::R, states::Y, states::V})
    v.require(pop[s.value] > 0, std::string("state ") + state_letter(s) + " absent");
  const std::size_t two = two_state_36().final.size();
  v.require(c.size() < two, std::to_string(c.size()) + " >= two-state's " + std::to_string(two));
  if (v.ok)
    v.detail = "R " + std::to_string(pop[states::R.value]) + ", Y " + std::to_string(pop[states::Y.value]) + ", V " +
               std::to_string(pop[states::V.value]) + "; " + std::to_string(c.size()) + " < " + std::to_string(two);
  return v;
}

Verdict totality() {
  Verdict v;
  std::size_t tuples = 0;
  for (auto id : {rules::RuleId::TwoState, rules::RuleId::FourV1, rules::RuleId::FourV2}) {
    const Rule rule = rules::make_rule(id);
    for (std::uint8_t self = 0; self < states::kPaletteSize; ++self)
      for (std::uint8_t a = 0; a < states::kPaletteSize; ++a)
        for (std::uint8_t b = 0; b < states::kPaletteSize; ++b)
          for (std::uint8_t c = 0; c < states::kPaletteSize; ++c)
            for (int slice = 1; slice <= 7; ++slice)
              for (int place = 0; place <= 3; ++place) {
                ++tuples;
                CellState out;
                try {
                  out = rule.transition(CellState{self}, {CellState{a}, CellState{b}, CellState{c}}, slice, place);
                } catch (const std::exception& e) {
                  v.require(false, rule.name + " threw: " + e.what());
                  continue;
                }
                v.require(out.value < states::kPaletteSize, rule.name + " left the palette");
                v.require(self == 0 || out.value == self, rule.name + " recoloured a coloured cell");
              }
  }
  if (v.ok) v.detail = std::to_string(tuples) + " tuples over 3 rules";
  return v;
}

Verdict persistence(const fs::path& dir) {
  Verdict v;
  const std::string a = (dir / "run-a.csv").string(), b = (dir / "run-b.csv").string();
  for (const std::string& out : {a, b})
    v.require(cli("simulate --rule four-v2 --init hepta-core --steps 36 --out " + out) == 0, "simulate failed");
  const std::string text = slurp(a);
  v.require(!text.empty() && text == slurp(b), "two simulate runs differ");
  v.require(snapshot_text(parse_snapshot(text)) == text, "snapshot round-trip changed bytes");
  const std::string c = (dir / "run-c.csv").string();
  v.require(cli("simulate --rule four-v2 --init " + a + " --steps 0 --out " + c) == 0, "reload failed");
  v.require(slurp(c) == text, "reload changed bytes");
  const std::string s1 = (dir / "render-1.svg").string(), s2 = (dir / "render-2.svg").string();
  for (const std::string& out : {s1, s2})
    v.require(cli("render --snapshot " + a + " --out " + out + " --levels 4 --grid on") == 0, "render failed");
  v.require(slurp(s1) == slurp(s2) && !slurp(s1).empty(), "two renders differ");
  if (v.ok) v.detail = "snapshots, round-trip and renders are byte-identical";
  return v;
}

Verdict figures(const fs::path& dir) {
  Verdict v;
  struct Figure {
    const char* name;
    rules::RuleId rule;
    const char* seed;
    bool grid;
  };
  const Figure figs[] = {{"two-state-grid", rules::RuleId::TwoState, "core2", true},
                         {"four-v1-grid", rules::RuleId::FourV1, "hepta-core", true},
                         {"four-v2-grid", rules::RuleId::FourV2, "hepta-core", true},
                         {"four-v2-fills", rules::RuleId::FourV2, "hepta-core", false}};
  for (const Figure& f : figs) {
    const Configuration c = run(init_config(f.seed), rules::make_rule(f.rule), 36).final;
    RenderOptions o;
    o.levels = std::max(reach(c), 1);
    o.grid = f.grid;
    std::ofstream(dir / (std::string(f.name) + ".svg"), std::ios::binary) << render(c, o);
  }
  v.detail = "manual check, non-blocking: inspect the step-36 SVGs in " + dir.string();
  return v;
}

}  // namespace

int main() {
  const fs::path dir = fs::current_path() / "acceptance-output";
  fs::create_directories(dir);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 adjacency involution up to level 5", involution},
      {"2 geometric oracle equivalence up to level 4", oracle_equivalence},
      {"3 sector tree laws", tree_laws},
      {"4 two-state run from core2", two_state_run},
      {"5 four-v1 run keeps red in the centre", four_v1_run},
      {"6 four-v2 run slices, states and extent", four_v2_run},
      {"7 rule totality and freezing", totality},
      {"8 determinism and persistence", [&] { return persistence(dir); }},
      {"9 figure reproduction", [&] { return figures(dir); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::cout << (v.ok ? "PASS " : "FAIL ") << name << " -- " << v.detail << std::endl;
    failed += v.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
