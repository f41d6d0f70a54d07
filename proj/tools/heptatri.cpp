// Command-line front end: simulate, render, validate, stats.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "heptatri/heptatri.hpp"

namespace fs = std::filesystem;
using namespace heptatri;

namespace {

constexpr int kUsageExit = 2;

/// Named seed, or a snapshot file to resume from.
Configuration load_init(const std::string& init) {
  if (init == "core2" || init == "hepta-core") return init_config(init);
  if (!fs::is_regular_file(init))
    throw UsageError("--init: '" + init + "' is neither core2, hepta-core nor a snapshot file");
  std::ifstream in(init);
  return read_snapshot(in);
}

Configuration load_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read snapshot '" + path + "'");
  return read_snapshot(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) {
    std::error_code ec;
    fs::remove(path, ec);
    throw std::runtime_error("cannot write '" + path + "'");
  }
}

struct SimArgs {
  std::string rule;
  std::string init;
  std::uint64_t steps = 0;
  std::size_t max_cells = RunOptions{}.max_cells;
};

void add_sim_flags(CLI::App* cmd, SimArgs& a) {
  cmd->add_option("--rule", a.rule, "two-state, four-v1 or four-v2")
      ->required()
      ->check(CLI::IsMember({"two-state", "four-v1", "four-v2"}));
  cmd->add_option("--init", a.init, "core2, hepta-core, or a snapshot file")->required();
  cmd->add_option("--steps", a.steps, "number of steps")->required();
  cmd->add_option("--max-cells", a.max_cells, "abort when the colony exceeds this many cells")->capture_default_str();
}

int cmd_simulate(const SimArgs& a, const std::string& out_path) {
  try {
    const RunResult res = run(load_init(a.init), rules::rule_by_name(a.rule), a.steps, {a.max_cells});
    write_file(out_path, snapshot_text(res.final));
  } catch (...) {
    std::error_code ec;
    fs::remove(out_path, ec);
    throw;
  }
  return 0;
}

int cmd_render(const std::string& snapshot, const std::string& out_path, int levels, const std::string& grid,
               int size) {
  RenderOptions o;
  o.levels = levels;
  o.grid = grid == "on";
  o.size_px = size;
  const RenderResult r = render_with_stats(load_snapshot(snapshot), o);
  write_file(out_path, r.svg);
  if (r.omitted > 0)
    std::cerr << "warning: " << r.omitted << " coloured cells beyond level " << levels << " omitted\n";
  return 0;
}

int cmd_validate(int levels) {
  bool ok = true;
  for (const SuiteResult& s : run_validation(levels)) {
    std::cout << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.checked << " checks)";
    if (!s.passed) std::cout << ": " << s.first_failure;
    std::cout << '\n';
    ok = ok && s.passed;
  }
  return ok ? 0 : 1;
}

int cmd_stats(const SimArgs& a) {
  const Configuration init = load_init(a.init);
  const RunResult res = run(init, rules::rule_by_name(a.rule), a.steps, {a.max_cells});

  std::cout << "step,B,R,Y,V,colored,new\n";
  for (const PopulationRow& row : res.series) {
    std::cout << row.step;
    for (int s = 1; s < states::kPaletteSize; ++s) std::cout << ',' << row.counts[static_cast<std::size_t>(s)];
    std::cout << ',' << row.colored << ',' << row.newly_colored << '\n';
  }

  const auto comps = colony_components(res.final);
  std::cerr << "components outside the central heptagon: " << comps.size();
  if (!comps.empty()) std::cerr << " (largest " << comps.front() << ", smallest " << comps.back() << ")";
  std::cerr << '\n';

  if (a.rule == "four-v1") {
    // Compare the white cells trapped by four-v1 with those of two-state from core2, at small time shifts.
    const auto v1_blocked = blocked_cells(res.final);
    Simulator two(init_config("core2"), rules::make_rule(rules::RuleId::TwoState), {a.max_cells});
    for (std::uint64_t t = 0; t <= a.steps + 2; ++t) {
      if (t + 2 >= a.steps) {
        const ResidueComparison cmp = compare_residue(v1_blocked, blocked_cells(two.config()));
        std::cerr << "residue shift=" << static_cast<std::int64_t>(t) - static_cast<std::int64_t>(a.steps)
                  << " four-v1=" << cmp.left << " two-state=" << cmp.right << " common=" << cmp.common
                  << " jaccard=" << cmp.jaccard() << '\n';
      }
      if (t < a.steps + 2) two.advance();
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cellular automata on the heptatrigrid of the hyperbolic plane"};
  app.require_subcommand(1);

  SimArgs sim;
  std::string out_path;
  auto* simulate = app.add_subcommand("simulate", "run a rule and write the final snapshot");
  add_sim_flags(simulate, sim);
  simulate->add_option("--out", out_path, "snapshot CSV to write")->required();

  std::string snapshot, svg_path, grid = "on";
  int render_levels = 5, size = 800;
  auto* render_cmd = app.add_subcommand("render", "draw a snapshot in the Poincare disc as SVG");
  render_cmd->add_option("--snapshot", snapshot, "snapshot CSV")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--out", svg_path, "SVG file to write")->required();
  render_cmd->add_option("--levels", render_levels, "tree depth to draw")->capture_default_str()->check(
      CLI::Range(0, SectorTree::kMaxLevel));
  render_cmd->add_option("--grid", grid, "draw the grid outlines")->capture_default_str()->check(
      CLI::IsMember({"on", "off"}));
  render_cmd->add_option("--size", size, "image size in pixels")->capture_default_str()->check(CLI::Range(16, 100000));

  int validate_levels = 3;
  auto* validate = app.add_subcommand("validate", "check the navigation tables against each other and the geometry");
  validate->add_option("--levels", validate_levels, "tree depth to check")->capture_default_str()->check(
      CLI::Range(0, kMaxValidationLevels));

  SimArgs stats_args;
  auto* stats = app.add_subcommand("stats", "print per-step populations as CSV");
  add_sim_flags(stats, stats_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return cmd_simulate(sim, out_path);
    if (*render_cmd) return cmd_render(snapshot, svg_path, render_levels, grid, size);
    if (*validate) return cmd_validate(validate_levels);
    if (*stats) return cmd_stats(stats_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
