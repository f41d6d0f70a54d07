#pragma once

// Snapshot CSV persistence of configurations.
//
//     # step=<n>
//     sector,nu,slice,place,state
//     0,0,1,2,R
//
// One row per coloured cell, sorted by (sector, nu, slice, place), states as
// the letters B, R, Y, V.

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ca_engine.hpp"

namespace heptatri {

inline constexpr std::string_view kSnapshotHeader = "sector,nu,slice,place,state";

/// Malformed snapshot input; line() is 1-based.
class SnapshotError : public std::runtime_error {
 public:
  SnapshotError(std::size_t line, const std::string& what)
      : std::runtime_error("snapshot line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline void write_snapshot(std::ostream& os, const Configuration& c) {
  os << "# step=" << c.step() << '\n' << kSnapshotHeader << '\n';
  for (const auto& [t, s] : c.sorted()) {
    const char letter = state_letter(s);
    if (letter == '?' || letter == 'W')
      throw std::invalid_argument("state " + std::to_string(s.value) + " has no snapshot letter");
    os << t.hepta.sector << ',' << t.hepta.nu << ',' << t.slice << ',' << t.place << ',' << letter << '\n';
  }
}

inline std::string snapshot_text(const Configuration& c) {
  std::ostringstream os;
  write_snapshot(os, c);
  return os.str();
}

namespace detail {

template <typename Int>
Int parse_field(std::string_view field, std::size_t line, const char* name) {
  Int v{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc{} || ptr != end || field.empty())
    throw SnapshotError(line, std::string("bad ") + name + " '" + std::string(field) + "'");
  return v;
}

inline std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(',', start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace detail

inline Configuration read_snapshot(std::istream& is) {
  Configuration c;
  std::string raw;
  std::size_t line = 0;
  bool have_step = false, have_header = false;
  while (std::getline(is, raw)) {
    ++line;
    std::string_view text(raw);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty()) continue;
    if (!have_header) {
      if (!have_step && text.starts_with("# step=")) {
        c.set_step(detail::parse_field<std::uint64_t>(text.substr(7), line, "step"));
        have_step = true;
        continue;
      }
      if (text.starts_with("#")) continue;
      if (text != kSnapshotHeader) throw SnapshotError(line, "expected header '" + std::string(kSnapshotHeader) + "'");
      have_header = true;
      continue;
    }
    const auto f = detail::split_commas(text);
    if (f.size() != 5) throw SnapshotError(line, "expected 5 fields, got " + std::to_string(f.size()));
    TriCoord t;
    t.hepta.sector = detail::parse_field<int>(f[0], line, "sector");
    t.hepta.nu = detail::parse_field<NodeIndex>(f[1], line, "nu");
    t.slice = detail::parse_field<int>(f[2], line, "slice");
    t.place = detail::parse_field<int>(f[3], line, "place");
    if (!t.valid()) throw SnapshotError(line, "invalid coordinate " + to_string(t));
    const auto state = f[4].size() == 1 ? state_from_letter(f[4][0]) : std::nullopt;
    if (!state || state->quiescent()) throw SnapshotError(line, "bad state '" + std::string(f[4]) + "'");
    if (!c.at(t).quiescent()) throw SnapshotError(line, "duplicate cell " + to_string(t));
    c.set(t, *state);
  }
  if (!have_header) throw SnapshotError(line + 1, "missing header");
  return c;
}

inline Configuration parse_snapshot(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_snapshot(is);
}

}  // namespace heptatri
