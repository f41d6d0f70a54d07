#pragma once

// SVG pictures of configurations in the Poincare disc.
//
// Output is byte-deterministic: cells are emitted in coordinate order and
// every number is printed with nine fractional digits.

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ca_engine.hpp"
#include "disc_geometry.hpp"

namespace heptatri {

struct RenderOptions {
  int levels = 5;  ///< tree depth of the heptagons drawn; 0 draws the central heptagon only
  bool grid = true;
  std::map<CellState, std::string> palette = {
      {states::W, "white"}, {states::B, "red"}, {states::R, "red"}, {states::Y, "yellow"}, {states::V, "#E34234"}};
  int size_px = 800;
  std::string background = "white";
  std::string stroke = "black";
};

struct RenderResult {
  std::string svg;
  std::size_t omitted = 0;  ///< coloured cells beyond options.levels
};

/// Circle carrying the geodesic through p and q; nullopt when the geodesic is a diameter.
struct GeodesicCircle {
  DiscPoint center;
  double radius;
};

inline std::optional<GeodesicCircle> geodesic_circle(DiscPoint p, DiscPoint q) {
  // center c is orthogonal to the unit circle: dot(c, p) = (1 + |p|^2) / 2, same for q
  const double det = p.real() * q.imag() - p.imag() * q.real();
  if (std::abs(det) < 1e-12) return std::nullopt;
  const double bp = (1.0 + std::norm(p)) / 2.0, bq = (1.0 + std::norm(q)) / 2.0;
  const DiscPoint c{(bp * q.imag() - bq * p.imag()) / det, (p.real() * bq - q.real() * bp) / det};
  return GeodesicCircle{c, std::sqrt(std::norm(c) - 1.0)};
}

namespace detail {

class SvgPen {
 public:
  explicit SvgPen(const RenderOptions& o) : half_(o.size_px / 2.0), scale_(o.size_px / 2.0 - 4.0) {}

  double scale() const { return scale_; }
  double half() const { return half_; }

  static std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    std::string s(buf);
    if (s == "-0.000000000") s.erase(0, 1);
    return s;
  }

  std::string point(DiscPoint z) const { return num(half_ + z.real() * scale_) + " " + num(half_ - z.imag() * scale_); }

  /// Closed path through the three vertices along geodesic sides.
  std::string triangle(const std::array<DiscPoint, 3>& v) const {
    std::string d = "M " + point(v[0]);
    for (std::size_t k = 0; k < 3; ++k) d += " " + side(v[k], v[(k + 1) % 3]);
    return d + " Z";
  }

 private:
  std::string side(DiscPoint p, DiscPoint q) const {
    const auto circle = geodesic_circle(p, q);
    if (circle) {
      const double r = circle->radius;
      const double half_chord = std::abs(q - p) / 2.0;
      const double sagitta = r - std::sqrt(std::max(0.0, r * r - half_chord * half_chord));
      if (sagitta * scale_ >= 0.25) {
        // screen space flips y; the sweep flag follows the screen orientation of the minor arc
        const DiscPoint ps{p.real(), -p.imag()}, qs{q.real(), -q.imag()};
        const DiscPoint cs{circle->center.real(), -circle->center.imag()};
        const DiscPoint chord = qs - ps, to_c = cs - ps;
        const bool sweep = chord.real() * to_c.imag() - chord.imag() * to_c.real() > 0.0;
        const std::string rad = num(r * scale_);
        return "A " + rad + " " + rad + " 0 0 " + (sweep ? "1 " : "0 ") + point(q);
      }
    }
    return "L " + point(q);
  }

  double half_;
  double scale_;
};

inline int tree_level(const HeptaCoord& h) { return h.is_central() ? 0 : sector_tree().level_of(h.nu); }

}  // namespace detail

inline RenderResult render_with_stats(const Configuration& c, const RenderOptions& o) {
  if (o.levels < 0) throw std::invalid_argument("render: levels must be >= 0");
  if (o.levels > SectorTree::kMaxLevel) throw CapacityError("render: too many levels");
  const detail::SvgPen pen(o);
  Embedding emb(std::max(o.levels, 1));
  RenderResult out;

  std::string& s = out.svg;
  const std::string size = std::to_string(o.size_px);
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
       "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  s += "<circle class=\"disc\" cx=\"" + pen.num(pen.half()) + "\" cy=\"" + pen.num(pen.half()) + "\" r=\"" +
       pen.num(pen.scale()) + "\" fill=\"" + o.background + "\" stroke=\"" + o.stroke + "\" stroke-width=\"1\"/>\n";

  s += "<g class=\"cells\">\n";
  for (const auto& [t, state] : c.sorted()) {
    if (detail::tree_level(t.hepta) > o.levels) {
      ++out.omitted;
      continue;
    }
    auto colour = o.palette.find(state);
    if (colour == o.palette.end())
      throw std::invalid_argument("render: palette has no colour for state " + std::to_string(state.value));
    s += "<path class=\"cell s-";
    s += state_letter(state);
    s += "\" fill=\"" + colour->second + "\" d=\"" + pen.triangle(emb.tri_patch(t).v) + "\"/>\n";
  }
  s += "</g>\n";

  if (o.grid) {
    s += "<g class=\"grid\" fill=\"none\" stroke=\"" + o.stroke + "\" stroke-width=\"0.3\">\n";
    for (const HeptaCoord& h : ball_heptagons(o.levels))
      for (const TrianglePatch& p : emb.heptagon_patches(h)) s += "<path d=\"" + pen.triangle(p.v) + "\"/>\n";
    s += "</g>\n";
  }
  s += "</svg>\n";
  return out;
}

inline std::string render(const Configuration& c, const RenderOptions& o) { return render_with_stats(c, o).svg; }

}  // namespace heptatri
