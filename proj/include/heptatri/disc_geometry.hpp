#pragma once

// Metric realisation of the heptatrigrid in the Poincare disc.
//
// Points are complex numbers inside the unit disc. The central heptagon is the
// regular {7,3} heptagon centred at 0 with the midpoint of side 1 on the
// positive real axis and sides numbered counter-clockwise. Every tree heptagon
// is placed by walking its father path from the sector root, each step being
// the isometry that carries a heptagon onto its son; no point is ever
// deduplicated numerically.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tri_nav.hpp"

namespace heptatri {

using DiscPoint = std::complex<double>;

namespace geometry {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kMatchTolerance = 1e-9;

/// Angle of the midpoint of side k of the reference heptagon.
inline double side_angle(int k) { return (k - 1) * 2.0 * kPi / 7.0; }

/// Euclidean disc radius of the reference heptagon's vertices.
inline double vertex_radius() {
  static const double r = std::tanh(std::acosh(1.0 / (std::tan(kPi / 7.0) * std::tan(kPi / 3.0))) / 2.0);
  return r;
}

/// Euclidean disc radius of the reference heptagon's side midpoints.
inline double edge_midpoint_radius() {
  static const double r = std::tanh(std::acosh(std::cos(kPi / 3.0) / std::sin(kPi / 7.0)) / 2.0);
  return r;
}

inline double hyper_distance(DiscPoint a, DiscPoint b) {
  return 2.0 * std::atanh(std::abs(a - b) / std::abs(1.0 - std::conj(a) * b));
}

/// Area of a geodesic triangle (pi minus its angle sum).
inline double triangle_area(DiscPoint a, DiscPoint b, DiscPoint c) {
  auto angle_at = [](DiscPoint p, DiscPoint q, DiscPoint r) {
    // z -> (z - p) / (1 - conj(p) z) has a positive real derivative at p, so it preserves directions there.
    const DiscPoint q1 = (q - p) / (1.0 - std::conj(p) * q);
    const DiscPoint r1 = (r - p) / (1.0 - std::conj(p) * r);
    return std::abs(std::arg(r1 / q1));
  };
  return kPi - angle_at(a, b, c) - angle_at(b, c, a) - angle_at(c, a, b);
}

}  // namespace geometry

/// The point halfway between a and b along their geodesic.
inline DiscPoint hyper_midpoint(DiscPoint a, DiscPoint b) {
  const DiscPoint b0 = (b - a) / (1.0 - std::conj(a) * b);  // a moved to the origin
  const double r = std::abs(b0);
  if (r == 0.0) return a;
  const DiscPoint m0 = b0 * (1.0 / (1.0 + std::sqrt(1.0 - r * r)));
  return (m0 + a) / (1.0 + std::conj(a) * m0);
}

/**
 * Disc isometry z -> (a w + b) / (c w + d) with w = z, or w = conj(z) when the
 * map reverses orientation.
 */
class Isometry {
 public:
  using Complex = std::complex<double>;

  Isometry() = default;

  static Isometry rotation(double theta) { return {std::polar(1.0, theta), 0.0, 0.0, 1.0, false}; }

  /// Hyperbolic translation sending 0 to p.
  static Isometry translation(DiscPoint p) { return {1.0, p, std::conj(p), 1.0, false}; }

  /// Reflection in the diameter at angle phi.
  static Isometry line_reflection(double phi) { return {std::polar(1.0, 2.0 * phi), 0.0, 0.0, 1.0, true}; }

  /// Reflection in the geodesic through side k of the reference heptagon.
  static Isometry side_reflection(int k) {
    const Isometry frame = rotation(geometry::side_angle(k)) * translation(geometry::edge_midpoint_radius());
    return frame * line_reflection(geometry::kPi / 2.0) * frame.inverse();
  }

  DiscPoint operator()(DiscPoint z) const {
    const Complex w = reverses_ ? std::conj(z) : z;
    return (a_ * w + b_) / (c_ * w + d_);
  }

  /// (f * g)(z) == f(g(z))
  friend Isometry operator*(const Isometry& f, const Isometry& g) {
    auto pick = [&](Complex v) { return f.reverses_ ? std::conj(v) : v; };
    const Complex ga = pick(g.a_), gb = pick(g.b_), gc = pick(g.c_), gd = pick(g.d_);
    Isometry h{f.a_ * ga + f.b_ * gc, f.a_ * gb + f.b_ * gd, f.c_ * ga + f.d_ * gc, f.c_ * gb + f.d_ * gd,
               f.reverses_ != g.reverses_};
    h.normalise();
    return h;
  }

  Isometry inverse() const {
    const Complex det = a_ * d_ - b_ * c_;
    Complex a = d_ / det, b = -b_ / det, c = -c_ / det, d = a_ / det;
    if (reverses_) a = std::conj(a), b = std::conj(b), c = std::conj(c), d = std::conj(d);
    return {a, b, c, d, reverses_};
  }

  bool reverses_orientation() const { return reverses_; }

 private:
  Isometry(Complex a, Complex b, Complex c, Complex d, bool reverses) : a_(a), b_(b), c_(c), d_(d), reverses_(reverses) {}

  void normalise() {
    const Complex s = std::sqrt(a_ * d_ - b_ * c_);
    a_ /= s, b_ /= s, c_ /= s, d_ /= s;
  }

  Complex a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
  bool reverses_ = false;
};

struct HeptagonEmbedding {
  DiscPoint center;
  std::array<DiscPoint, 7> vertices;  ///< vertices[k - 1] is vertex k; side k joins vertex k-1 and vertex k

  DiscPoint vertex(int k) const { return vertices[static_cast<std::size_t>((k + 6) % 7)]; }
};

struct TrianglePatch {
  TriCoord coord;
  std::array<DiscPoint, 3> v;  ///< v[k] carries the vertex number k of the 2-triangle
};

/**
 * Places heptagons and 2-triangles in the disc. Heptagon maps are memoised per
 * instance, so one Embedding should serve a whole rendering or validation run.
 */
class Embedding {
 public:
  explicit Embedding(int max_level = SectorTree::kMaxLevel) : max_level_(max_level) {
    const double r = geometry::vertex_radius();
    for (int k = 1; k <= 7; ++k) reference_[static_cast<std::size_t>(k - 1)] = std::polar(r, geometry::side_angle(k) + geometry::kPi / 7.0);
  }

  /// Isometry carrying the reference heptagon, side by side, onto h.
  const Isometry& heptagon_map(const HeptaCoord& h) {
    if (!h.valid()) throw std::invalid_argument("invalid heptagon " + to_string(h));
    if (auto it = maps_.find(h); it != maps_.end()) return it->second;
    Isometry g;
    if (h.is_central()) {
      g = Isometry{};
    } else if (h.nu == 1) {
      g = Isometry::side_reflection(h.sector) * Isometry::rotation(geometry::side_angle(h.sector));
    } else {
      SectorTree& tree = sector_tree();
      if (tree.level_of(h.nu) > max_level_)
        throw CapacityError("heptagon " + to_string(h) + " lies beyond the embedding's level budget");
      const int s = tree.side_in_father(h.nu);
      // maps the son's side 1 onto side s of the reference, then across it
      const Isometry to_son = Isometry::side_reflection(s) * Isometry::line_reflection(geometry::side_angle(s) / 2.0);
      g = heptagon_map({h.sector, tree.father(h.nu)}) * to_son;
    }
    return maps_.emplace(h, g).first->second;
  }

  HeptagonEmbedding embed_heptagon(const HeptaCoord& h) {
    const Isometry& g = heptagon_map(h);
    HeptagonEmbedding e;
    e.center = g(0.0);
    for (std::size_t k = 0; k < 7; ++k) e.vertices[k] = g(reference_[k]);
    return e;
  }

  TrianglePatch tri_patch(const TriCoord& t) {
    if (!t.valid()) throw std::invalid_argument("invalid 2-triangle " + to_string(t));
    return patch_in(embed_heptagon(t.hepta), t);
  }

  /// The 28 patches of a heptagon in coordinate order.
  std::vector<TrianglePatch> heptagon_patches(const HeptaCoord& h) {
    const HeptagonEmbedding e = embed_heptagon(h);
    std::vector<TrianglePatch> out;
    out.reserve(28);
    for (const TriCoord& t : cells_of(h)) out.push_back(patch_in(e, t));
    return out;
  }

  static TrianglePatch patch_in(const HeptagonEmbedding& e, const TriCoord& t) {
    const DiscPoint c0 = e.vertex(t.slice - 1), c1 = e.vertex(t.slice), c2 = e.center;
    const DiscPoint m01 = hyper_midpoint(c0, c1), m12 = hyper_midpoint(c1, c2), m02 = hyper_midpoint(c0, c2);
    switch (t.place) {
      case 0: return {t, {c0, m01, m02}};
      case 1: return {t, {m01, c1, m12}};
      case 2: return {t, {m02, m12, c2}};
      default: return {t, {m12, m02, m01}};
    }
  }

 private:
  int max_level_;
  std::array<DiscPoint, 7> reference_{};
  std::unordered_map<HeptaCoord, Isometry> maps_;
};

using CellPair = std::pair<TriCoord, TriCoord>;

/**
 * Brute-force side-sharing relation among all patches of heptagons up to tree
 * level @p levels: two patches are adjacent iff both endpoints of one of their
 * sides coincide within 1e-9. Pairs are ordered (first < second) and sorted.
 */
inline std::vector<CellPair> geometric_adjacency(int levels) {
  Embedding emb(std::max(levels, 1));
  std::vector<TrianglePatch> patches;
  for (const HeptaCoord& h : ball_heptagons(levels)) {
    auto hp = emb.heptagon_patches(h);
    patches.insert(patches.end(), hp.begin(), hp.end());
  }

  struct Edge {
    DiscPoint p, q;
    double key;
    std::size_t patch;
  };
  std::vector<Edge> edges;
  edges.reserve(patches.size() * 3);
  for (std::size_t i = 0; i < patches.size(); ++i) {
    const auto& v = patches[i].v;
    for (int k = 0; k < 3; ++k) {
      const DiscPoint p = v[static_cast<std::size_t>(k)], q = v[static_cast<std::size_t>((k + 1) % 3)];
      edges.push_back({p, q, (p + q).real() / 2.0, i});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.key < b.key; });

  constexpr double tol = geometry::kMatchTolerance;
  std::vector<CellPair> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size() && edges[j].key - edges[i].key <= tol; ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      const bool same = std::abs(a.p - b.p) <= tol && std::abs(a.q - b.q) <= tol;
      const bool flipped = std::abs(a.p - b.q) <= tol && std::abs(a.q - b.p) <= tol;
      if (!same && !flipped) continue;
      TriCoord x = patches[a.patch].coord, y = patches[b.patch].coord;
      if (y < x) std::swap(x, y);
      pairs.emplace_back(x, y);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace heptatri
