// Generators and independent oracles shared by the test binaries.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "kstab/exact.hpp"
#include "kstab/polytope.hpp"

namespace testsupport {

using namespace kstab;

struct IPoint {
  long x;
  long y;
  auto operator<=>(const IPoint&) const = default;
};

inline long cross(const IPoint& o, const IPoint& a, const IPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Strict convex hull, counterclockwise (monotone chain).
inline std::vector<IPoint> hull(std::vector<IPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<IPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

/// Half-planes of a counterclockwise lattice polygon, edge by edge, with each
/// normal optionally scaled by `scale[i]`.
inline std::vector<HalfPlane> halfplanes_of(const std::vector<IPoint>& ccw, const std::vector<long>& scale = {}) {
  std::vector<HalfPlane> hs;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const IPoint a = ccw[i], b = ccw[(i + 1) % ccw.size()];
    long ux = b.y - a.y, uy = a.x - b.x;
    const long g = std::gcd(std::abs(ux), std::abs(uy));
    ux /= g;
    uy /= g;
    const long s = scale.empty() ? 1 : scale[i];
    hs.push_back({Vec2{ux * s, uy * s}, Integer((ux * a.x + uy * a.y) * s)});
  }
  return hs;
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }
  double real() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine); }
};

/// Random lattice polygon with at least three vertices, as half-planes.
inline std::vector<HalfPlane> random_polygon(Rng& rng, long box = 6, bool scaled_normals = true) {
  for (;;) {
    std::vector<IPoint> pts;
    const long n = rng.uniform(3, 9);
    for (long i = 0; i < n; ++i) pts.push_back({rng.uniform(-box, box), rng.uniform(-box, box)});
    auto h = hull(pts);
    if (h.size() < 3) continue;
    std::vector<long> scale;
    for (std::size_t i = 0; i < h.size(); ++i) scale.push_back(scaled_normals ? rng.uniform(1, 3) : 1);
    return halfplanes_of(h, scale);
  }
}

/// Vertices by brute force: all pairwise line intersections that satisfy
/// every inequality, deduplicated and sorted counterclockwise.
inline std::vector<Point2> vertex_oracle(const std::vector<HalfPlane>& hs) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const Integer det = hs[i].normal[0] * hs[j].normal[1] - hs[i].normal[1] * hs[j].normal[0];
      if (det == 0) continue;
      Point2 p{Rational(hs[i].level * hs[j].normal[1] - hs[j].level * hs[i].normal[1], det),
               Rational(hs[i].normal[0] * hs[j].level - hs[j].normal[0] * hs[i].level, det)};
      p.x.canonicalize();
      p.y.canonicalize();
      bool ok = true;
      for (const auto& h : hs) ok = ok && h.normal[0] * p.x + h.normal[1] * p.y <= h.level;
      if (ok && std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
  Rational cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += p.x;
    cy += p.y;
  }
  cx /= static_cast<long>(pts.size());
  cy /= static_cast<long>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const Point2& a, const Point2& b) {
    return std::atan2(Rational(a.y - cy).get_d(), Rational(a.x - cx).get_d()) < std::atan2(Rational(b.y - cy).get_d(), Rational(b.x - cx).get_d());
  });
  return pts;
}

inline Rational shoelace(const std::vector<Point2>& v) {
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) twice += kstab::cross(v[i], v[(i + 1) % v.size()]);
  return abs(twice) / 2;
}

/// sqrt(q) for a nonnegative rational q, as a surd.
inline SurdSum sqrt_rational(const Rational& q) {
  if (q == 0) return SurdSum();
  return SurdSum::root(Rational(1, q.get_den()), q.get_num() * q.get_den());
}

inline Integer norm_squared(const Vec2& u, MeasureConvention conv) {
  switch (conv) {
    case MeasureConvention::Euclidean: return u[0] * u[0] + u[1] * u[1];
    case MeasureConvention::SupNorm: {
      Integer m = std::max(abs(u[0]), abs(u[1]));
      return m * m;
    }
    case MeasureConvention::LatticePrimitive: {
      Integer g = gcd(u[0], u[1]);
      return g * g;
    }
  }
  return 1;
}

/// Edge-by-edge boundary measure: for every half-plane, find its two vertices
/// among the oracle vertices and add sqrt(|edge|^2 / N(u)^2).
inline SurdSum boundary_oracle(const std::vector<HalfPlane>& hs, MeasureConvention conv) {
  const auto verts = vertex_oracle(hs);
  SurdSum total;
  for (const auto& h : hs) {
    std::vector<Point2> on;
    for (const auto& p : verts)
      if (h.normal[0] * p.x + h.normal[1] * p.y == h.level) on.push_back(p);
    if (on.size() != 2) continue;
    const Point2 d = on[1] - on[0];
    total += sqrt_rational((d.x * d.x + d.y * d.y) / Rational(norm_squared(h.normal, conv)));
  }
  return total;
}

inline std::vector<HalfPlane> symmetric(const std::vector<std::array<long, 3>>& half) {
  std::vector<HalfPlane> hs;
  for (const auto& r : half) hs.push_back({Vec2{r[0], r[1]}, r[2]});
  for (const auto& r : half) hs.push_back({Vec2{-r[0], -r[1]}, r[2]});
  return hs;
}

inline std::vector<HalfPlane> example1() { return symmetric({{1, 0, 9}, {1, 1, 8}, {1, 2, 8}, {1, 3, 10}, {0, 1, 6}}); }
inline std::vector<HalfPlane> example2_symmetric() { return symmetric({{1, 0, 9}, {1, 1, 7}, {1, 3, 10}, {0, 1, 6}}); }
inline std::vector<HalfPlane> example3() { return symmetric({{1, 0, 9}, {1, 1, 8}, {1, 2, 8}, {1, 3, 10}, {0, 3, 10}}); }

}  // namespace testsupport
