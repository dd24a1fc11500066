#include "kstab/polytope.hpp"

#include <algorithm>

namespace kstab {

std::string_view name(MeasureConvention conv) {
  switch (conv) {
    case MeasureConvention::Euclidean: return "euclidean";
    case MeasureConvention::SupNorm: return "sup";
    case MeasureConvention::LatticePrimitive: return "lattice";
  }
  return "?";
}

namespace {

// Half-turn index of a direction: 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half(const Vec2& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; }

bool angle_less(const Vec2& a, const Vec2& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

std::optional<Point2> intersect(const HalfPlane& h1, const HalfPlane& h2) {
  Integer det = det2(h1.normal, h2.normal);
  if (det == 0) return std::nullopt;
  Rational x(h1.level * h2.normal[1] - h1.normal[1] * h2.level, det);
  Rational y(h1.normal[0] * h2.level - h2.normal[0] * h1.level, det);
  x.canonicalize();
  y.canonicalize();
  return Point2{x, y};
}

Rational eval(const HalfPlane& h, const Point2& p) { return h.normal[0] * p.x + h.normal[1] * p.y; }

Rational shoelace(const std::vector<Point2>& pts) {
  Rational twice = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) twice += cross(pts[i], pts[(i + 1) % pts.size()]);
  return twice / 2;
}

// Convex hull area of a point set (Andrew's monotone chain).
Rational hull_area(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return shoelace(hull);
}

}  // namespace

Polygon Polygon::from_halfplanes(std::vector<HalfPlane> hs) {
  const std::size_t n = hs.size();
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "a polygon needs at least 3 half-planes");
  for (const auto& h : hs)
    if (is_zero(h.normal)) throw Error(ErrorKind::ZeroVector, "half-plane with zero normal");

  // Cyclic angular order: exactly one wrap-around and no repeated direction.
  std::size_t descents = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = hs[i].normal;
    const Vec2& b = hs[(i + 1) % n].normal;
    if (det2(a, b) == 0 && half(a) == half(b))
      throw Error(ErrorKind::UnsortedNormals, "normals " + to_string(a) + " and " + to_string(b) + " are parallel");
    if (!angle_less(a, b)) ++descents;
  }
  if (descents != 1) throw Error(ErrorKind::UnsortedNormals, "normals are not in increasing angular order");

  // Sorted normals bound the region iff every consecutive gap is below pi.
  for (std::size_t i = 0; i < n; ++i)
    if (det2(hs[i].normal, hs[(i + 1) % n].normal) <= 0)
      throw Error(ErrorKind::UnboundedRegion,
                  "no normal strictly between " + to_string(hs[i].normal) + " and " + to_string(hs[(i + 1) % n].normal));

  // Feasible pairwise intersections; bounded region so they span it if nonempty.
  std::vector<Point2> feasible;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto p = intersect(hs[i], hs[j]);
      if (!p) continue;
      bool ok = std::all_of(hs.begin(), hs.end(), [&](const HalfPlane& h) { return eval(h, *p) <= h.level; });
      if (ok) feasible.push_back(*p);
    }
  if (hull_area(feasible) <= 0) throw Error(ErrorKind::EmptyInterior, "half-planes have no common interior point");

  Polygon poly;
  poly.halfplanes_ = std::move(hs);
  poly.vertices_.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    poly.vertices_.push_back(*intersect(poly.halfplanes_[i], poly.halfplanes_[(i + 1) % n]));

  for (std::size_t k = 0; k < n; ++k) {
    const auto& u = poly.halfplanes_[k].normal;
    Point2 along{Rational(-u[1]), Rational(u[0])};
    const auto e = poly.edge(k);
    Point2 d = e.end - e.start;
    if (d.x * along.x + d.y * along.y <= 0)
      throw Error(ErrorKind::RedundantHalfplane,
                  "half-plane " + std::to_string(k) + " " + to_string(u) + " <= " + poly.halfplanes_[k].level.get_str() +
                      " does not support an edge");
  }
  return poly;
}

PolygonEdge Polygon::edge(std::size_t k) const {
  const std::size_t n = vertices_.size();
  return {vertices_[(k + n - 1) % n], vertices_[k], k};
}

Rational area(const Polygon& p) { return shoelace(p.vertices()); }

Rational moment(const Polygon& p, const AffineFunction& theta) {
  // Fan of triangles from the origin: int x = sum (x_i + x_j) cross_ij / 6.
  const auto& v = p.vertices();
  Rational mx = 0, my = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    Rational c = cross(a, b);
    mx += (a.x + b.x) * c;
    my += (a.y + b.y) * c;
  }
  return theta.a * mx / 6 + theta.b * my / 6 + theta.c * area(p);
}

SurdSum edge_measure(const Polygon& p, std::size_t k, MeasureConvention conv) {
  const auto& u = p.halfplanes()[k].normal;
  const auto e = p.edge(k);
  // The edge vector is t * (-u_y, u_x); its Euclidean length is |t| |u|_2.
  Point2 d = e.end - e.start;
  Rational t = u[1] != 0 ? Rational(-d.x / u[1]) : Rational(d.y / u[0]);
  Integer norm2 = u[0] * u[0] + u[1] * u[1];
  switch (conv) {
    case MeasureConvention::Euclidean:
      return SurdSum(abs(t));
    case MeasureConvention::SupNorm: {
      Integer sup = std::max(Integer(abs(u[0])), Integer(abs(u[1])));
      return SurdSum::root(abs(t) / sup, norm2);
    }
    case MeasureConvention::LatticePrimitive: {
      auto [prim, mult] = primitivize(u);
      return SurdSum::root(abs(t) / mult, norm2);
    }
  }
  return {};
}

SurdSum boundary_measure(const Polygon& p, MeasureConvention conv) {
  SurdSum total;
  for (std::size_t k = 0; k < p.size(); ++k) total += edge_measure(p, k, conv);
  return total;
}

SurdSum boundary_moment(const Polygon& p, const AffineFunction& theta, MeasureConvention conv) {
  SurdSum total;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto e = p.edge(k);
    Point2 mid = Rational(1, 2) * (e.start + e.end);
    total += edge_measure(p, k, conv) * theta(mid);
  }
  return total;
}

SurdSum mean_scalar_curvature(const Polygon& p, MeasureConvention conv) {
  return boundary_measure(p, conv) / area(p);
}

SurdSum futaki(const Polygon& p, const AffineFunction& theta, MeasureConvention conv) {
  return boundary_moment(p, theta, conv) - mean_scalar_curvature(p, conv) * moment(p, theta);
}

bool futaki_vanishes(const Polygon& p, MeasureConvention conv) {
  return futaki(p, AffineFunction::x(), conv).is_zero() && futaki(p, AffineFunction::y(), conv).is_zero();
}

std::size_t ZhouZhuReport::worst() const {
  std::size_t w = 0;
  for (std::size_t i = 1; i < margins.size(); ++i)
    if (compare(margins[i].margin, margins[w].margin) < 0) w = i;
  return w;
}

ZhouZhuReport zhou_zhu(const Polygon& p, int n, MeasureConvention conv) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.halfplanes()[i].level <= 0)
      throw Error(ErrorKind::NonpositiveLevel,
                  "level of half-plane " + std::to_string(i) + " is " + p.halfplanes()[i].level.get_str());
  ZhouZhuReport r{conv, n, mean_scalar_curvature(p, conv), futaki_vanishes(p, conv), {}, true};
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational bound(n + 1, p.halfplanes()[i].level);
    bound.canonicalize();
    SurdSum margin = SurdSum(bound) - r.s0;
    int s = margin.sign();
    r.margins.push_back({i, bound, margin, s});
    if (s <= 0) r.pass = false;
  }
  r.pass = r.pass && r.futaki_vanishes;
  return r;
}

}  // namespace kstab
