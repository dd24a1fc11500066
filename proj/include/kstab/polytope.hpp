// Moment polygons, the boundary measure, average scalar curvature, the toric
// Futaki functional and the Zhou-Zhu sufficient condition.
#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "kstab/exact.hpp"

namespace kstab {

/// The half-plane <normal, x> <= level.
struct HalfPlane {
  Vec2 normal;
  Integer level;

  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

/// How |u| is read in the edge measure d(sigma) = d(sigma_0) / |u|.
enum class MeasureConvention { Euclidean, SupNorm, LatticePrimitive };

std::string_view name(MeasureConvention conv);

/// theta(x, y) = a x + b y + c
struct AffineFunction {
  Rational a;
  Rational b;
  Rational c;

  Rational operator()(const Point2& p) const { return a * p.x + b * p.y + c; }

  static AffineFunction constant(long v) { return {0, 0, v}; }
  static AffineFunction x() { return {1, 0, 0}; }
  static AffineFunction y() { return {0, 1, 0}; }
};

struct PolygonEdge {
  Point2 start;
  Point2 end;
  std::size_t halfplane;
};

/// Bounded convex polygon cut out by a cyclically ordered list of half-planes,
/// every one of which supports an edge.
///
/// Vertex i is the intersection of the boundary lines of half-planes i and
/// i+1; the edge owned by half-plane i runs from vertex i-1 to vertex i, so
/// vertices come out counterclockwise.
class Polygon {
 public:
  static Polygon from_halfplanes(std::vector<HalfPlane> halfplanes);

  const std::vector<HalfPlane>& halfplanes() const { return halfplanes_; }
  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return halfplanes_.size(); }
  PolygonEdge edge(std::size_t k) const;

 private:
  Polygon() = default;

  std::vector<HalfPlane> halfplanes_;
  std::vector<Point2> vertices_;
};

Rational area(const Polygon& p);
Rational moment(const Polygon& p, const AffineFunction& theta);

/// Edge measure factor 1/N(u) times Euclidean length, as an exact surd.
SurdSum edge_measure(const Polygon& p, std::size_t k, MeasureConvention conv);
SurdSum boundary_measure(const Polygon& p, MeasureConvention conv);
SurdSum boundary_moment(const Polygon& p, const AffineFunction& theta, MeasureConvention conv);

/// S0 = boundary measure / area.
SurdSum mean_scalar_curvature(const Polygon& p, MeasureConvention conv);

/// L(theta) = boundary moment - S0 * area moment.
SurdSum futaki(const Polygon& p, const AffineFunction& theta, MeasureConvention conv);
bool futaki_vanishes(const Polygon& p, MeasureConvention conv);

struct FacetMargin {
  std::size_t halfplane;
  Rational bound;  // (n+1)/lambda
  SurdSum margin;  // bound - S0
  int sign;
};

struct ZhouZhuReport {
  MeasureConvention convention;
  int n;
  SurdSum s0;
  bool futaki_vanishes;
  std::vector<FacetMargin> margins;
  bool pass;

  /// Index into margins of the smallest margin.
  std::size_t worst() const;
};

ZhouZhuReport zhou_zhu(const Polygon& p, int n, MeasureConvention conv);

}  // namespace kstab
