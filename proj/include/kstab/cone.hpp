// Three-dimensional polarized cones over moment polygons: strong convexity,
// smoothness away from the apex, Reeb interiority and weight cross-sections.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kstab/exact.hpp"
#include "kstab/polytope.hpp"

namespace kstab {

/// Cone spanned by cyclically ordered rays.
///
/// Rays are in convex position, except that a ray whose (x, y) part is a
/// positive multiple of a neighbour's may lie inside the cone; such rays are
/// listed by interior_rays(). facet_normals()[i] is the primitive inward
/// normal of the facet spanned by the i-th and (i+1)-th extreme rays.
class Cone3 {
 public:
  static Cone3 from_rays(std::vector<Vec3> rays);
  /// Rays w_i = (u_i, lambda_i).
  static Cone3 from_polytope(const std::vector<HalfPlane>& halfplanes);

  const std::vector<Vec3>& rays() const { return rays_; }
  const std::vector<Vec3>& facet_normals() const { return normals_; }
  const std::vector<std::size_t>& interior_rays() const { return interior_; }
  std::size_t size() const { return rays_.size(); }

 private:
  Cone3() = default;

  std::vector<Vec3> rays_;
  std::vector<Vec3> normals_;
  std::vector<std::size_t> interior_;
};

std::vector<Vec3> lift_rays(const std::vector<HalfPlane>& halfplanes);

struct RayPairSmoothness {
  std::size_t first;
  std::size_t second;
  Integer minor_gcd;  // 1 iff the pair extends to a basis of Z^3
};

struct SmoothnessReport {
  std::vector<RayPairSmoothness> pairs;
  bool smooth;
};

SmoothnessReport smooth_away_from_vertex(const Cone3& cone);

struct ReebCheck {
  bool interior;
  std::optional<std::size_t> violating_facet;
  Integer violating_pairing;
};

ReebCheck is_reeb_interior(const Cone3& cone, const Vec3& xi);

/// Integer affine chart (s, t) -> origin + s*b1 + t*b2 of the plane <R, y> = 1.
///
/// For R = +-e_k^* the chart simply drops coordinate k.
struct PlaneChart {
  Vec3 weight;
  std::array<Rational, 3> origin;
  Vec3 b1;
  Vec3 b2;

  static PlaneChart for_weight(const Vec3& weight);
  std::array<Rational, 3> lift(const Point2& p) const;
  /// Coordinates of a vector lying in the plane <R, y> = 0.
  Point2 direction_coordinates(const Vec3& v) const;
};

/// <a, (s, t)> >= c in chart coordinates.
struct ChartInequality {
  Rational a;
  Rational b;
  Rational c;
};

std::vector<ChartInequality> slice_inequalities(const Cone3& cone, const PlaneChart& chart);

/// Cross-section of the cone at <R, y> = 1 in chart coordinates.
///
/// compact_vertices run counterclockwise; when the slice is unbounded they
/// form the chain from tail_rays[1] (entering) to tail_rays[0] (leaving), and
/// tail_rays is in counterclockwise angular order.
struct SlicePolyhedron {
  Vec3 weight;
  std::vector<Point2> compact_vertices;
  std::vector<Vec2> tail_rays;

  bool bounded() const { return tail_rays.empty(); }

  /// Bounded polygon (or segment, or point) given counterclockwise, for
  /// callers that only need the decomposition machinery.
  static SlicePolyhedron from_vertices(std::vector<Point2> ccw_vertices);
};

SlicePolyhedron cross_section(const Cone3& cone, const Vec3& weight);

}  // namespace kstab
