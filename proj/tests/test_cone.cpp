#include "doctest.h"
#include "kstab/cone.hpp"
#include "kstab/problem.hpp"
#include "oracles.hpp"

using namespace kstab;
using namespace testsupport;

namespace {

Q3 lift_direction(const PlaneChart& c, const Rational& s, const Rational& t) {
  return {s * c.b1[0] + t * c.b2[0], s * c.b1[1] + t * c.b2[1], s * c.b1[2] + t * c.b2[2]};
}

Q3 add(const Q3& a, const Q3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Rational random_unit(Rng& rng) {
  Rational r(rng.uniform(0, 1000), 1000);
  r.canonicalize();
  return r;
}

std::vector<Vec3> rays_of(const std::string& name) { return effective_rays(preset(name).spec); }

ErrorKind error_of(const std::vector<Vec3>& rays) {
  try {
    Cone3::from_rays(rays);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ZeroVector;
}

const char* kRayPresets[] = {"example1", "example2", "example2-corrected", "example3"};

}  // namespace

TEST_CASE("rays lifted from example 1") {
  const auto c = Cone3::from_polytope(example1());
  const std::vector<Vec3> expected{{1, 0, 9},   {1, 1, 8},   {1, 2, 8},   {1, 3, 10},   {0, 1, 6},
                                   {-1, 0, 9}, {-1, -1, 8}, {-1, -2, 8}, {-1, -3, 10}, {0, -1, 6}};
  CHECK(c.rays() == expected);
  CHECK(c.facet_normals().size() == 10);
  CHECK(c.interior_rays().empty());
}

TEST_CASE("construction errors") {
  CHECK(error_of({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}}) == ErrorKind::NotStronglyConvex);
  CHECK(error_of({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) == ErrorKind::NotFullDimensional);
  CHECK(error_of({{1, 0, 0}, {0, 1, 0}}) == ErrorKind::NotFullDimensional);
  CHECK(error_of({{1, 0, 1}, {0, 1, 1}, {2, 0, 2}}) == ErrorKind::DuplicateRay);
  CHECK(error_of({{1, 0, 1}, {0, 1, 1}, {1, 1, 3}, {-1, 0, 1}, {0, -1, 1}}) == ErrorKind::RayInteriorToHull);
  CHECK(error_of({{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}) == ErrorKind::RaysNotCyclic);
  CHECK(error_of({{1, 0, 1}, {0, 0, 0}, {0, 1, 1}}) == ErrorKind::ZeroVector);
  // Clockwise listing is accepted.
  CHECK(error_of({{0, -1, 1}, {-1, 0, 1}, {0, 1, 1}, {1, 0, 1}}) == ErrorKind::ZeroVector);
}

TEST_CASE("example 2 as printed has a height-variant interior ray") {
  const auto c = Cone3::from_rays(rays_of("example2"));
  CHECK(c.interior_rays() == std::vector<std::size_t>{6});
  CHECK(c.facet_normals().size() == 7);
  CHECK(in_cone_oracle({{-1, -1, 7}, {0, -1, 6}, {0, 1, 6}}, q3(Vec3{-1, -1, 10})));
}

TEST_CASE("facet normals are sound against the rays") {
  for (const char* name : kRayPresets) {
    const auto c = Cone3::from_rays(rays_of(name));
    for (const auto& nu : c.facet_normals()) {
      CHECK(gcd_all(std::span<const Integer>(nu.data(), 3)) == 1);
      int zeros = 0;
      for (const auto& w : c.rays()) {
        CHECK(dot(nu, w) >= 0);
        zeros += dot(nu, w) == 0;
      }
      CHECK(zeros == 2);
    }
  }
}

TEST_CASE("smoothness away from the vertex") {
  const auto printed = smooth_away_from_vertex(Cone3::from_rays(rays_of("example2")));
  CHECK_FALSE(printed.smooth);
  for (const auto& p : printed.pairs) {
    const bool bad = p.first == 5 && p.second == 6;
    CHECK((p.minor_gcd == 3) == bad);
    CHECK((p.minor_gcd == 1) == !bad);
  }
  for (const char* name : {"example1", "example2-corrected", "example3"})
    CHECK(smooth_away_from_vertex(Cone3::from_rays(rays_of(name))).smooth);
  // Independent check: a pair extends to a basis iff some unimodular completion exists.
  const auto c = Cone3::from_rays(rays_of("example2-corrected"));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vec3 a = c.rays()[i], b = c.rays()[(i + 1) % c.size()];
    bool found = false;
    for (long x = -3; x <= 3 && !found; ++x)
      for (long y = -3; y <= 3 && !found; ++y)
        for (long z = -3; z <= 3 && !found; ++z) found = abs(det3(a, b, Vec3{x, y, z})) == 1;
    CHECK(found);
  }
}

TEST_CASE("reeb interiority") {
  const auto c1 = Cone3::from_rays(rays_of("example1"));
  CHECK(is_reeb_interior(c1, {0, 0, 1}).interior);
  CHECK(in_cone_oracle(c1.rays(), q3(Vec3{0, 0, 12})));
  CHECK_FALSE(is_reeb_interior(c1, {0, 0, -1}).interior);
  for (const auto& w : c1.rays()) {
    const auto r = is_reeb_interior(c1, w);
    CHECK_FALSE(r.interior);
    CHECK(r.violating_pairing == 0);
  }
  for (const auto& name : {"example1", "example2", "example2-corrected", "example3"}) {
    const auto c = Cone3::from_rays(rays_of(name));
    const bool interior = is_reeb_interior(c, {0, 0, 1}).interior;
    CHECK(interior);
    // Interior Reeb vector <=> the slice at the dual functional is bounded.
    CHECK(cross_section(c, {0, 0, 1}).bounded() == interior);
  }
}

TEST_CASE("cross-section of example 1 at e1") {
  const auto c = Cone3::from_rays(rays_of("example1"));
  const auto s = cross_section(c, {1, 0, 0});
  const std::vector<Point2> v{{0, 9}, {1, 8}, {2, 8}, {3, 10}};
  CHECK(s.compact_vertices == v);
  CHECK(s.tail_rays == std::vector<Vec2>{{1, 6}, {-1, 6}});
  CHECK_FALSE(s.bounded());

  const auto m = cross_section(c, {-1, 0, 0});
  std::vector<Point2> mirrored;
  for (const auto& p : v) mirrored.push_back({-p.x, p.y});
  std::sort(mirrored.begin(), mirrored.end());
  auto got = m.compact_vertices;
  std::sort(got.begin(), got.end());
  CHECK(got == mirrored);

  const auto top = cross_section(c, {0, 0, 1});
  CHECK(top.bounded());
  CHECK(top.compact_vertices.size() == example1().size());
  for (const auto& w : c.rays()) {
    const Point2 expected{Rational(w[0], w[2]), Rational(w[1], w[2])};
    Point2 e = expected;
    e.x.canonicalize();
    e.y.canonicalize();
    CHECK(std::find(top.compact_vertices.begin(), top.compact_vertices.end(), e) != top.compact_vertices.end());
  }
  CHECK_THROWS_AS(cross_section(c, {0, 0, -1}), Error);
}

TEST_CASE("plane charts are lattice bases of the weight plane") {
  for (const Vec3 r : {Vec3{1, 0, 0}, Vec3{0, -1, 0}, Vec3{2, 1, 0}, Vec3{2, 3, 5}, Vec3{4, 6, 10}, Vec3{-6, 10, 15}}) {
    const auto c = PlaneChart::for_weight(r);
    CHECK(dot(r, c.b1) == 0);
    CHECK(dot(r, c.b2) == 0);
    const Vec3 n = cross(c.b1, c.b2);
    CHECK(gcd_all(std::span<const Integer>(n.data(), 3)) == 1);
    const auto p = c.lift({Rational(3, 7), -2});
    CHECK(r[0] * p[0] + r[1] * p[1] + r[2] * p[2] == 1);
    const Point2 back = c.direction_coordinates(Vec3{c.b1[0] * 2 - c.b2[0], c.b1[1] * 2 - c.b2[1], c.b1[2] * 2 - c.b2[2]});
    CHECK(back == Point2{2, -1});
  }
  CHECK_THROWS_AS(PlaneChart::for_weight({0, 0, 0}), Error);
}

TEST_CASE("cross-sections match the V-representation sampling oracle") {
  Rng rng(23);
  const Vec3 weights[] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {1, 1, 0}, {2, 1, 0}, {1, 0, 1}, {2, 3, 5}};
  for (const char* name : kRayPresets) {
    const auto c = Cone3::from_rays(rays_of(name));
    for (const auto& r : weights) {
      const auto chart = PlaneChart::for_weight(r);
      const auto s = cross_section(c, r);
      const auto& v = s.compact_vertices;
      REQUIRE(!v.empty());
      for (const auto& p : v) CHECK(in_cone_oracle(c.rays(), chart.lift(p)));
      for (const auto& t : s.tail_rays) {
        const Q3 d = lift_direction(chart, Rational(t[0]), Rational(t[1]));
        CHECK(r[0] * d[0] + r[1] * d[1] + r[2] * d[2] == 0);
        CHECK(in_cone_oracle(c.rays(), d));
      }
      // Points of the claimed region lie in the cone.
      for (int i = 0; i < 100; ++i) {
        std::vector<Rational> wts;
        Rational total = 0;
        for (std::size_t k = 0; k < v.size(); ++k) {
          wts.push_back(random_unit(rng) + Rational(1, 1000));
          total += wts.back();
        }
        Point2 p{0, 0};
        for (std::size_t k = 0; k < v.size(); ++k) p = p + (wts[k] / total) * v[k];
        for (const auto& t : s.tail_rays) p = p + Rational(rng.uniform(0, 20), 3) * to_point(t);
        p.x.canonicalize();
        p.y.canonicalize();
        CHECK(in_cone_oracle(c.rays(), chart.lift(p)));
      }
      // Points pushed just outside one boundary edge are excluded.
      if (v.size() >= 2) {
        for (int i = 0; i < 100; ++i) {
          const std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(v.size()) - (s.bounded() ? 1 : 2)));
          const Point2 a = v[k], b = v[(k + 1) % v.size()];
          const Rational f = random_unit(rng);
          const Point2 on = a + f * (b - a);
          // Counterclockwise boundary: the outward normal of a->b is (dy, -dx).
          const Point2 out{(b - a).y, -(b - a).x};
          const Point2 q = on + Rational(1, 97) * out;
          CHECK_FALSE(in_cone_oracle(c.rays(), chart.lift(q)));
        }
      }
    }
  }
}
