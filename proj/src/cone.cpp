#include "kstab/cone.hpp"

#include <algorithm>
#include <set>

#include "kstab/linalg.hpp"

namespace kstab {

namespace {

linalg::RVec rvec(const Vec3& v) { return linalg::to_rvec(std::span<const Integer>(v.data(), 3)); }

Rational dot(const Vec3& a, const std::array<Rational, 3>& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

int sign(const Integer& v) { return sgn(v); }

bool same_xy_direction(const Vec3& a, const Vec3& b) {
  if ((a[0] == 0 && a[1] == 0) || (b[0] == 0 && b[1] == 0)) return false;
  return a[0] * b[1] == a[1] * b[0] && a[0] * b[0] + a[1] * b[1] > 0;
}

}  // namespace

std::vector<Vec3> lift_rays(const std::vector<HalfPlane>& halfplanes) {
  std::vector<Vec3> rays;
  rays.reserve(halfplanes.size());
  for (const auto& h : halfplanes) rays.push_back({h.normal[0], h.normal[1], h.level});
  return rays;
}

Cone3 Cone3::from_polytope(const std::vector<HalfPlane>& halfplanes) { return from_rays(lift_rays(halfplanes)); }

Cone3 Cone3::from_rays(std::vector<Vec3> rays) {
  const std::size_t n = rays.size();
  if (n < 3) throw Error(ErrorKind::NotFullDimensional, "a 3-dimensional cone needs at least 3 rays");
  std::set<Vec3> directions;
  for (const auto& w : rays) {
    if (is_zero(w)) throw Error(ErrorKind::ZeroVector, "zero ray");
    if (!directions.insert(primitivize(w).first).second)
      throw Error(ErrorKind::DuplicateRay, "ray " + to_string(w) + " repeats a direction");
  }

  linalg::RMat gens;
  for (const auto& w : rays) gens.push_back(rvec(w));
  if (auto line = linalg::lineality_members(gens); !line.empty())
    throw Error(ErrorKind::NotStronglyConvex, "the cone contains the line through " + to_string(rays[line.front()]));
  if (linalg::rank(gens) < 3) throw Error(ErrorKind::NotFullDimensional, "rays span less than Z^3");

  // A ray inside the cone of the others is tolerated only as a height
  // variant: its (x, y) part points the same way as a neighbour's.
  std::vector<std::size_t> interior;
  std::vector<Vec3> extreme;
  for (std::size_t i = 0; i < n; ++i) {
    linalg::RMat others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(gens[j]);
    if (!linalg::in_cone(others, gens[i])) {
      extreme.push_back(rays[i]);
      continue;
    }
    if (!same_xy_direction(rays[i], rays[(i + n - 1) % n]) && !same_xy_direction(rays[i], rays[(i + 1) % n]))
      throw Error(ErrorKind::RayInteriorToHull, "ray " + to_string(rays[i]) + " lies in the cone of the others");
    interior.push_back(i);
  }

  // The extreme rays are in convex cyclic position iff one orientation makes
  // every adjacent-pair normal strictly positive on all remaining rays.
  const std::size_t m = extreme.size();
  std::vector<Vec3> normals(m);
  int orientation = 0;
  for (std::size_t i = 0; i < m; ++i) {
    normals[i] = cross(extreme[i], extreme[(i + 1) % m]);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i || j == (i + 1) % m) continue;
      int s = sign(dot(normals[i], extreme[j]));
      if (s == 0 || (orientation != 0 && s != orientation))
        throw Error(ErrorKind::RaysNotCyclic, "rays are not listed in cyclic order around the cone");
      orientation = s;
    }
  }

  Cone3 c;
  c.rays_ = std::move(rays);
  c.interior_ = std::move(interior);
  c.normals_.reserve(m);
  for (auto& nu : normals) {
    if (orientation < 0)
      for (auto& x : nu) x = -x;
    c.normals_.push_back(primitivize(nu).first);
  }
  return c;
}

SmoothnessReport smooth_away_from_vertex(const Cone3& cone) {
  SmoothnessReport r{{}, true};
  const auto& w = cone.rays();
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t j = (i + 1) % w.size();
    Vec3 minors = cross(w[i], w[j]);
    Integer g = gcd_all(std::span<const Integer>(minors.data(), 3));
    r.pairs.push_back({i, j, g});
    r.smooth = r.smooth && g == 1;
  }
  return r;
}

ReebCheck is_reeb_interior(const Cone3& cone, const Vec3& xi) {
  for (std::size_t f = 0; f < cone.facet_normals().size(); ++f) {
    Integer p = dot(cone.facet_normals()[f], xi);
    if (p <= 0) return {false, f, p};
  }
  return {true, std::nullopt, 0};
}

PlaneChart PlaneChart::for_weight(const Vec3& weight) {
  if (is_zero(weight)) throw Error(ErrorKind::ZeroVector, "slice weight must be nonzero");
  auto [prim, g] = primitivize(weight);
  PlaneChart chart;
  chart.weight = weight;

  auto unit = std::find_if(prim.begin(), prim.end(), [](const Integer& c) { return abs(c) == 1; });
  if (unit != prim.end()) {
    const std::size_t k = static_cast<std::size_t>(unit - prim.begin());
    chart.origin = {0, 0, 0};
    chart.origin[k] = Rational(prim[k], g);
    chart.origin[k].canonicalize();
    std::array<Vec3, 2> basis;
    std::size_t slot = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == k) continue;
      Vec3 b{0, 0, 0};
      b[i] = 1;
      b[k] = -prim[i] * prim[k];
      basis[slot++] = b;
    }
    chart.b1 = basis[0];
    chart.b2 = basis[1];
    return chart;
  }

  // Column operations reducing prim to a unit vector; the accumulated
  // unimodular matrix supplies the chart.
  std::array<Vec3, 3> cols{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  Vec3 row = prim;
  for (;;) {
    std::size_t p = 3;
    int nonzero = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (row[i] == 0) continue;
      ++nonzero;
      if (p == 3 || abs(row[i]) < abs(row[p])) p = i;
    }
    if (nonzero == 1) {
      if (row[p] < 0)
        for (auto& x : cols[p]) x = -x;
      std::swap(cols[p], cols[0]);
      break;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == p || row[i] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), row[i].get_mpz_t(), row[p].get_mpz_t());
      row[i] -= q * row[p];
      for (std::size_t r = 0; r < 3; ++r) cols[i][r] -= q * cols[p][r];
    }
  }
  for (std::size_t r = 0; r < 3; ++r) {
    chart.origin[r] = Rational(cols[0][r], g);
    chart.origin[r].canonicalize();
  }
  chart.b1 = cols[1];
  chart.b2 = cols[2];
  return chart;
}

std::array<Rational, 3> PlaneChart::lift(const Point2& p) const {
  std::array<Rational, 3> y;
  for (std::size_t i = 0; i < 3; ++i) y[i] = origin[i] + p.x * b1[i] + p.y * b2[i];
  return y;
}

Point2 PlaneChart::direction_coordinates(const Vec3& v) const {
  auto x = linalg::express({rvec(b1), rvec(b2)}, rvec(v));
  if (!x) throw Error(ErrorKind::InvalidArgument, "vector " + to_string(v) + " is not parallel to the slice plane");
  return {(*x)[0], (*x)[1]};
}

std::vector<ChartInequality> slice_inequalities(const Cone3& cone, const PlaneChart& chart) {
  std::vector<ChartInequality> out;
  for (const auto& nu : cone.facet_normals())
    out.push_back({Rational(dot(nu, chart.b1)), Rational(dot(nu, chart.b2)), -dot(nu, chart.origin)});
  return out;
}

namespace {

bool satisfies(const ChartInequality& h, const Point2& p) { return h.a * p.x + h.b * p.y >= h.c; }

Vec2 integral_direction(const Rational& x, const Rational& y) {
  Integer l = lcm(x.get_den(), y.get_den());
  Vec2 v{Integer(x * l), Integer(y * l)};
  return primitivize(v).first;
}

}  // namespace

SlicePolyhedron cross_section(const Cone3& cone, const Vec3& weight) {
  const PlaneChart chart = PlaneChart::for_weight(weight);
  const auto hs = slice_inequalities(cone, chart);

  std::vector<Point2> vertices;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      Rational det = hs[i].a * hs[j].b - hs[i].b * hs[j].a;
      if (det == 0) continue;
      Point2 p{(hs[i].c * hs[j].b - hs[i].b * hs[j].c) / det, (hs[i].a * hs[j].c - hs[i].c * hs[j].a) / det};
      if (std::all_of(hs.begin(), hs.end(), [&](const ChartInequality& h) { return satisfies(h, p); }))
        vertices.push_back(p);
    }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw Error(ErrorKind::EmptySlice, "no point of the cone pairs to 1 with " + to_string(weight));

  // Recession cone {A d >= 0}: its extreme rays lie on the boundary lines.
  std::set<Vec2> candidates;
  for (const auto& h : hs) {
    if (h.a == 0 && h.b == 0) continue;
    for (int s : {1, -1}) {
      Point2 d{-s * h.b, s * h.a};
      bool ok = std::all_of(hs.begin(), hs.end(), [&](const ChartInequality& g) { return g.a * d.x + g.b * d.y >= 0; });
      if (ok) candidates.insert(integral_direction(d.x, d.y));
    }
  }
  std::vector<Vec2> tails;
  for (const auto& r : candidates) {
    bool cw_extreme = std::all_of(candidates.begin(), candidates.end(), [&](const Vec2& o) { return det2(r, o) >= 0; });
    bool ccw_extreme = std::all_of(candidates.begin(), candidates.end(), [&](const Vec2& o) { return det2(r, o) <= 0; });
    if (cw_extreme || ccw_extreme) tails.push_back(r);
  }
  if (tails.size() == 2 && det2(tails[0], tails[1]) < 0) std::swap(tails[0], tails[1]);

  SlicePolyhedron s;
  s.weight = weight;
  s.tail_rays = tails;
  if (tails.empty()) {
    s = SlicePolyhedron::from_vertices(std::move(vertices));
    s.weight = weight;
    return s;
  }
  Vec2 c = tails.size() == 2 ? Vec2{tails[0][0] + tails[1][0], tails[0][1] + tails[1][1]} : tails[0];
  const Point2 forward{Rational(c[1]), Rational(-c[0])};
  std::sort(vertices.begin(), vertices.end(), [&](const Point2& a, const Point2& b) {
    return forward.x * a.x + forward.y * a.y < forward.x * b.x + forward.y * b.y;
  });
  s.compact_vertices = std::move(vertices);
  return s;
}

SlicePolyhedron SlicePolyhedron::from_vertices(std::vector<Point2> vertices) {
  SlicePolyhedron s;
  s.weight = {0, 0, 0};
  if (vertices.size() >= 3) {
    Point2 centroid{0, 0};
    for (const auto& v : vertices) centroid = centroid + v;
    centroid = Rational(1, static_cast<long>(vertices.size())) * centroid;
    auto half = [&](const Point2& p) {
      Point2 d = p - centroid;
      return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0;
    };
    std::sort(vertices.begin(), vertices.end(), [&](const Point2& a, const Point2& b) {
      int ha = half(a), hb = half(b);
      if (ha != hb) return ha < hb;
      return cross(a - centroid, b - centroid) > 0;
    });
  }
  s.compact_vertices = std::move(vertices);
  return s;
}

}  // namespace kstab
