#include "kstab/deform.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace kstab {

namespace {

using i64 = long;

i64 to_i64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::InvalidSlice, "coordinate " + v.get_str() + " exceeds the search range");
  return v.get_si();
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

Vec2 primitive_direction(const Point2& d) {
  Integer l = lcm(d.x.get_den(), d.y.get_den());
  Vec2 v{Integer(d.x * l), Integer(d.y * l)};
  return primitivize(v).first;
}

std::size_t vertex_count(const SlicePolyhedron& s) { return s.compact_vertices.size(); }

// Parent vertex index at which edge k ends.
std::size_t edge_end(const SlicePolyhedron& s, std::size_t k) {
  return s.bounded() ? (k + 1) % vertex_count(s) : k + 1;
}

struct Residue {
  i64 x = 0;
  i64 y = 0;
  bool zero() const { return x == 0 && y == 0; }
  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;
};

// Search over multisets of summand multiplicity vectors, all quantities
// scaled by a common denominator L and positions reduced mod L.
class DecompositionSearch {
 public:
  DecompositionSearch(const SlicePolyhedron& slice, const DecompositionBounds& bounds)
      : slice_(slice), bounds_(bounds), edges_(slice_edges(slice)) {
    if (bounds.max_terms < 1 || bounds.denominator_bound < 1)
      throw Error(ErrorKind::InvalidArgument, "decomposition bounds must be positive");
    nv_ = vertex_count(slice);
    ne_ = edges_.size();

    Integer L = 1;
    for (int q = 2; q <= bounds.denominator_bound; ++q) L = lcm(L, Integer(q));
    for (const auto& e : edges_) L = lcm(L, Integer(e.multiplicity.get_den()));
    for (const auto& v : slice.compact_vertices) L = lcm(L, lcm(Integer(v.x.get_den()), Integer(v.y.get_den())));
    scale_ = to_i64(L);
    if (scale_ > 1000000) throw Error(ErrorKind::InvalidSlice, "common denominator " + L.get_str() + " too large");

    for (const auto& v : slice.compact_vertices)
      parent_.push_back({mod(to_i64(Integer(v.x * L)), scale_), mod(to_i64(Integer(v.y * L)), scale_)});

    for (std::size_t k = 0; k < ne_; ++k) {
      dir_.push_back({to_i64(edges_[k].direction[0]), to_i64(edges_[k].direction[1])});
      const i64 total = to_i64(Integer(edges_[k].multiplicity * L));
      total_.push_back(total);
      // Lattice endpoints force every summand to be lattice there too, hence
      // integral multiplicities on that edge.
      const bool integral = parent_[k].zero() && parent_[edge_end(slice, k)].zero();
      std::set<i64> values{total};
      for (int q = 1; q <= bounds.denominator_bound; ++q) {
        if (integral && q > 1) break;
        const i64 step = scale_ / q;
        for (i64 v = 0; v <= total; v += step) values.insert(v);
      }
      values_.emplace_back(values.rbegin(), values.rend());
    }
  }

  std::vector<MinkowskiDecomposition> run() {
    if (ne_ == 0) {
      // A single point only decomposes trivially.
      Summand s{{}, slice_.compact_vertices, slice_.tail_rays};
      return {MinkowskiDecomposition{{s}}};
    }
    State st;
    st.residual = total_;
    st.count.assign(nv_, 0);
    st.sum.assign(nv_, Residue{});
    search(st, nullptr);

    std::vector<MinkowskiDecomposition> out;
    for (auto& [key, d] : found_) out.push_back(std::move(d));
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.terms() < b.terms(); });
    return out;
  }

 private:
  struct Choice {
    std::vector<i64> mult;
    Residue anchor;  // summand vertex above parent vertex 0, mod L
    bool deferred;
  };

  struct State {
    std::vector<i64> residual;
    std::vector<int> count;      // off-lattice summand vertices above each parent vertex
    std::vector<Residue> sum;    // their positions summed mod L
    std::vector<Choice> chosen;
    bool has_deferred = false;
  };

  std::vector<Residue> offsets(const std::vector<i64>& mult) const {
    std::vector<Residue> off(nv_);
    i64 x = 0, y = 0;
    off[0] = {0, 0};
    for (std::size_t k = 0; k + 1 < nv_; ++k) {
      x += mult[k] * dir_[k].x;
      y += mult[k] * dir_[k].y;
      off[k + 1] = {mod(x, scale_), mod(y, scale_)};
    }
    return off;
  }

  bool closed(const std::vector<i64>& mult) const {
    i64 x = 0, y = 0;
    for (std::size_t k = 0; k < ne_; ++k) {
      x += mult[k] * dir_[k].x;
      y += mult[k] * dir_[k].y;
    }
    return x == 0 && y == 0;
  }

  void search(State& st, const std::vector<i64>* upper) {
    if (std::all_of(st.residual.begin(), st.residual.end(), [](i64 v) { return v == 0; })) {
      record(st);
      return;
    }
    if (static_cast<int>(st.chosen.size()) >= bounds_.max_terms) return;
    std::vector<i64> mult(ne_);
    enumerate_vectors(st, upper, 0, true, mult);
  }

  void enumerate_vectors(State& st, const std::vector<i64>* upper, std::size_t k, bool tight, std::vector<i64>& mult) {
    if (k == ne_) {
      if (std::all_of(mult.begin(), mult.end(), [](i64 v) { return v == 0; })) return;
      if (slice_.bounded() && !closed(mult)) return;
      try_vector(st, mult);
      return;
    }
    for (i64 v : values_[k]) {
      if (v > st.residual[k]) continue;
      if (tight && upper && v > (*upper)[k]) continue;
      mult[k] = v;
      enumerate_vectors(st, upper, k + 1, tight && upper && v == (*upper)[k], mult);
    }
  }

  void try_vector(State& st, const std::vector<i64>& mult) {
    const auto off = offsets(mult);
    std::set<Residue> anchors;
    for (const auto& o : off) anchors.insert({mod(-o.x, scale_), mod(-o.y, scale_)});

    for (const auto& a : anchors) {
      std::vector<std::size_t> touched;
      bool ok = true;
      for (std::size_t j = 0; j < nv_ && ok; ++j) {
        Residue p{mod(a.x + off[j].x, scale_), mod(a.y + off[j].y, scale_)};
        if (p.zero()) continue;
        if (st.has_deferred) ok = false;
        touched.push_back(j);
      }
      if (!ok) continue;
      for (auto j : touched) {
        Residue p{mod(a.x + off[j].x, scale_), mod(a.y + off[j].y, scale_)};
        st.count[j] += 1;
        st.sum[j] = {mod(st.sum[j].x + p.x, scale_), mod(st.sum[j].y + p.y, scale_)};
      }
      bool feasible = true;
      for (std::size_t j = 0; j < nv_; ++j) {
        if (st.count[j] >= 2 || (st.count[j] == 1 && !(st.sum[j] == parent_[j]))) feasible = false;
      }
      if (feasible) descend(st, mult, a, false);
      for (auto j : touched) {
        Residue p{mod(a.x + off[j].x, scale_), mod(a.y + off[j].y, scale_)};
        st.count[j] -= 1;
        st.sum[j] = {mod(st.sum[j].x - p.x, scale_), mod(st.sum[j].y - p.y, scale_)};
      }
    }

    // A summand off the lattice everywhere: its position is fixed by the
    // others, which must then be lattice everywhere.
    if (!st.has_deferred && std::all_of(st.count.begin(), st.count.end(), [](int c) { return c == 0; })) {
      st.has_deferred = true;
      descend(st, mult, Residue{}, true);
      st.has_deferred = false;
    }
  }

  void descend(State& st, const std::vector<i64>& mult, Residue anchor, bool deferred) {
    for (std::size_t k = 0; k < ne_; ++k) st.residual[k] -= mult[k];
    st.chosen.push_back({mult, anchor, deferred});
    const std::vector<i64> bound = mult;
    search(st, &bound);
    st.chosen.pop_back();
    for (std::size_t k = 0; k < ne_; ++k) st.residual[k] += mult[k];
  }

  void record(const State& st) {
    std::vector<Choice> choices = st.chosen;
    if (st.has_deferred) {
      for (auto& c : choices) {
        if (!c.deferred) continue;
        c.anchor = parent_[0];
        auto off = offsets(c.mult);
        bool somewhere_lattice = false;
        for (const auto& o : off)
          somewhere_lattice = somewhere_lattice || Residue{mod(c.anchor.x + o.x, scale_), mod(c.anchor.y + o.y, scale_)}.zero();
        // Already found through an explicit anchor.
        if (somewhere_lattice) return;
      }
    } else {
      for (std::size_t j = 0; j < nv_; ++j)
        if (!(st.sum[j] == parent_[j])) return;
    }

    std::vector<std::vector<i64>> key;
    for (const auto& c : choices) key.push_back(c.mult);
    std::sort(key.begin(), key.end());
    if (found_.count(key)) return;
    found_.emplace(key, build(choices));
  }

  MinkowskiDecomposition build(std::vector<Choice> choices) const {
    std::sort(choices.begin(), choices.end(), [](const Choice& a, const Choice& b) {
      return a.mult < b.mult || (a.mult == b.mult && a.anchor < b.anchor);
    });
    const Rational L(scale_);
    MinkowskiDecomposition d;
    Point2 start_sum{0, 0};
    for (const auto& c : choices) {
      Summand s;
      Point2 pos{Rational(c.anchor.x) / L, Rational(c.anchor.y) / L};
      for (std::size_t k = 0; k < ne_; ++k) s.multiplicities.push_back(Rational(c.mult[k]) / L);
      s.vertices.push_back(pos);
      for (std::size_t k = 0; k + 1 < nv_; ++k) {
        pos = pos + s.multiplicities[k] * to_point(edges_[k].direction);
        s.vertices.push_back(pos);
      }
      start_sum = start_sum + s.vertices[0];
      d.summands.push_back(std::move(s));
    }
    // Anchors only agree with the parent mod the lattice; shift the first
    // summand by the integral difference.
    Point2 shift = slice_.compact_vertices[0] - start_sum;
    for (auto& v : d.summands[0].vertices) v = v + shift;
    d.summands[0].tail_rays = slice_.tail_rays;
    return d;
  }

  const SlicePolyhedron& slice_;
  DecompositionBounds bounds_;
  std::vector<SliceEdge> edges_;
  std::size_t nv_ = 0;
  std::size_t ne_ = 0;
  i64 scale_ = 1;
  std::vector<Residue> parent_;
  std::vector<Residue> dir_;
  std::vector<i64> total_;
  std::vector<std::vector<i64>> values_;
  std::map<std::vector<std::vector<i64>>, MinkowskiDecomposition> found_;
};

}  // namespace

std::vector<SliceEdge> slice_edges(const SlicePolyhedron& s) {
  const auto& v = s.compact_vertices;
  std::vector<SliceEdge> edges;
  if (v.size() < 2) return edges;
  const std::size_t count = s.bounded() ? v.size() : v.size() - 1;
  for (std::size_t k = 0; k < count; ++k) {
    Point2 d = v[(k + 1) % v.size()] - v[k];
    Vec2 dir = primitive_direction(d);
    Rational m = dir[0] != 0 ? Rational(d.x / dir[0]) : Rational(d.y / dir[1]);
    edges.push_back({dir, m});
  }
  return edges;
}

std::vector<Point2> Summand::edge_vectors(const std::vector<SliceEdge>& edges) const {
  std::vector<Point2> out;
  for (std::size_t k = 0; k < edges.size(); ++k) out.push_back(multiplicities[k] * to_point(edges[k].direction));
  return out;
}

std::vector<Point2> Summand::normalized_vertices() const {
  std::vector<Point2> out;
  for (const auto& v : vertices)
    if (out.empty() || !(out.back() == v)) out.push_back(v);
  while (out.size() > 1 && out.back() == out.front()) out.pop_back();
  if (out.empty()) return out;
  Point2 base = *std::min_element(out.begin(), out.end());
  for (auto& v : out) v = v - base;
  return out;
}

std::vector<MinkowskiDecomposition> enumerate_decompositions(const SlicePolyhedron& slice,
                                                             const DecompositionBounds& bounds) {
  if (slice.compact_vertices.empty()) throw Error(ErrorKind::InvalidSlice, "slice has no vertices");
  return DecompositionSearch(slice, bounds).run();
}

bool resums_to(const MinkowskiDecomposition& d, const SlicePolyhedron& slice) {
  const auto edges = slice_edges(slice);
  if (d.summands.empty()) return false;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    Rational total = 0;
    for (const auto& s : d.summands) {
      if (s.multiplicities.size() != edges.size() || s.multiplicities[k] < 0) return false;
      total += s.multiplicities[k];
    }
    if (total != edges[k].multiplicity) return false;
  }
  for (std::size_t j = 0; j < slice.compact_vertices.size(); ++j) {
    Point2 sum{0, 0};
    for (const auto& s : d.summands) {
      if (s.vertices.size() != slice.compact_vertices.size()) return false;
      sum = sum + s.vertices[j];
    }
    if (!(sum == slice.compact_vertices[j])) return false;
  }
  for (const auto& s : d.summands) {
    // Summand edges must join its own consecutive vertices.
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& a = s.vertices[k];
      const auto& b = s.vertices[(k + 1) % s.vertices.size()];
      if (!(b - a == s.multiplicities[k] * to_point(edges[k].direction))) return false;
    }
  }
  return d.summands.front().tail_rays == slice.tail_rays;
}

bool is_admissible(const MinkowskiDecomposition& d) {
  if (d.summands.empty()) return false;
  const std::size_t nv = d.summands.front().vertices.size();
  for (std::size_t j = 0; j < nv; ++j) {
    int off = 0;
    for (const auto& s : d.summands) off += is_lattice(s.vertices[j]) ? 0 : 1;
    if (off > 1) return false;
  }
  return true;
}

DeformationReport deformation_dimensions(const Cone3& cone, const std::vector<Vec3>& weights,
                                         const DecompositionBounds& bounds) {
  DeformationReport report{{}, 0};
  for (const auto& w : weights) {
    if (is_zero(w)) throw Error(ErrorKind::ZeroVector, "zero weight");
    if (primitivize(w).second != 1)
      throw Error(ErrorKind::NonPrimitiveWeight, "weight " + to_string(w) + " is not primitive");
    auto slice = cross_section(cone, w);
    auto all = enumerate_decompositions(slice, bounds);
    const MinkowskiDecomposition& best = all.back();
    const std::size_t k = best.terms();
    report.weights.push_back({w, slice, k, k - 1, all.size(), best});
    report.total_dimension += k - 1;
  }
  return report;
}

}  // namespace kstab
