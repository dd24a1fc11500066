// Admissible Minkowski decompositions of cone cross-sections and the
// per-weight deformation dimensions they induce.
#pragma once

#include <cstddef>
#include <vector>

#include "kstab/cone.hpp"
#include "kstab/exact.hpp"

namespace kstab {

/// Compact edge of a slice: edge vector = multiplicity * direction, with
/// direction primitive in chart coordinates.
struct SliceEdge {
  Vec2 direction;
  Rational multiplicity;
};

/// Compact edges in boundary order. Bounded slices give a closed cycle
/// (edge k runs from vertex k to vertex k+1 mod n); unbounded slices give
/// the open chain between their tail rays.
std::vector<SliceEdge> slice_edges(const SlicePolyhedron& slice);

struct DecompositionBounds {
  int max_terms = 4;
  int denominator_bound = 6;
};

struct Summand {
  /// One entry per parent edge; the summand's edge k is multiplicities[k] * direction_k.
  std::vector<Rational> multiplicities;
  /// Witness position of the summand vertex above each parent vertex.
  std::vector<Point2> vertices;
  /// Parent tail rays, carried by the first summand of an unbounded slice only.
  std::vector<Vec2> tail_rays;

  std::vector<Point2> edge_vectors(const std::vector<SliceEdge>& edges) const;
  /// Distinct vertices translated so the lexicographically smallest is the origin.
  std::vector<Point2> normalized_vertices() const;
};

/// Minkowski decomposition with summands sorted lexicographically by multiplicities.
struct MinkowskiDecomposition {
  std::vector<Summand> summands;

  std::size_t terms() const { return summands.size(); }
};

/// Every admissible decomposition with at most max_terms nontrivial summands
/// whose multiplicities have denominators at most denominator_bound, one
/// representative per multiset of multiplicity vectors, ordered by term count.
///
/// Admissible: above every parent vertex at most one summand vertex is off
/// the lattice. Each summand of an unbounded slice shares the parent's tail
/// cone; only the first summand stores it.
std::vector<MinkowskiDecomposition> enumerate_decompositions(const SlicePolyhedron& slice,
                                                             const DecompositionBounds& bounds = {});

/// Exact re-summation check: summand vertices add up to the parent vertices
/// and multiplicities add up to the parent's.
bool resums_to(const MinkowskiDecomposition& d, const SlicePolyhedron& slice);

/// Independent admissibility check on the witness positions.
bool is_admissible(const MinkowskiDecomposition& d);

struct WeightDeformation {
  Vec3 weight;
  SlicePolyhedron slice;
  std::size_t max_terms;     // k_R
  std::size_t dimension;     // k_R - 1
  std::size_t decompositions;
  MinkowskiDecomposition witness;
};

struct DeformationReport {
  std::vector<WeightDeformation> weights;
  std::size_t total_dimension;
};

DeformationReport deformation_dimensions(const Cone3& cone, const std::vector<Vec3>& weights,
                                         const DecompositionBounds& bounds = {});

}  // namespace kstab
