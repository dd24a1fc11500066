// Small dense exact linear algebra over Q, sized for cones with a dozen
// generators in dimension <= 4.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kstab/exact.hpp"

namespace kstab::linalg {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;  // row-major

RVec to_rvec(std::span<const Integer> v);

std::size_t rank(RMat rows);

/// Basis of { x : <row, x> = 0 for every row }; `dim` is the ambient dimension.
RMat nullspace(const RMat& rows, std::size_t dim);

/// Unique x with sum_j x_j * columns[j] = target, if the columns are
/// independent and target lies in their span.
std::optional<RVec> express(const RMat& columns, const RVec& target);

/// Unique solution of the square system rows * x = rhs, if nonsingular.
std::optional<RVec> solve(const RMat& rows, const RVec& rhs);

/// Membership of target in the closed convex cone spanned by generators
/// (Caratheodory: some independent subset represents it nonnegatively).
bool in_cone(const RMat& generators, const RVec& target);

/// Indices i with -generators[i] in the cone: these span the lineality space.
std::vector<std::size_t> lineality_members(const RMat& generators);

}  // namespace kstab::linalg
