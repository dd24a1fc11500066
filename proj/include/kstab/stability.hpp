// Hilbert-Mumford classification for a torus acting linearly on a direct sum
// of weight spaces. Only the support of a point matters: its orbit is closed
// iff 0 lies in the relative interior of the convex hull of the support
// weights. With the trivial linearization every point is semistable, so the
// only verdicts are Polystable and SemistableNotPolystable.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kstab/exact.hpp"

namespace kstab {

using Weight = std::vector<Integer>;

/// Support of a point in the weight-space decomposition. Component values
/// never affect the verdict, so they are not stored.
class WeightedPoint {
 public:
  WeightedPoint(std::size_t rank, std::vector<Weight> support);

  template <std::size_t N>
  static WeightedPoint from(const std::vector<IntVec<N>>& support) {
    std::vector<Weight> w;
    for (const auto& v : support) w.emplace_back(v.begin(), v.end());
    return WeightedPoint(N, std::move(w));
  }

  std::size_t rank() const { return rank_; }
  const std::vector<Weight>& support() const { return support_; }

 private:
  std::size_t rank_;
  std::vector<Weight> support_;
};

enum class Verdict { Polystable, SemistableNotPolystable };

struct Destabilizer {
  Weight one_parameter_subgroup;  // primitive integer lambda
  std::vector<Weight> limit_support;
};

struct StabilityVerdict {
  Verdict verdict;
  std::optional<Destabilizer> destabilizer;
};

const char* name(Verdict v);

StabilityVerdict classify(const WeightedPoint& p);

/// Each entry is a weight R together with whether -R is also in the support.
/// Negation-closed nonempty supports are always polystable; that is checked
/// and a violation throws std::logic_error.
bool real_structure_polystable(std::size_t rank, const std::vector<std::pair<Weight, bool>>& weights);

}  // namespace kstab
