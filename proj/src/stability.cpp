#include "kstab/stability.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "kstab/linalg.hpp"

namespace kstab {

namespace {

linalg::RVec rvec(const Weight& w) { return linalg::to_rvec(std::span<const Integer>(w.data(), w.size())); }

Weight primitive_integer(const linalg::RVec& v) {
  Integer l = 1;
  for (const auto& c : v) l = lcm(l, Integer(c.get_den()));
  Weight w;
  for (const auto& c : v) w.push_back(Integer(c * l));
  Integer g = gcd_all(w);
  if (g != 0)
    for (auto& c : w) c /= g;
  return w;
}

// A vertex of { lambda : <lambda, R> = 0 on the lineality part, >= 1 on the
// rest, lambda in span(support) }. The region is nonempty and pointed
// whenever the rest is nonempty.
linalg::RVec separating_functional(const std::vector<Weight>& zero_part, const std::vector<Weight>& positive_part,
                                   std::size_t rank) {
  linalg::RMat all;
  for (const auto& w : zero_part) all.push_back(rvec(w));
  for (const auto& w : positive_part) all.push_back(rvec(w));

  linalg::RMat eq_rows;
  linalg::RVec eq_rhs;
  auto add_if_independent = [&](const linalg::RVec& row, const Rational& rhs, linalg::RMat& rows, linalg::RVec& rhs_vec) {
    rows.push_back(row);
    if (linalg::rank(rows) < rows.size()) {
      rows.pop_back();
      return false;
    }
    rhs_vec.push_back(rhs);
    return true;
  };
  for (const auto& w : zero_part) add_if_independent(rvec(w), 0, eq_rows, eq_rhs);
  for (const auto& n : linalg::nullspace(all, rank)) add_if_independent(n, 0, eq_rows, eq_rhs);

  std::optional<linalg::RVec> found;
  std::function<void(std::size_t, linalg::RMat&, linalg::RVec&)> pick = [&](std::size_t start, linalg::RMat& rows,
                                                                             linalg::RVec& rhs) {
    if (found) return;
    if (rows.size() == rank) {
      auto x = linalg::solve(rows, rhs);
      if (!x) return;
      for (const auto& w : positive_part) {
        Rational p = 0;
        for (std::size_t i = 0; i < rank; ++i) p += (*x)[i] * w[i];
        if (p < 1) return;
      }
      found = x;
      return;
    }
    for (std::size_t i = start; i < positive_part.size() && !found; ++i) {
      if (add_if_independent(rvec(positive_part[i]), 1, rows, rhs)) {
        pick(i + 1, rows, rhs);
        rows.pop_back();
        rhs.pop_back();
      }
    }
  };
  pick(0, eq_rows, eq_rhs);
  if (!found) throw std::logic_error("no separating functional for a non-polystable support");
  return *found;
}

}  // namespace

WeightedPoint::WeightedPoint(std::size_t rank, std::vector<Weight> support) : rank_(rank) {
  if (rank == 0) throw Error(ErrorKind::InvalidArgument, "ambient rank must be positive");
  std::set<Weight> seen;
  for (auto& w : support) {
    if (w.size() != rank) throw Error(ErrorKind::InvalidArgument, "weight of wrong rank");
    if (!seen.insert(w).second) throw Error(ErrorKind::InvalidArgument, "repeated weight in support");
  }
  support_ = std::move(support);
}

const char* name(Verdict v) {
  return v == Verdict::Polystable ? "Polystable" : "SemistableNotPolystable";
}

StabilityVerdict classify(const WeightedPoint& p) {
  const auto& s = p.support();
  if (s.empty()) return {Verdict::Polystable, std::nullopt};
  linalg::RMat gens;
  for (const auto& w : s) gens.push_back(rvec(w));
  const auto line = linalg::lineality_members(gens);
  if (line.size() == s.size()) return {Verdict::Polystable, std::nullopt};

  std::vector<Weight> zero_part, positive_part;
  std::size_t li = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (li < line.size() && line[li] == i) {
      zero_part.push_back(s[i]);
      ++li;
    } else {
      positive_part.push_back(s[i]);
    }
  }
  auto lambda = separating_functional(zero_part, positive_part, p.rank());
  return {Verdict::SemistableNotPolystable, Destabilizer{primitive_integer(lambda), zero_part}};
}

bool real_structure_polystable(std::size_t rank, const std::vector<std::pair<Weight, bool>>& weights) {
  std::set<Weight> support;
  for (const auto& [w, paired] : weights) {
    support.insert(w);
    if (paired) {
      Weight neg = w;
      for (auto& c : neg) c = -c;
      support.insert(neg);
    }
  }
  bool closed = true;
  for (const auto& w : support) {
    Weight neg = w;
    for (auto& c : neg) c = -c;
    closed = closed && support.count(neg) > 0;
  }
  auto verdict = classify(WeightedPoint(rank, {support.begin(), support.end()}));
  const bool polystable = verdict.verdict == Verdict::Polystable;
  if (closed && !support.empty() && !polystable)
    throw std::logic_error("negation-closed support classified as not polystable");
  return polystable;
}

}  // namespace kstab
