#include "kstab/linalg.hpp"

#include <functional>

namespace kstab::linalg {

RVec to_rvec(std::span<const Integer> v) {
  RVec r;
  r.reserve(v.size());
  for (const auto& c : v) r.emplace_back(c);
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RMat& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RMat rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size()).size();
}

RMat nullspace(const RMat& rows, std::size_t dim) {
  RMat m = rows;
  auto pivots = rref(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  RMat basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RVec v(dim, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVec> express(const RMat& columns, const RVec& target) {
  const std::size_t k = columns.size();
  const std::size_t n = target.size();
  RMat aug(n, RVec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
    aug[i][k] = target[i];
  }
  auto pivots = rref(aug, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
  if (pivots.size() != k) return std::nullopt;                     // dependent columns
  RVec x(k);
  for (std::size_t r = 0; r < k; ++r) x[pivots[r]] = aug[r][k];
  return x;
}

std::optional<RVec> solve(const RMat& rows, const RVec& rhs) {
  const std::size_t n = rows.size();
  RMat aug = rows;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(rhs[i]);
  auto pivots = rref(aug, n);
  if (pivots.size() != n) return std::nullopt;
  RVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

bool in_cone(const RMat& generators, const RVec& target) {
  bool zero = true;
  for (const auto& c : target) zero = zero && c == 0;
  if (zero) return true;
  const std::size_t dim = target.size();
  RMat chosen;
  // Depth-first over increasing index subsets of size <= dim.
  std::function<bool(std::size_t)> search = [&](std::size_t start) -> bool {
    if (!chosen.empty()) {
      if (auto x = express(chosen, target)) {
        bool nonneg = true;
        for (const auto& c : *x) nonneg = nonneg && c >= 0;
        if (nonneg) return true;
      }
    }
    if (chosen.size() == dim) return false;
    for (std::size_t i = start; i < generators.size(); ++i) {
      chosen.push_back(generators[i]);
      if (rank(chosen) == chosen.size() && search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(0);
}

std::vector<std::size_t> lineality_members(const RMat& generators) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    RVec neg = generators[i];
    for (auto& c : neg) c = -c;
    if (in_cone(generators, neg)) out.push_back(i);
  }
  return out;
}

}  // namespace kstab::linalg
