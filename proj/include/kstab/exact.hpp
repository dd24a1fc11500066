// Exact arithmetic substrate: GMP rationals, quadratic surd sums with
// certified sign and decimal expansion, and small lattice utilities.
#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kstab/error.hpp"

namespace kstab {

using Integer = mpz_class;
using Rational = mpq_class;

template <std::size_t N>
using IntVec = std::array<Integer, N>;
using Vec2 = IntVec<2>;
using Vec3 = IntVec<3>;

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Point2 to_point(const Vec2& v) { return {Rational(v[0]), Rational(v[1])}; }
inline bool is_lattice(const Point2& p) { return p.x.get_den() == 1 && p.y.get_den() == 1; }

/// Squarefree part decomposition n = s^2 * d with d squarefree.
///
/// Trial division runs up to 10^6; a residue above that is accepted only when
/// it is provably squarefree or a perfect square, otherwise RadicandTooLarge.
std::pair<Integer, Integer> square_decompose(const Integer& n);

/// Element of Q[sqrt 2, sqrt 3, sqrt 5, ...] kept as {squarefree d -> c_d}.
///
/// The term map is canonical, so structural equality is value equality and
/// the zero test never touches floating point.
class SurdSum {
 public:
  using TermMap = std::map<Integer, Rational>;

  SurdSum() = default;
  SurdSum(const Rational& c);  // NOLINT: rationals embed implicitly
  SurdSum(long c) : SurdSum(Rational(c)) {}  // NOLINT

  /// c * sqrt(n), rewritten with a squarefree radicand.
  static SurdSum root(const Rational& c, const Integer& n);
  static SurdSum from_terms(const TermMap& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;
  Rational coefficient(const Integer& d) const;

  SurdSum operator-() const;
  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o);
  SurdSum& operator*=(const Rational& s);
  SurdSum& operator/=(const Rational& s);

  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
  friend SurdSum operator*(SurdSum a, const Rational& s) { return a *= s; }
  friend SurdSum operator*(const Rational& s, SurdSum a) { return a *= s; }
  friend SurdSum operator/(SurdSum a, const Rational& s) { return a /= s; }
  friend bool operator==(const SurdSum& a, const SurdSum& b) { return a.terms_ == b.terms_; }

  /// Certified enclosure [lo, hi] using sqrt bounds with `bits` fractional bits.
  std::pair<Rational, Rational> enclose(unsigned bits) const;

  /// Exact sign in {-1, 0, +1}.
  int sign() const;

  double to_double() const;

  /// Human-readable exact form, e.g. "12/115 + 8/345*sqrt(10)".
  std::string to_string() const;

 private:
  void add_term(const Integer& d, const Rational& c);

  TermMap terms_;
};

inline SurdSum surd_normalize(const Rational& c, const Integer& n) { return SurdSum::root(c, n); }
inline int surd_sign(const SurdSum& a) { return a.sign(); }
int compare(const SurdSum& a, const SurdSum& b);

enum class Rounding { Nearest, Truncate };

/// Decimal string with exactly `digits` fractional digits.
///
/// Nearest rounds half away from zero (ties only arise for rational values);
/// Truncate drops the tail toward zero, the way printed values with a
/// trailing ellipsis are written.
std::string surd_decimal(const SurdSum& a, int digits, Rounding mode = Rounding::Nearest);
std::string rational_decimal(const Rational& q, int digits, Rounding mode = Rounding::Nearest);

std::string to_string(const Rational& q);

// Lattice utilities.

Integer gcd_all(std::span<const Integer> values);
Integer det2(const Vec2& a, const Vec2& b);
Integer det3(const Vec3& a, const Vec3& b, const Vec3& c);
Vec3 cross(const Vec3& a, const Vec3& b);
Integer dot(const Vec3& a, const Vec3& b);

template <std::size_t N>
bool is_zero(const IntVec<N>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

/// v = multiplicity * primitive, multiplicity > 0.
template <std::size_t N>
std::pair<IntVec<N>, Integer> primitivize(const IntVec<N>& v) {
  if (is_zero(v)) throw Error(ErrorKind::ZeroVector, "cannot primitivize the zero vector");
  Integer g = gcd_all(std::span<const Integer>(v.data(), N));
  IntVec<N> p;
  for (std::size_t i = 0; i < N; ++i) p[i] = v[i] / g;
  return {p, g};
}

template <std::size_t N>
std::string to_string(const IntVec<N>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const Point2& p);

}  // namespace kstab
