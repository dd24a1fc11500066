#include "kstab/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace kstab {

std::string_view name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::RadicandTooLarge: return "RadicandTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnboundedRegion: return "UnboundedRegion";
    case ErrorKind::EmptyInterior: return "EmptyInterior";
    case ErrorKind::RedundantHalfplane: return "RedundantHalfplane";
    case ErrorKind::UnsortedNormals: return "UnsortedNormals";
    case ErrorKind::NonpositiveLevel: return "NonpositiveLevel";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::RayInteriorToHull: return "RayInteriorToHull";
    case ErrorKind::RaysNotCyclic: return "RaysNotCyclic";
    case ErrorKind::DuplicateRay: return "DuplicateRay";
    case ErrorKind::EmptySlice: return "EmptySlice";
    case ErrorKind::InvalidSlice: return "InvalidSlice";
    case ErrorKind::NonPrimitiveWeight: return "NonPrimitiveWeight";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InconsistentSpec: return "InconsistentSpec";
  }
  return "Unknown";
}

bool is_geometric(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownPreset:
    case ErrorKind::Parse:
    case ErrorKind::InconsistentSpec:
    case ErrorKind::InvalidArgument:
      return false;
    default:
      return true;
  }
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

bool is_perfect_square(const Integer& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer pow2(unsigned bits) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
  return r;
}

Integer pow10(int digits) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return r;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string format_scaled(const Integer& scaled, int digits) {
  // scaled = value * 10^digits, already rounded.
  Integer mag = abs(scaled);
  std::string s = mag.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  if (scaled < 0) s.insert(0, "-");
  return s;
}

// Integer n with floor(x * 10^digits) etc. for exact rationals.
Integer round_rational(const Rational& x, Rounding mode) {
  if (mode == Rounding::Truncate) {
    Integer r;
    mpz_tdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
  }
  Rational half(1, 2);
  return x >= 0 ? floor_of(x + half) : -floor_of(-x + half);
}

}  // namespace

std::pair<Integer, Integer> square_decompose(const Integer& n_in) {
  if (n_in <= 0) throw Error(ErrorKind::InvalidArgument, "radicand must be positive");
  Integer n = n_in;
  Integer square = 1;
  Integer free = 1;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    for (int k = 0; k + 1 < e; k += 2) square *= p;
    if (e % 2) free *= p;
  }
  if (n > 1) {
    // Every prime factor of n now exceeds the trial limit.
    const Integer limit = Integer(kTrialLimit) * kTrialLimit;
    if (n < limit) {
      free *= n;
    } else if (is_perfect_square(n)) {
      square *= isqrt(n);
    } else if (n < limit * kTrialLimit) {
      free *= n;  // at most two large prime factors, distinct
    } else {
      throw Error(ErrorKind::RadicandTooLarge, "cannot certify squarefree part of " + n_in.get_str());
    }
  }
  return {square, free};
}

SurdSum::SurdSum(const Rational& c) {
  Rational r = c;
  r.canonicalize();
  if (r != 0) terms_.emplace(Integer(1), r);
}

SurdSum SurdSum::root(const Rational& c, const Integer& n) {
  SurdSum s;
  Rational r = c;
  r.canonicalize();
  if (r == 0) return s;
  auto [sq, d] = square_decompose(n);
  s.terms_.emplace(d, r * sq);
  return s;
}

SurdSum SurdSum::from_terms(const TermMap& terms) {
  SurdSum s;
  for (const auto& [n, c] : terms) s += root(c, n);
  return s;
}

bool SurdSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdSum::rational_part() const { return coefficient(Integer(1)); }

Rational SurdSum::coefficient(const Integer& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SurdSum::add_term(const Integer& d, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SurdSum SurdSum::operator-() const {
  SurdSum r = *this;
  for (auto& [d, c] : r.terms_) c = -c;
  return r;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

SurdSum& SurdSum::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= s;
  return *this;
}

SurdSum& SurdSum::operator/=(const Rational& s) {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "division of a surd sum by zero");
  for (auto& [d, c] : terms_) c /= s;
  return *this;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
  SurdSum r;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) {
      // sqrt(da) sqrt(db) = g sqrt(da db / g^2) with g = gcd(da, db), both squarefree.
      Integer g = gcd(da, db);
      r.add_term((da / g) * (db / g), ca * cb * g);
    }
  return r;
}

std::pair<Rational, Rational> SurdSum::enclose(unsigned bits) const {
  const Integer scale = pow2(bits);
  const Integer scale2 = scale * scale;
  Rational lo = 0;
  Rational hi = 0;
  for (const auto& [d, c] : terms_) {
    if (d == 1) {
      lo += c;
      hi += c;
      continue;
    }
    // d is squarefree and > 1, so sqrt(d) is irrational: r/2^b < sqrt(d) < (r+1)/2^b.
    Integer r = isqrt(d * scale2);
    Rational below(r, scale);
    Rational above(r + 1, scale);
    below.canonicalize();
    above.canonicalize();
    if (c > 0) {
      lo += c * below;
      hi += c * above;
    } else {
      lo += c * above;
      hi += c * below;
    }
  }
  return {lo, hi};
}

int SurdSum::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_.begin()->second);
  for (unsigned bits = 64;; bits *= 2) {
    auto [lo, hi] = enclose(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

double SurdSum::to_double() const {
  auto [lo, hi] = enclose(80);
  return Rational((lo + hi) / 2).get_d();
}

std::string SurdSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (d == 1) {
      s += kstab::to_string(mag);
    } else {
      if (mag != 1) s += kstab::to_string(mag) + "*";
      s += "sqrt(" + d.get_str() + ")";
    }
  }
  return s;
}

int compare(const SurdSum& a, const SurdSum& b) { return (a - b).sign(); }

std::string rational_decimal(const Rational& q, int digits, Rounding mode) {
  if (digits < 1) throw Error(ErrorKind::InvalidArgument, "digits must be >= 1");
  return format_scaled(round_rational(q * pow10(digits), mode), digits);
}

std::string surd_decimal(const SurdSum& a, int digits, Rounding mode) {
  if (digits < 1) throw Error(ErrorKind::InvalidArgument, "digits must be >= 1");
  if (a.is_rational()) return rational_decimal(a.rational_part(), digits, mode);
  const Rational scale(pow10(digits));
  const int s = a.sign();
  // The scaled value is irrational, so it is never an integer or a half-integer
  // and the enclosure eventually pins down the rounded result.
  for (unsigned bits = 64;; bits *= 2) {
    auto [lo, hi] = a.enclose(bits);
    Integer rl, rh;
    if (mode == Rounding::Nearest) {
      rl = floor_of(lo * scale + Rational(1, 2));
      rh = floor_of(hi * scale + Rational(1, 2));
    } else if (s > 0) {
      rl = floor_of(lo * scale);
      rh = floor_of(hi * scale);
    } else {
      rl = -floor_of(-lo * scale);
      rh = -floor_of(-hi * scale);
    }
    if (rl == rh) return format_scaled(rl, digits);
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Point2& p) { return "(" + p.x.get_str() + "," + p.y.get_str() + ")"; }

Integer gcd_all(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

Integer det2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

Integer det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Integer dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace kstab
