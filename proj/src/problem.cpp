#include "kstab/problem.hpp"

#include <charconv>
#include <sstream>

namespace kstab {

std::string_view name(ConventionChoice c) {
  switch (c) {
    case ConventionChoice::Euclidean: return "euclidean";
    case ConventionChoice::SupNorm: return "sup";
    case ConventionChoice::LatticePrimitive: return "lattice";
    case ConventionChoice::All: return "all";
  }
  return "?";
}

ConventionChoice parse_convention(std::string_view s) {
  if (s == "euclidean") return ConventionChoice::Euclidean;
  if (s == "sup") return ConventionChoice::SupNorm;
  if (s == "lattice") return ConventionChoice::LatticePrimitive;
  if (s == "all") return ConventionChoice::All;
  throw Error(ErrorKind::Parse, "unknown convention '" + std::string(s) + "'");
}

std::vector<MeasureConvention> expand(ConventionChoice c) {
  switch (c) {
    case ConventionChoice::Euclidean: return {MeasureConvention::Euclidean};
    case ConventionChoice::SupNorm: return {MeasureConvention::SupNorm};
    case ConventionChoice::LatticePrimitive: return {MeasureConvention::LatticePrimitive};
    case ConventionChoice::All:
      return {MeasureConvention::Euclidean, MeasureConvention::SupNorm, MeasureConvention::LatticePrimitive};
  }
  return {};
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

Integer parse_integer(const std::string& tok, std::size_t line) {
  Integer v;
  std::string body = tok;
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  if (body.empty() || v.set_str(body, 10) != 0) fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

int parse_int(const std::string& tok, std::size_t line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

template <std::size_t N>
IntVec<N> parse_vec(const std::vector<std::string>& toks, std::size_t line) {
  if (toks.size() != N + 1) fail(line, "'" + toks[0] + "' takes " + std::to_string(N) + " integers");
  IntVec<N> v;
  for (std::size_t i = 0; i < N; ++i) v[i] = parse_integer(toks[i + 1], line);
  return v;
}

template <std::size_t N>
std::string join(const IntVec<N>& v) {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  ProblemSpec spec;
  bool saw_reeb = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> toks;
    for (std::string w; words >> w;) toks.push_back(w);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "halfplane") {
      auto v = parse_vec<3>(toks, line);
      spec.halfplanes.push_back({{v[0], v[1]}, v[2]});
    } else if (key == "ray") {
      spec.rays.push_back(parse_vec<3>(toks, line));
    } else if (key == "fanray") {
      spec.fan.push_back(parse_vec<2>(toks, line));
    } else if (key == "reeb") {
      if (saw_reeb) fail(line, "reeb given twice");
      saw_reeb = true;
      spec.reeb = parse_vec<3>(toks, line);
    } else if (key == "weight") {
      spec.weights.push_back(parse_vec<3>(toks, line));
    } else if (key == "support-set") {
      if (toks.size() != 1) fail(line, "'support-set' takes no arguments");
      spec.support_sets.emplace_back();
    } else if (key == "support") {
      if (spec.support_sets.empty()) spec.support_sets.emplace_back();
      spec.support_sets.back().push_back(parse_vec<3>(toks, line));
    } else if (key == "convention") {
      if (toks.size() != 2) fail(line, "'convention' takes one value");
      try {
        spec.convention = parse_convention(toks[1]);
      } catch (const Error& e) {
        fail(line, e.what());
      }
    } else if (key == "n" || key == "digits") {
      if (toks.size() != 2) fail(line, "'" + key + "' takes one integer");
      int v = parse_int(toks[1], line);
      if (v < 1) fail(line, "'" + key + "' must be positive");
      (key == "n" ? spec.n : spec.digits) = v;
    } else {
      fail(line, "unknown directive '" + key + "'");
    }
  }
  validate(spec);
  return spec;
}

std::string serialize(const ProblemSpec& spec) {
  std::ostringstream out;
  for (const auto& h : spec.halfplanes)
    out << "halfplane " << h.normal[0].get_str() << " " << h.normal[1].get_str() << " " << h.level.get_str() << "\n";
  for (const auto& r : spec.rays) out << "ray " << join(r) << "\n";
  for (const auto& f : spec.fan) out << "fanray " << join(f) << "\n";
  out << "reeb " << join(spec.reeb) << "\n";
  for (const auto& w : spec.weights) out << "weight " << join(w) << "\n";
  for (const auto& set : spec.support_sets) {
    out << "support-set\n";
    for (const auto& w : set) out << "support " << join(w) << "\n";
  }
  out << "convention " << name(spec.convention) << "\n";
  out << "n " << spec.n << "\n";
  out << "digits " << spec.digits << "\n";
  return out.str();
}

void validate(const ProblemSpec& spec) {
  if (spec.halfplanes.empty() && spec.rays.empty() && spec.fan.empty())
    throw Error(ErrorKind::InconsistentSpec, "no half-planes, rays or fan rays given");
  if (!spec.halfplanes.empty() && !spec.rays.empty() && lift_rays(spec.halfplanes) != spec.rays)
    throw Error(ErrorKind::InconsistentSpec, "rays must be the (u, lambda) lift of the half-planes");
  if (spec.n < 1 || spec.digits < 1) throw Error(ErrorKind::InconsistentSpec, "n and digits must be positive");
}

std::vector<HalfPlane> effective_halfplanes(const ProblemSpec& spec) {
  if (!spec.halfplanes.empty()) return spec.halfplanes;
  std::vector<HalfPlane> hs;
  for (const auto& r : spec.rays) hs.push_back({{r[0], r[1]}, r[2]});
  return hs;
}

std::vector<Vec3> effective_rays(const ProblemSpec& spec) {
  if (!spec.rays.empty()) return spec.rays;
  return lift_rays(spec.halfplanes);
}

namespace {

std::vector<HalfPlane> symmetric_halfplanes(const std::vector<Vec2>& normals, const std::vector<long>& levels) {
  std::vector<HalfPlane> hs;
  for (std::size_t i = 0; i < normals.size(); ++i) hs.push_back({normals[i], levels[i]});
  for (std::size_t i = 0; i < normals.size(); ++i) hs.push_back({{-normals[i][0], -normals[i][1]}, levels[i]});
  return hs;
}

SurdSum surd(std::initializer_list<std::tuple<long, long, long>> terms) {
  SurdSum s;
  for (auto [num, den, d] : terms) s += SurdSum::root(Rational(num, den), d);
  return s;
}

void add_common_queries(ProblemSpec& spec) {
  spec.weights = {{1, 0, 0}, {-1, 0, 0}};
  spec.support_sets = {{{1, 0, 0}, {-1, 0, 0}}, {{1, 0, 0}}, {{-1, 0, 0}}, {}};
}

Preset example1() {
  Preset p;
  p.name = "example1";
  p.description = "cone over the minimal resolution of CP1 x CP1 / Z3, lambda = (9,8,8,10,6,9,8,8,10,6)";
  p.spec.halfplanes = symmetric_halfplanes({{1, 0}, {1, 1}, {1, 2}, {1, 3}, {0, 1}}, {9, 8, 8, 10, 6});
  add_common_queries(p.spec);
  p.published_s0 = PublishedS0{surd({{12, 15, 1}, {8, 345, 10}, {2, 115, 5}, {2, 115, 2}}),
                               "12/15 + 8*sqrt(10)/345 + 2*sqrt(5)/115 + 2*sqrt(2)/115", "0.24115"};
  p.annotations = {
      {"S0", "12/15 + 8*sqrt(10)/345 + 2*sqrt(5)/115 + 2*sqrt(2)/115 = 0.24115...", "published"},
      {"Zhou-Zhu inequalities", "satisfied", "published"},
      {"terms of an admissible decomposition at e1*", "3", "published"},
      {"deformation dimension over +-e1*", "4", "published"},
      {"polystable supports", "{} and {e1*, -e1*}", "published"},
      {"area", "115", "derived"},
      {"boundary measure (euclidean)", "26", "derived"},
  };
  return p;
}

std::vector<Vec3> example2_rays(bool corrected) {
  return {{1, 0, 9},   {1, 1, 7},   {1, 3, 10},
          {0, 1, 6},   {-1, 0, 9},  {-1, -1, 7},
          {-1, corrected ? -3 : -1, 10}, {0, -1, 6}};
}

Preset example2(bool corrected) {
  Preset p;
  p.name = corrected ? "example2-corrected" : "example2";
  p.description = corrected
                      ? "partial resolution of CP1 x CP1 / Z3 with w7 = (-1,-3,10) restoring the +- symmetry"
                      : "partial resolution of CP1 x CP1 / Z3, rays as published (w7 = (-1,-1,10))";
  p.spec.rays = example2_rays(corrected);
  add_common_queries(p.spec);
  p.published_s0 = PublishedS0{surd({{20, 223, 1}, {6, 223, 10}, {14, 223, 2}}),
                               "20/223 + 6*sqrt(10)/223 + 14*sqrt(2)/223", "0.26355"};
  p.annotations = {
      {"S0", "20/223 + 6*sqrt(10)/223 + 14*sqrt(2)/223 = 0.26355...", "published"},
      {"successive rays extend to a basis of Z^3", "yes", "published"},
      {"terms of an admissible decomposition at e1*", "2", "published"},
      {"deformation dimension over +-e1*", "2", "published"},
  };
  if (corrected) p.annotations.push_back({"area", "223/2", "derived"});
  else p.annotations.push_back({"gcd of minors of (w6, w7)", "3", "derived"});
  return p;
}

Preset example3() {
  Preset p;
  p.name = "example3";
  p.description = "non-regular modification of example1 with u5 = (0,3), lambda5 = 10";
  p.spec.halfplanes = symmetric_halfplanes({{1, 0}, {1, 1}, {1, 2}, {1, 3}, {0, 3}}, {9, 8, 8, 10, 10});
  add_common_queries(p.spec);
  p.published_s0 = PublishedS0{surd({{32, 265, 1}, {8, 795, 10}, {6, 265, 5}, {6, 265, 2}}),
                               "32/265 + 8*sqrt(10)/795 + 6*sqrt(5)/265 + 6*sqrt(2)/265", "0.23522"};
  p.annotations = {
      {"S0", "32/265 + 8*sqrt(10)/795 + 6*sqrt(5)/265 + 6*sqrt(2)/265 = 0.23522...", "published"},
      {"Zhou-Zhu inequalities", "satisfied", "published"},
      {"terms of an admissible decomposition at e1*", "3", "published"},
      {"deformation dimension over +-e1*", "4", "published"},
      {"area", "265/3", "derived"},
  };
  return p;
}

Preset quotient(long q) {
  Preset p;
  p.name = "cp1cp1-quotient:" + std::to_string(q);
  p.description = "fan of CP1 x CP1 / Z" + std::to_string(q);
  p.spec.fan = {{1, 0}, {1, q}, {-1, 0}, {-1, -q}};
  p.annotations = {{"fan rays", "e1, e1 + q e2, -e1, -e1 - q e2", "published"}};
  return p;
}

Preset minimal_resolution() {
  Preset p;
  p.name = "cp1cp1-minres-q3";
  p.description = "fan of the toric minimal resolution of CP1 x CP1 / Z3";
  p.spec.fan = {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {0, 1}, {-1, 0}, {-1, -1}, {-1, -2}, {-1, -3}, {0, -1}};
  p.annotations = {{"fan rays", "u1..u5 = (1,0),(1,1),(1,2),(1,3),(0,1); u6..u10 = -u1..-u5", "published"}};
  return p;
}

}  // namespace

Preset preset(std::string_view name) {
  if (name == "example1") return example1();
  if (name == "example2") return example2(false);
  if (name == "example2-corrected") return example2(true);
  if (name == "example3") return example3();
  if (name == "cp1cp1-minres-q3") return minimal_resolution();
  constexpr std::string_view prefix = "cp1cp1-quotient:";
  if (name.substr(0, prefix.size()) == prefix) {
    auto digits = name.substr(prefix.size());
    long q = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw Error(ErrorKind::UnknownPreset, "'" + std::string(name) + "' (q must be an integer)");
    if (q < 1) throw Error(ErrorKind::InvalidArgument, "cp1cp1-quotient needs q >= 1");
    return quotient(q);
  }
  throw Error(ErrorKind::UnknownPreset, "'" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"example1", "example2", "example2-corrected", "example3", "cp1cp1-quotient:<q>", "cp1cp1-minres-q3"};
}

}  // namespace kstab
