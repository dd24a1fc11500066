// Problem specifications: the line-oriented text format and the preset
// registry of published toric examples.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/cone.hpp"
#include "kstab/exact.hpp"
#include "kstab/polytope.hpp"

namespace kstab {

enum class ConventionChoice { Euclidean, SupNorm, LatticePrimitive, All };

std::string_view name(ConventionChoice c);
ConventionChoice parse_convention(std::string_view s);
std::vector<MeasureConvention> expand(ConventionChoice c);

/// Text format, one directive per line, '#' starts a comment:
///
///   halfplane <ux> <uy> <lambda>
///   ray <x> <y> <z>
///   fanray <x> <y>
///   reeb <x> <y> <z>
///   weight <x> <y> <z>
///   support-set              (opens a new stability query)
///   support <x> <y> <z>      (adds to the current query)
///   convention euclidean|sup|lattice|all
///   n <int>
///   digits <int>
struct ProblemSpec {
  std::vector<HalfPlane> halfplanes;
  std::vector<Vec3> rays;
  std::vector<Vec2> fan;  // bare fan rays, no polarization
  Vec3 reeb{0, 0, 1};
  std::vector<Vec3> weights;
  std::vector<std::vector<Vec3>> support_sets;
  ConventionChoice convention = ConventionChoice::SupNorm;
  int n = 2;
  int digits = 8;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

ProblemSpec parse_problem(std::string_view text);
std::string serialize(const ProblemSpec& spec);

/// Checks the cross-field invariants; throws InconsistentSpec.
void validate(const ProblemSpec& spec);

/// Half-planes as given, or read off the rays as (u, lambda) = (x, y; z).
std::vector<HalfPlane> effective_halfplanes(const ProblemSpec& spec);
/// Rays as given, or lifted from the half-planes.
std::vector<Vec3> effective_rays(const ProblemSpec& spec);

/// A value stated alongside a preset, printed next to what is computed.
struct Annotation {
  std::string quantity;
  std::string value;
  std::string source;  // "published" or "derived"
};

/// A published average scalar curvature: the exact expression and the
/// leading decimal digits as printed.
struct PublishedS0 {
  SurdSum exact;
  std::string exact_text;
  std::string decimal;
};

struct Preset {
  std::string name;
  std::string description;
  ProblemSpec spec;
  std::vector<Annotation> annotations;
  std::optional<PublishedS0> published_s0;
};

/// example1, example2, example2-corrected, example3, cp1cp1-quotient:<q>,
/// cp1cp1-minres-q3. Throws UnknownPreset.
Preset preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace kstab
