// Command implementations shared by the CLI and the tests: each one loads
// its input, runs the modules and renders a text or JSON report.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kstab/deform.hpp"
#include "kstab/problem.hpp"

namespace kstab {

enum class OutputFormat { Text, Json };

struct CommandOptions {
  std::optional<ConventionChoice> convention;
  std::optional<int> n;
  std::optional<int> digits;
  DecompositionBounds bounds;
  OutputFormat format = OutputFormat::Text;
  std::optional<Vec3> weight;
  std::optional<std::vector<Vec3>> weights;
};

struct Input {
  std::string label;
  ProblemSpec spec;
  std::optional<Preset> preset;
};

/// A preset name, or else a path to a problem file.
Input load_input(const std::string& name_or_path);

/// "a,b,c" and "a,b,c;d,e,f;...".
Vec3 parse_weight(const std::string& text);
std::vector<Vec3> parse_weight_list(const std::string& text);

void run_analyze(const Input& in, const CommandOptions& opts, std::ostream& out);
void run_cone(const Input& in, const CommandOptions& opts, std::ostream& out);
void run_slice(const Input& in, const CommandOptions& opts, std::ostream& out);
void run_deform(const Input& in, const CommandOptions& opts, std::ostream& out);
void run_stab(const Input& in, const CommandOptions& opts, std::ostream& out);
void run_presets(const CommandOptions& opts, std::ostream& out);
void run_show(const Input& in, std::ostream& out);

}  // namespace kstab
