#include <iostream>

#include "CLI11.hpp"
#include "kstab/report.hpp"

namespace {

int fail(const kstab::Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return kstab::is_geometric(e.kind()) ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace kstab;
  CLI::App app{"Exact K-stability and deformation checks for toric examples", "kstab"};
  app.require_subcommand(1);

  std::string input;
  std::string convention;
  std::string format = "text";
  std::string weight;
  std::string weights;
  int n = 0;
  int digits = 0;
  CommandOptions opts;

  auto add_common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) sub->add_option("input", input, "preset name or problem file")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze = app.add_subcommand("analyze", "polygon integrals, S0, Futaki invariant and Zhou-Zhu margins");
  add_common(analyze, true);
  analyze->add_option("--convention", convention, "euclidean, sup, lattice or all");
  analyze->add_option("--n", n, "complex dimension used in the Zhou-Zhu bound")->check(CLI::PositiveNumber);
  analyze->add_option("--digits", digits, "decimal digits")->check(CLI::Range(1, 1000));

  auto* cone = app.add_subcommand("cone", "smoothness and Reeb-vector checks");
  add_common(cone, true);

  auto* slice = app.add_subcommand("slice", "cross-section of the cone at a weight");
  add_common(slice, true);
  slice->add_option("--weight", weight, "a,b,c")->required();

  auto* deform = app.add_subcommand("deform", "Minkowski decompositions of slices");
  add_common(deform, true);
  deform->add_option("--weights", weights, "a,b,c;d,e,f");
  deform->add_option("--max-terms", opts.bounds.max_terms, "largest decomposition searched")->check(CLI::Range(1, 16));
  deform->add_option("--denominator-bound", opts.bounds.denominator_bound, "largest summand denominator")
      ->check(CLI::Range(1, 1000));

  auto* stab = app.add_subcommand("stab", "torus-action stability of weight supports");
  add_common(stab, true);

  auto* presets = app.add_subcommand("presets", "list the built-in examples");
  add_common(presets, false);

  auto* show = app.add_subcommand("show", "print an input in the problem text format");
  show->add_option("input", input, "preset name or problem file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    opts.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (!convention.empty()) opts.convention = parse_convention(convention);
    if (n > 0) opts.n = n;
    if (digits > 0) opts.digits = digits;
    if (!weight.empty()) opts.weight = parse_weight(weight);
    if (!weights.empty()) opts.weights = parse_weight_list(weights);

    if (*presets) {
      run_presets(opts, std::cout);
      return 0;
    }
    const Input in = load_input(input);
    if (*analyze) run_analyze(in, opts, std::cout);
    else if (*cone) run_cone(in, opts, std::cout);
    else if (*slice) run_slice(in, opts, std::cout);
    else if (*deform) run_deform(in, opts, std::cout);
    else if (*stab) run_stab(in, opts, std::cout);
    else if (*show) run_show(in, std::cout);
  } catch (const Error& e) {
    return fail(e);
  }
  return 0;
}
