#include "kstab/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kstab/cone.hpp"
#include "kstab/polytope.hpp"
#include "kstab/stability.hpp"

namespace kstab {

using nlohmann::json;

namespace {

json number(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json rational_json(const Rational& q) { return {{"num", number(q.get_num())}, {"den", number(q.get_den())}}; }

json surd_terms(const SurdSum& s) {
  json terms = json::array();
  for (const auto& [d, c] : s.terms()) terms.push_back({{"d", number(d)}, {"num", number(c.get_num())}, {"den", number(c.get_den())}});
  return terms;
}

json surd_json(const SurdSum& s, int digits) {
  return {{"exact", surd_terms(s)}, {"text", s.to_string()}, {"decimal", surd_decimal(s, digits)}};
}

json point_json(const Point2& p) { return json::array({p.x.get_str(), p.y.get_str()}); }

template <std::size_t N>
json vec_json(const IntVec<N>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(number(c));
  return a;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& c : w) a.push_back(number(c));
  return a;
}

bool terminates(const SurdSum& s, int digits) {
  if (!s.is_rational()) return false;
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = s.rational_part() * p;
  scaled.canonicalize();
  return scaled.get_den() == 1;
}

/// Leading digits in the printed style: truncated, with "..." when inexact.
std::string printed_decimal(const SurdSum& s, int digits) {
  return surd_decimal(s, digits, Rounding::Truncate) + (terminates(s, digits) ? "" : "...");
}

int fractional_digits(const std::string& decimal) {
  auto dot = decimal.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(decimal.size() - dot - 1);
}

bool matches_published(const SurdSum& value, const std::string& published) {
  const int digits = fractional_digits(published);
  return digits > 0 && surd_decimal(value, digits, Rounding::Truncate) == published;
}

void emit(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

ConventionChoice convention_of(const Input& in, const CommandOptions& o) {
  return o.convention.value_or(in.spec.convention);
}
int n_of(const Input& in, const CommandOptions& o) { return o.n.value_or(in.spec.n); }
int digits_of(const Input& in, const CommandOptions& o) { return o.digits.value_or(in.spec.digits); }

void print_annotations(const Input& in, std::ostream& out) {
  if (!in.preset || in.preset->annotations.empty()) return;
  out << "stated values (" << in.preset->name << "):\n";
  for (const auto& a : in.preset->annotations)
    out << "  " << a.quantity << ": " << a.value << "  [" << a.source << "]\n";
}

json annotations_json(const Input& in) {
  json a = json::array();
  if (in.preset)
    for (const auto& x : in.preset->annotations) a.push_back({{"quantity", x.quantity}, {"value", x.value}, {"source", x.source}});
  return a;
}

Cone3 build_cone(const ProblemSpec& spec) {
  auto rays = effective_rays(spec);
  if (rays.empty()) throw Error(ErrorKind::InconsistentSpec, "this command needs half-planes or rays");
  return Cone3::from_rays(rays);
}

}  // namespace

Vec3 parse_weight(const std::string& text) {
  std::vector<Integer> parts;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    Integer v;
    if (tok.empty() || v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
      throw Error(ErrorKind::Parse, "bad weight component '" + tok + "' in '" + text + "'");
    parts.push_back(v);
  }
  if (parts.size() != 3) throw Error(ErrorKind::Parse, "weight '" + text + "' must have 3 components");
  return {parts[0], parts[1], parts[2]};
}

std::vector<Vec3> parse_weight_list(const std::string& text) {
  std::vector<Vec3> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ';');)
    if (!tok.empty()) out.push_back(parse_weight(tok));
  return out;
}

Input load_input(const std::string& arg) {
  try {
    Preset p = preset(arg);
    return {p.name, p.spec, p};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnknownPreset || !std::filesystem::is_regular_file(arg)) throw;
  }
  std::ifstream file(arg);
  std::stringstream buf;
  buf << file.rdbuf();
  return {arg, parse_problem(buf.str()), std::nullopt};
}

void run_analyze(const Input& in, const CommandOptions& opts, std::ostream& out) {
  const auto hs = effective_halfplanes(in.spec);
  if (hs.empty()) throw Error(ErrorKind::InconsistentSpec, "analyze needs half-planes or rays");
  const Polygon poly = Polygon::from_halfplanes(hs);
  const int digits = digits_of(in, opts);
  const int n = n_of(in, opts);
  const auto conventions = expand(convention_of(in, opts));
  const Rational a = area(poly);
  const auto published = in.preset ? in.preset->published_s0 : std::nullopt;

  json j;
  j["command"] = "analyze";
  j["input"] = in.label;
  j["n"] = n;
  j["digits"] = digits;
  j["polygon"]["vertices"] = json::array();
  for (const auto& v : poly.vertices()) j["polygon"]["vertices"].push_back(point_json(v));
  j["polygon"]["area"] = rational_json(a);
  j["polygon"]["area_decimal"] = rational_decimal(a, digits);

  std::ostringstream text;
  text << "input: " << in.label << "\n";
  text << "polygon: " << poly.size() << " vertices";
  for (const auto& v : poly.vertices()) text << " " << to_string(v);
  text << "\narea = " << to_string(a) << "\n";

  const bool sup_selected = std::find(conventions.begin(), conventions.end(), MeasureConvention::SupNorm) != conventions.end();
  if (sup_selected)
    text << "note: the sup convention divides each edge length by max(|u_x|, |u_y|); it reproduces published\n"
            "      values, while the Euclidean norm |u| that the usual notation suggests gives a different S0.\n";

  j["conventions"] = json::array();
  for (auto conv : conventions) {
    const SurdSum bm = boundary_measure(poly, conv);
    const SurdSum s0 = bm / a;
    const SurdSum lx = futaki(poly, AffineFunction::x(), conv);
    const SurdSum ly = futaki(poly, AffineFunction::y(), conv);
    json c;
    c["convention"] = name(conv);
    c["boundary_measure"] = surd_json(bm, digits);
    c["s0_exact"] = surd_terms(s0);
    c["s0_text"] = s0.to_string();
    c["s0_decimal"] = surd_decimal(s0, digits);
    c["s0_truncated"] = surd_decimal(s0, digits, Rounding::Truncate);
    c["futaki"] = {{"x", surd_json(lx, digits)}, {"y", surd_json(ly, digits)}, {"vanishes", lx.is_zero() && ly.is_zero()}};

    text << "[convention " << name(conv) << "]\n";
    text << "  boundary measure = " << bm.to_string() << "\n";
    text << "  S0 exact = " << s0.to_string() << "\n";
    text << "  S0 = " << printed_decimal(s0, digits) << " (rounded " << surd_decimal(s0, digits) << ")\n";
    text << "  L(x) = " << lx.to_string() << ", L(y) = " << ly.to_string() << "\n";

    try {
      const auto zz = zhou_zhu(poly, n, conv);
      json margins = json::array();
      for (const auto& m : zz.margins)
        margins.push_back({{"facet", m.halfplane + 1},
                           {"bound", rational_json(m.bound)},
                           {"margin_exact", surd_terms(m.margin)},
                           {"margin_decimal", surd_decimal(m.margin, digits)},
                           {"sign", m.sign}});
      c["margins"] = margins;
      c["zhou_zhu"] = {{"verdict", zz.pass ? "Pass" : "Fail"}, {"futaki_vanishes", zz.futaki_vanishes}};
      const auto& worst = zz.margins[zz.worst()];
      text << "  Zhou-Zhu (n=" << n << "): " << (zz.pass ? "Pass" : "Fail") << "; futaki "
           << (zz.futaki_vanishes ? "vanishes" : "does not vanish") << "; worst margin at facet " << worst.halfplane + 1
           << ": " << to_string(worst.bound) << " - S0 = " << surd_decimal(worst.margin, digits) << "\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonpositiveLevel) throw;
      c["zhou_zhu"] = {{"verdict", "NotApplicable"}, {"reason", e.what()}};
      text << "  Zhou-Zhu: not applicable (" << e.what() << ")\n";
    }

    if (published) {
      const bool match = matches_published(s0, published->decimal);
      c["published_decimal_match"] = match;
      c["published_exact_match"] = published->exact == s0;
      text << "  published decimal " << published->decimal << "...: " << (match ? "matches" : "MISMATCH") << "\n";
    }
    j["conventions"].push_back(c);
  }

  if (published) {
    const int pd = fractional_digits(published->decimal);
    const bool self_consistent = matches_published(published->exact, published->decimal);
    json p;
    p["exact_text"] = published->exact_text;
    p["exact"] = surd_terms(published->exact);
    p["decimal"] = published->decimal;
    p["exact_evaluates_to"] = printed_decimal(published->exact, pd);
    p["self_consistent"] = self_consistent;
    text << "published S0 = " << published->exact_text << " = " << published->decimal << "...\n";
    if (!self_consistent) {
      text << "  inconsistent: the published exact expression evaluates to " << printed_decimal(published->exact, pd)
           << ", not " << published->decimal << "...\n";
    }
    // Locate the term that breaks self-consistency against the sup value.
    const SurdSum sup_s0 = boundary_measure(poly, MeasureConvention::SupNorm) / a;
    json diffs = json::array();
    for (const auto& [d, c] : published->exact.terms()) {
      Rational computed = sup_s0.coefficient(d);
      if (computed != c) {
        diffs.push_back({{"d", number(d)}, {"published", to_string(c)}, {"computed_sup", to_string(computed)}});
        text << "  term sqrt(" << d.get_str() << "): published coefficient " << to_string(c) << ", computed (sup) "
             << to_string(computed) << "\n";
      }
    }
    p["term_differences_vs_sup"] = diffs;
    j["published_s0"] = p;
  }
  j["annotations"] = annotations_json(in);

  if (opts.format == OutputFormat::Json) {
    emit(j, out);
  } else {
    out << text.str();
    print_annotations(in, out);
  }
}

void run_cone(const Input& in, const CommandOptions& opts, std::ostream& out) {
  json j;
  j["command"] = "cone";
  j["input"] = in.label;
  std::ostringstream text;
  text << "input: " << in.label << "\n";

  if (!in.spec.fan.empty()) {
    json pairs = json::array();
    bool smooth = true;
    const auto& f = in.spec.fan;
    text << "fan rays:";
    for (const auto& r : f) text << " " << to_string(r);
    text << "\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::size_t k = (i + 1) % f.size();
      Integer d = det2(f[i], f[k]);
      Integer mult = abs(d);
      smooth = smooth && mult == 1;
      pairs.push_back({{"first", i + 1}, {"second", k + 1}, {"det", number(d)}});
      text << "  cone(u" << i + 1 << ", u" << k + 1 << "): |det| = " << mult.get_str() << (mult == 1 ? "" : "  (orbifold point)")
           << "\n";
    }
    text << "fan smooth: " << (smooth ? "yes" : "no") << "\n";
    j["fan"] = {{"pairs", pairs}, {"smooth", smooth}};
  }

  if (!effective_rays(in.spec).empty()) {
    const Cone3 cone = build_cone(in.spec);
    const auto sm = smooth_away_from_vertex(cone);
    const auto reeb = is_reeb_interior(cone, in.spec.reeb);
    text << "rays:";
    for (const auto& r : cone.rays()) text << " " << to_string(r);
    text << "\nstrongly convex: yes\n";
    for (auto i : cone.interior_rays())
      text << "note: w" << i + 1 << " = " << to_string(cone.rays()[i]) << " lies inside the cone of the other rays\n";
    text << "smoothness away from the vertex (gcd of 2x2 minors of successive rays):\n";
    json pairs = json::array();
    for (const auto& p : sm.pairs) {
      text << "  w" << p.first + 1 << ", w" << p.second + 1 << ": gcd " << p.minor_gcd.get_str()
           << (p.minor_gcd == 1 ? "" : "  FAIL") << "\n";
      pairs.push_back({{"first", p.first + 1}, {"second", p.second + 1}, {"gcd", number(p.minor_gcd)}});
    }
    text << "smooth away from vertex: " << (sm.smooth ? "PASS" : "FAIL") << "\n";
    text << "reeb " << to_string(in.spec.reeb) << " interior: " << (reeb.interior ? "yes" : "no");
    if (!reeb.interior)
      text << " (facet " << *reeb.violating_facet + 1 << " pairs to " << reeb.violating_pairing.get_str() << ")";
    text << "\n";
    json normals = json::array();
    for (const auto& nu : cone.facet_normals()) normals.push_back(vec_json(nu));
    j["cone"] = {{"rays", json::array()}, {"facet_normals", normals}, {"strongly_convex", true},
                 {"smoothness", {{"pairs", pairs}, {"smooth", sm.smooth}}},
                 {"reeb", {{"vector", vec_json(in.spec.reeb)}, {"interior", reeb.interior}}}};
    for (const auto& r : cone.rays()) j["cone"]["rays"].push_back(vec_json(r));
    j["cone"]["interior_rays"] = json::array();
    for (auto i : cone.interior_rays()) j["cone"]["interior_rays"].push_back(i + 1);
    if (!reeb.interior) j["cone"]["reeb"]["violating_facet"] = *reeb.violating_facet + 1;
  }
  j["annotations"] = annotations_json(in);

  if (opts.format == OutputFormat::Json) {
    emit(j, out);
  } else {
    out << text.str();
    print_annotations(in, out);
  }
}

namespace {

json slice_json(const SlicePolyhedron& s) {
  json v = json::array();
  for (const auto& p : s.compact_vertices) v.push_back(point_json(p));
  json t = json::array();
  for (const auto& r : s.tail_rays) t.push_back(vec_json(r));
  return {{"weight", vec_json(s.weight)}, {"compact_vertices", v}, {"tail_rays", t}, {"bounded", s.bounded()}};
}

void slice_text(const SlicePolyhedron& s, std::ostream& out, const std::string& indent) {
  out << indent << "compact vertices:";
  for (const auto& p : s.compact_vertices) out << " " << to_string(p);
  out << "\n" << indent << "tail rays:";
  if (s.tail_rays.empty()) out << " none (bounded)";
  for (const auto& r : s.tail_rays) out << " " << to_string(r);
  out << "\n";
}

}  // namespace

void run_slice(const Input& in, const CommandOptions& opts, std::ostream& out) {
  if (!opts.weight) throw Error(ErrorKind::Parse, "slice needs --weight a,b,c");
  const Cone3 cone = build_cone(in.spec);
  const auto chart = PlaneChart::for_weight(*opts.weight);
  const auto s = cross_section(cone, *opts.weight);
  if (opts.format == OutputFormat::Json) {
    json j = slice_json(s);
    j["command"] = "slice";
    j["input"] = in.label;
    j["chart"] = {{"b1", vec_json(chart.b1)}, {"b2", vec_json(chart.b2)},
                  {"origin", json::array({chart.origin[0].get_str(), chart.origin[1].get_str(), chart.origin[2].get_str()})}};
    emit(j, out);
    return;
  }
  out << "input: " << in.label << "\n";
  out << "slice at weight " << to_string(*opts.weight) << ": points origin + s*" << to_string(chart.b1) << " + t*"
      << to_string(chart.b2) << ", coordinates (s,t)\n";
  slice_text(s, out, "  ");
}

void run_deform(const Input& in, const CommandOptions& opts, std::ostream& out) {
  const Cone3 cone = build_cone(in.spec);
  const auto weights = opts.weights.value_or(in.spec.weights);
  if (weights.empty()) throw Error(ErrorKind::Parse, "deform needs --weights or weight lines in the input");
  const auto report = deformation_dimensions(cone, weights, opts.bounds);

  json j;
  j["command"] = "deform";
  j["input"] = in.label;
  j["bounds"] = {{"max_terms", opts.bounds.max_terms}, {"denominator_bound", opts.bounds.denominator_bound}};
  j["weights"] = json::array();
  std::ostringstream text;
  text << "input: " << in.label << "\n";
  text << "bounds: max terms " << opts.bounds.max_terms << ", denominator bound " << opts.bounds.denominator_bound << "\n";
  for (const auto& w : report.weights) {
    const auto edges = slice_edges(w.slice);
    json summands = json::array();
    for (const auto& s : w.witness.summands) {
      json mult = json::array();
      for (const auto& m : s.multiplicities) mult.push_back(to_string(m));
      json verts = json::array();
      for (const auto& v : s.normalized_vertices()) verts.push_back(point_json(v));
      json tails = json::array();
      for (const auto& r : s.tail_rays) tails.push_back(vec_json(r));
      summands.push_back({{"multiplicities", mult}, {"vertices", verts}, {"tail_rays", tails}});
    }
    j["weights"].push_back({{"weight", vec_json(w.weight)},
                            {"slice", slice_json(w.slice)},
                            {"max_terms", w.max_terms},
                            {"dimension", w.dimension},
                            {"decompositions", w.decompositions},
                            {"witness", summands}});

    text << "weight " << to_string(w.weight) << ":\n";
    slice_text(w.slice, text, "  ");
    text << "  edges:";
    for (const auto& e : edges) text << " " << to_string(e.multiplicity) << "*" << to_string(e.direction);
    text << "\n  admissible decompositions: " << w.decompositions << ", maximal term count k = " << w.max_terms
         << ", dimension k - 1 = " << w.dimension << "\n";
    for (std::size_t i = 0; i < w.witness.summands.size(); ++i) {
      const auto& s = w.witness.summands[i];
      text << "    summand " << i << ": multiplicities";
      for (const auto& m : s.multiplicities) text << " " << to_string(m);
      text << "; vertices";
      for (const auto& v : s.normalized_vertices()) text << " " << to_string(v);
      if (!s.tail_rays.empty()) text << "; + tail cone";
      text << "\n";
    }
  }
  j["total_dimension"] = report.total_dimension;
  text << "total deformation dimension = " << report.total_dimension << "\n";
  j["annotations"] = annotations_json(in);

  if (opts.format == OutputFormat::Json) {
    emit(j, out);
  } else {
    out << text.str();
    print_annotations(in, out);
  }
}

void run_stab(const Input& in, const CommandOptions& opts, std::ostream& out) {
  json j;
  j["command"] = "stab";
  j["input"] = in.label;
  j["verdicts"] = json::array();
  std::ostringstream text;
  text << "input: " << in.label << "\n";
  if (in.spec.support_sets.empty()) text << "no support sets given\n";
  for (const auto& set : in.spec.support_sets) {
    const auto point = WeightedPoint::from(set);
    const auto v = classify(point);
    json support = json::array();
    text << "support {";
    for (std::size_t i = 0; i < set.size(); ++i) {
      support.push_back(vec_json(set[i]));
      text << (i ? ", " : "") << to_string(set[i]);
    }
    text << "}: " << name(v.verdict);
    json entry = {{"support", support}, {"verdict", name(v.verdict)}};
    if (v.destabilizer) {
      json limit = json::array();
      for (const auto& w : v.destabilizer->limit_support) limit.push_back(weight_json(w));
      entry["destabilizer"] = {{"one_parameter_subgroup", weight_json(v.destabilizer->one_parameter_subgroup)},
                               {"limit_support", limit}};
      text << "; destabilizer lambda = (";
      const auto& l = v.destabilizer->one_parameter_subgroup;
      for (std::size_t i = 0; i < l.size(); ++i) text << (i ? "," : "") << l[i].get_str();
      text << "), limit support size " << v.destabilizer->limit_support.size();
    }
    text << "\n";
    j["verdicts"].push_back(entry);
  }
  j["annotations"] = annotations_json(in);
  if (opts.format == OutputFormat::Json) {
    emit(j, out);
  } else {
    out << text.str();
    print_annotations(in, out);
  }
}

void run_presets(const CommandOptions& opts, std::ostream& out) {
  if (opts.format == OutputFormat::Json) {
    emit(json{{"presets", preset_names()}}, out);
    return;
  }
  for (const auto& n : preset_names()) {
    const bool family = n == "cp1cp1-quotient:<q>";
    out << n << "  " << (family ? "fan of CP1 x CP1 / Z_q, q >= 1" : preset(n).description) << "\n";
  }
}

void run_show(const Input& in, std::ostream& out) { out << serialize(in.spec); }

}  // namespace kstab
