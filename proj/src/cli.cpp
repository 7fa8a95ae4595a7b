#include "rosette/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "rosette/render.hpp"
#include "rosette/spec_io.hpp"

namespace rosette {

namespace {

struct Options {
  std::vector<std::string> files;
  std::optional<double> lambda;
  std::optional<int> k;
  std::optional<double> alpha;
  int samples = -1;  // -1: command default
  std::string out_path;
  std::string layers = "base";
  std::string scene;
  double stroke_width = 1.0;
  bool mark_cusps = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

ParsedSpec load(const std::string& path) { return load_spec_file(path); }

int oracle_samples(const Options& o) { return o.samples < 0 ? kOracleSamples : o.samples; }

json front_report(const FrontSupport& h, int samples) {
  json j;
  j["support"] = h;
  j["closed"] = closed_measures(h);
  if (samples > 0) j["oracle"] = oracle_measures(h, samples);
  const CuspReport cusps = find_cusps(h);
  j["cusps"] = cusps;
  j["classification"] = to_string(classify_front(h, cusps));
  j["rotation_number"] = rotation_number(h);
  return j;
}

bool tangential(const CuspReport& c) {
  return std::any_of(c.warnings.begin(), c.warnings.end(),
                     [](const std::string& w) { return w != "point_front"; });
}

int front_command(std::ostream& out, const FrontSupport& h, int samples) {
  const json j = front_report(h, samples);
  emit(out, j);
  return tangential(find_cusps(h)) ? kExitDegenerate : kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  FourierSupport p;
  {
    std::ifstream in(o.files[0], std::ios::binary);
    if (!in) throw SpecParseError("cannot open curve file " + o.files[0]);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    p = read_spec(text);
  }
  const ValidationReport v = validate_rosette(p);
  emit(out, {{"curve", p}, {"validation", v}});
  return v.is_rosette ? kExitOk : kExitNotRosette;
}

int cmd_print(const Options& o, std::ostream& out) {
  std::ifstream in(o.files[0], std::ios::binary);
  if (!in) throw SpecParseError("cannot open curve file " + o.files[0]);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  out << print_spec(read_spec(text));
  return kExitOk;
}

int cmd_measure(const Options& o, std::ostream& out) {
  const ParsedSpec s = load(o.files[0]);
  json j = front_report(base_front(s.curve), oracle_samples(o));
  j["validation"] = s.validation;
  j["length"] = report_number(rosette_length(s.curve));
  j["oriented_area"] = report_number(rosette_area(s.curve));
  emit(out, j);
  return kExitOk;
}

int classification_command(std::ostream& out, const FourierSupport& p, double lambda, int samples) {
  const ClassificationSummary summary = classify_branches(p, lambda);
  json fronts = json::array();
  for (const auto& b : summary.branches) {
    json f = front_report(equidistant_branch(p, lambda, b.k), samples);
    f["k"] = b.k;
    fronts.push_back(std::move(f));
  }
  emit(out, {{"classification", summary}, {"fronts", fronts}});
  return summary.assertions_hold ? kExitOk : kExitDegenerate;
}

int cmd_branch(const Options& o, std::ostream& out) {
  const ParsedSpec s = load(o.files[0]);
  const double lambda = *o.lambda;
  if (!o.k) return classification_command(out, s.curve, lambda, oracle_samples(o));
  const FrontSupport h = equidistant_branch(s.curve, lambda, *o.k);
  json j = front_report(h, oracle_samples(o));
  j["length_theorem"] = branch_length_theorem(s.curve, lambda, *o.k, oracle_samples(o));
  emit(out, j);
  return tangential(find_cusps(h)) ? kExitDegenerate : kExitOk;
}

int cmd_wigner(const Options& o, std::ostream& out) {
  const ParsedSpec s = load(o.files[0]);
  if (!o.k) return classification_command(out, s.curve, 0.5, oracle_samples(o));
  return front_command(out, wigner_branch(s.curve, *o.k), oracle_samples(o));
}

int cmd_identities(const Options& o, std::ostream& out) {
  const ParsedSpec s = load(o.files[0]);
  const int n = oracle_samples(o);
  json j;
  j["length"] = report_number(rosette_length(s.curve));
  j["oriented_area"] = report_number(rosette_area(s.curve));
  j["identity_I"] = verify_identity_I(s.curve, n);
  j["identity_II"] = verify_identity_II(s.curve, n);
  j["constant_width"] = constant_width_test(s.curve, n);
  if (s.curve.m == 1) j["isoperimetric_defect"] = report_number(isoperimetric_defect(s.curve));
  emit(out, j);
  return kExitOk;
}

int cmd_antipodal(const Options& o, std::ostream& out) {
  const ParsedSpec s = load(o.files[0]);
  const AntipodalReport r = antipodal_pairs(s.curve);
  emit(out, r);
  const bool short_count = static_cast<int>(r.pairs.size()) < r.lower_bound;
  return r.degenerate || short_count ? kExitDegenerate : kExitOk;
}

int cmd_pair(const Options& o, std::ostream& out) {
  const ParsedSpec a = load(o.files[0]);
  const ParsedSpec b = load(o.files[1]);
  const PairInventory inv = pair_inventory(a.curve, b.curve, *o.lambda, oracle_samples(o));
  json j = inv;
  j["glueing_schemes"] = maximal_glueing_schemes(a.curve.m, b.curve.m, *o.lambda);
  emit(out, j);
  return inv.assertions_hold ? kExitOk : kExitDegenerate;
}

int cmd_render(const Options& o, std::ostream& out) {
  SceneSpec scene;
  if (!o.scene.empty()) {
    scene = load_scene_file(o.scene);
  } else {
    if (o.files.empty()) throw SpecParseError("render needs curve files or --scene");
    for (const auto& f : o.files) scene.curves.push_back(load(f).curve);
    scene.layers = parse_layers(o.layers);
  }
  if (o.samples >= 0) scene.samples = o.samples;
  if (o.stroke_width != 1.0) scene.stroke_width = o.stroke_width;
  if (o.mark_cusps) scene.mark_cusps = true;
  const std::string svg = render_svg(scene);
  if (o.out_path.empty()) {
    out << svg;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw SpecParseError("cannot write " + o.out_path);
    file << svg;
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rosettes given by Fourier support functions, and their derived fronts."};
  app.name("rosette");
  app.require_subcommand(1, 1);
  Options o;

  auto curve_arg = [&](CLI::App* sub, int count) {
    sub->add_option("files", o.files, count == 1 ? "curve file" : "curve files")
        ->required()
        ->expected(count);
  };
  auto samples_flag = [&](CLI::App* sub, const char* what) {
    sub->add_option("--samples", o.samples, what)->check(CLI::NonNegativeNumber);
  };

  auto* validate = app.add_subcommand("validate", "check that a curve file describes a rosette");
  curve_arg(validate, 1);
  auto* print = app.add_subcommand("print", "print a curve file in canonical form");
  curve_arg(print, 1);
  auto* measure = app.add_subcommand("measure", "length and oriented area, closed form and sampled");
  curve_arg(measure, 1);
  samples_flag(measure, "oracle samples (default 32768, 0 disables)");
  auto* branch = app.add_subcommand("branch", "affine lambda-equidistant branch, or all branches");
  curve_arg(branch, 1);
  branch->add_option("--lambda", o.lambda, "equidistant parameter")->required();
  branch->add_option("--k", o.k, "branch index (omit to classify every branch)");
  samples_flag(branch, "oracle samples (default 32768, 0 disables)");
  auto* wigner = app.add_subcommand("wigner", "Wigner caustic branch, or all branches");
  curve_arg(wigner, 1);
  wigner->add_option("--k", o.k, "branch index 1..m (omit to classify every branch)");
  samples_flag(wigner, "oracle samples (default 32768, 0 disables)");
  auto* cwms = app.add_subcommand("cwms", "constant width measure set");
  curve_arg(cwms, 1);
  samples_flag(cwms, "oracle samples (default 32768, 0 disables)");
  auto* sms = app.add_subcommand("sms", "spherical measure set");
  curve_arg(sms, 1);
  samples_flag(sms, "oracle samples (default 32768, 0 disables)");
  auto* offset = app.add_subcommand("offset", "offset at distance alpha");
  curve_arg(offset, 1);
  offset->add_option("--alpha", o.alpha, "offset distance")->required();
  samples_flag(offset, "oracle samples (default 32768, 0 disables)");
  auto* identities = app.add_subcommand("identities", "length/area identities");
  curve_arg(identities, 1);
  samples_flag(identities, "oracle samples (default 32768, 0 disables)");
  auto* antipodal = app.add_subcommand("antipodal", "pairs of points with parallel tangents and equal curvature");
  curve_arg(antipodal, 1);
  auto* pair = app.add_subcommand("pair", "affine lambda-equidistants of two rosettes");
  curve_arg(pair, 2);
  pair->add_option("--lambda", o.lambda, "equidistant parameter")->required();
  samples_flag(pair, "oracle samples (default 32768, 0 disables)");
  auto* render = app.add_subcommand("render", "SVG figure");
  render->add_option("files", o.files, "curve files");
  render->add_option("--layers", o.layers, "layer list, e.g. \"base;cwms;wigner:1\"");
  render->add_option("--scene", o.scene, "scene file (instead of curve files and --layers)");
  render->add_option("--out", o.out_path, "output path (default: stdout)");
  render->add_option("--stroke-width", o.stroke_width, "stroke width, 1/400 of the figure extent");
  render->add_flag("--mark-cusps", o.mark_cusps, "mark cusps with dots");
  samples_flag(render, "samples per curve (default 4096)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*print) return cmd_print(o, out);
    if (*measure) return cmd_measure(o, out);
    if (*branch) return cmd_branch(o, out);
    if (*wigner) return cmd_wigner(o, out);
    if (*cwms) return front_command(out, cwms_support(load(o.files[0]).curve), oracle_samples(o));
    if (*sms) return front_command(out, sms_support(load(o.files[0]).curve), oracle_samples(o));
    if (*offset) {
      return front_command(out, offset_support(load(o.files[0]).curve, *o.alpha), oracle_samples(o));
    }
    if (*identities) return cmd_identities(o, out);
    if (*antipodal) return cmd_antipodal(o, out);
    if (*pair) return cmd_pair(o, out);
    if (*render) return cmd_render(o, out);
  } catch (const NotARosetteError& e) {
    err << "rosette: " << e.what() << '\n';
    return kExitNotRosette;
  } catch (const SpecParseError& e) {
    err << "rosette: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "rosette: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "rosette: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rosette
