#include "rosette/spec_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace rosette {

namespace {

void reject_unknown(const json& object, std::initializer_list<std::string_view> allowed,
                    std::string_view where) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw SpecParseError(fmt::format("unknown field '{}' in {}", key, where));
  }
}

double number_field(const json& object, const char* key, bool required, std::string_view where) {
  if (!object.contains(key)) {
    if (required) throw SpecParseError(fmt::format("missing field '{}' in {}", key, where));
    return 0.0;
  }
  const json& v = object.at(key);
  if (!v.is_number()) throw SpecParseError(fmt::format("field '{}' in {} must be a number", key, where));
  return v.get<double>();
}

int integer_field(const json& object, const char* key, std::string_view where) {
  if (!object.contains(key)) throw SpecParseError(fmt::format("missing field '{}' in {}", key, where));
  const json& v = object.at(key);
  if (!v.is_number_integer()) {
    throw SpecParseError(fmt::format("field '{}' in {} must be an integer", key, where));
  }
  return v.get<int>();
}

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return report_number(v);
}

}  // namespace

FourierSupport read_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SpecParseError(std::string("malformed curve file: ") + e.what());
  }
  if (!doc.is_object()) throw SpecParseError("curve file must be a JSON object");
  reject_unknown(doc, {"m", "a0", "terms"}, "curve");
  const int m = integer_field(doc, "m", "curve");
  const double a0 = number_field(doc, "a0", true, "curve");
  std::vector<HarmonicTerm> terms;
  if (doc.contains("terms")) {
    const json& list = doc.at("terms");
    if (!list.is_array()) throw SpecParseError("field 'terms' must be an array");
    for (const auto& item : list) {
      if (!item.is_object()) throw SpecParseError("each term must be an object");
      reject_unknown(item, {"n", "a", "b"}, "term");
      terms.push_back({integer_field(item, "n", "term"), number_field(item, "a", false, "term"),
                       number_field(item, "b", false, "term")});
    }
  }
  try {
    return make_support(m, a0, std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw SpecParseError(e.what());
  }
}

std::string print_spec(const FourierSupport& p) {
  json doc;
  doc["m"] = p.m;
  doc["a0"] = p.a0;
  doc["terms"] = json::array();
  for (const auto& t : p.terms) doc["terms"].push_back({{"n", t.n}, {"a", t.a}, {"b", t.b}});
  return doc.dump() + "\n";
}

ParsedSpec parse_spec(std::string_view text) {
  FourierSupport curve = read_spec(text);
  ValidationReport validation = validate_rosette(curve);
  if (!validation.is_rosette) {
    throw NotARosetteError(
        fmt::format("not a rosette: minimum radius of curvature {:.15g} at theta = {:.15g}",
                    validation.min_rho, validation.min_rho_theta),
        validation);
  }
  return {std::move(curve), std::move(validation)};
}

ParsedSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecParseError("cannot open curve file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

double report_number(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  return std::stod(fmt::format("{:.15g}", v));
}

const char* to_string(FrontKind kind) {
  switch (kind) {
    case FrontKind::Base: return "base";
    case FrontKind::Equidistant: return "equidistant";
    case FrontKind::Cwms: return "cwms";
    case FrontKind::Sms: return "sms";
    case FrontKind::Offset: return "offset";
    case FrontKind::PairEquidistant: return "pair_equidistant";
  }
  return "unknown";
}

const char* to_string(PairFamily family) {
  switch (family) {
    case PairFamily::None: return "none";
    case PairFamily::WignerPair: return "wigner_pair";
    case PairFamily::LambdaFirst: return "lambda_first";
    case PairFamily::LambdaSecond: return "lambda_second";
  }
  return "unknown";
}

void to_json(json& j, const HarmonicTerm& t) { j = {{"n", t.n}, {"a", num(t.a)}, {"b", num(t.b)}}; }

void to_json(json& j, const PlanePoint& p) { j = {num(p.x), num(p.y)}; }

void to_json(json& j, const FourierSupport& p) {
  j = {{"m", p.m}, {"a0", num(p.a0)}, {"terms", p.terms}};
}

void to_json(json& j, const BranchDescriptor& d) {
  j = {{"kind", to_string(d.kind)}, {"source_m", d.source_m}};
  switch (d.kind) {
    case FrontKind::Equidistant:
      j["lambda"] = num(d.lambda);
      j["k"] = d.k;
      break;
    case FrontKind::PairEquidistant:
      j["lambda"] = num(d.lambda);
      j["k"] = d.k;
      j["family"] = to_string(d.family);
      j["source_m2"] = d.source_m2;
      break;
    case FrontKind::Sms:
    case FrontKind::Offset:
      j["alpha"] = num(d.alpha);
      break;
    default:
      break;
  }
}

void to_json(json& j, const FrontSupport& h) {
  j = {{"M", h.M},
       {"c0", num(h.c0)},
       {"terms", h.terms},
       {"multiplicity", h.multiplicity},
       {"descriptor", h.descriptor},
       {"is_point", h.is_point()}};
}

void to_json(json& j, const ValidationReport& r) {
  j = {{"is_rosette", r.is_rosette},
       {"min_rho", num(r.min_rho)},
       {"min_rho_theta", num(r.min_rho_theta)},
       {"proved_by_bound", r.proved_by_bound},
       {"genericity_warnings", r.genericity_warnings}};
}

void to_json(json& j, const Measure& m) {
  j = {{"length", num(m.length)},
       {"oriented_area", num(m.oriented_area)},
       {"method", m.method == MeasureMethod::ClosedForm ? "closed_form" : "oracle"}};
}

void to_json(json& j, const IdentityVariant& v) {
  j = {{"name", v.name},       {"formula", v.formula},   {"inequality", v.inequality},
       {"rhs", num(v.rhs)},    {"residual", num(v.residual)}, {"holds", v.holds}};
  if (v.inequality) j["slack"] = num(v.slack);
  if (v.oracle_rhs) {
    j["oracle_rhs"] = num(*v.oracle_rhs);
    j["oracle_residual"] = num(*v.oracle_residual);
    j["oracle_holds"] = *v.oracle_holds;
  }
}

void to_json(json& j, const IdentityReport& r) {
  j = {{"identity_id", r.identity_id},
       {"hypothesis_violated", r.hypothesis_violated},
       {"notes", r.notes}};
  if (r.hypothesis_violated) return;
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["residual"] = num(r.residual);
  j["verdict"] = r.verdict;
  j["adopted"] = r.adopted;
  if (r.oracle_lhs) j["oracle_lhs"] = num(*r.oracle_lhs);
  json terms = json::object();
  for (const auto& [k, v] : r.terms) terms[k] = num(v);
  j["terms"] = terms;
  j["variants"] = r.variants;
  if (!r.supplementary.empty()) j["supplementary"] = r.supplementary;
}

void to_json(json& j, const CuspReport& r) {
  json locations = json::array();
  for (double t : r.locations) locations.push_back(num(t));
  j = {{"locations", locations},
       {"count", r.count},
       {"parity_even", r.parity_even},
       {"is_point", r.is_point},
       {"warnings", r.warnings}};
}

void to_json(json& j, const AntipodalReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"theta", num(p.theta)}, {"k", p.k}, {"points", {p.pair.first, p.pair.second}}});
  }
  json solutions = json::array();
  for (const auto& s : r.solutions) solutions.push_back({{"theta", num(s.theta)}, {"k", s.k}});
  j = {{"pairs", pairs},
       {"count", r.pairs.size()},
       {"solutions", solutions},
       {"solution_count", r.solutions.size()},
       {"lower_bound", r.lower_bound},
       {"degenerate", r.degenerate},
       {"warnings", r.warnings}};
}

void to_json(json& j, const RotationNumber& r) {
  j = {{"defined", r.defined}};
  if (!r.defined) return;
  j["numerator"] = r.numerator;
  j["denominator"] = r.denominator;
  j["value"] = num(r.value());
  j["sampled"] = num(r.sampled);
}

void to_json(json& j, const ClassificationSummary& s) {
  json branches = json::array();
  for (const auto& b : s.branches) {
    branches.push_back({{"k", b.k},
                        {"classification", to_string(b.classification)},
                        {"cusps", b.cusps},
                        {"rotation_number", b.rotation}});
  }
  j = {{"lambda", num(s.lambda)},
       {"branches", branches},
       {"rosette_count", s.rosette_count},
       {"regular_count", s.regular_count},
       {"total_cusps", s.total_cusps},
       {"assertions_hold", s.assertions_hold},
       {"failures", s.failures},
       {"warnings", s.warnings}};
}

void to_json(json& j, const GlueingScheme& s) {
  j = {{"k", s.k},
       {"family", to_string(s.family)},
       {"arc_count", s.arc_count()},
       {"upper", s.upper},
       {"lower", s.lower}};
}

void to_json(json& j, const PairInventory& inv) {
  json branches = json::array();
  for (const auto& b : inv.branches) {
    branches.push_back({{"k", b.k},
                        {"family", to_string(b.family)},
                        {"support", b.support},
                        {"length", num(b.length)},
                        {"length_case", b.length_case},
                        {"rotation_number", b.rotation},
                        {"cusps", b.cusps},
                        {"classification", to_string(b.classification)},
                        {"curved_same_side", b.curved_same_side},
                        {"predicted_regular", b.predicted_regular}});
  }
  j = {{"m1", inv.m1},
       {"m2", inv.m2},
       {"gcd", inv.gcd},
       {"lcm", inv.lcm},
       {"lambda", num(inv.lambda)},
       {"branch_count", inv.branches.size()},
       {"branches", branches},
       {"regular_count", inv.regular_count},
       {"assertions_hold", inv.assertions_hold},
       {"failures", inv.failures},
       {"warnings", inv.warnings}};
}

}  // namespace rosette
