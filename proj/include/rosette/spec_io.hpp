#pragma once

// Curve files and structured reports.
//
// Curve file (UTF-8 JSON, one rosette per file):
//
//   {"m": 2, "a0": 10, "terms": [{"n": 1, "a": 4, "b": 0}, {"n": 4, "a": 0, "b": 1}]}
//
// m and a0 are required; "terms" defaults to [] and a/b default to 0.
// Unknown keys and repeated harmonic indices are rejected.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rosette/derived_curves.hpp"
#include "rosette/measures.hpp"
#include "rosette/pair_equidistants.hpp"
#include "rosette/rosette_core.hpp"
#include "rosette/singularities.hpp"

namespace rosette {

class SpecParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotARosetteError : public std::runtime_error {
 public:
  NotARosetteError(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Parses a curve file without checking the curvature sign.
FourierSupport read_spec(std::string_view text);

/// Canonical text of a curve file; read_spec(print_spec(p)) == p.
std::string print_spec(const FourierSupport& p);

struct ParsedSpec {
  FourierSupport curve;
  ValidationReport validation;
};

/// read_spec followed by validate_rosette. Throws NotARosetteError when the
/// radius of curvature is not positive everywhere.
ParsedSpec parse_spec(std::string_view text);

ParsedSpec load_spec_file(const std::filesystem::path& path);

/// Rounds to 15 significant digits; the precision of every reported number.
double report_number(double v);

using json = nlohmann::json;

void to_json(json& j, const HarmonicTerm& t);
void to_json(json& j, const PlanePoint& p);
void to_json(json& j, const FourierSupport& p);
void to_json(json& j, const BranchDescriptor& d);
void to_json(json& j, const FrontSupport& h);
void to_json(json& j, const ValidationReport& r);
void to_json(json& j, const Measure& m);
void to_json(json& j, const IdentityVariant& v);
void to_json(json& j, const IdentityReport& r);
void to_json(json& j, const CuspReport& r);
void to_json(json& j, const AntipodalReport& r);
void to_json(json& j, const RotationNumber& r);
void to_json(json& j, const ClassificationSummary& s);
void to_json(json& j, const GlueingScheme& s);
void to_json(json& j, const PairInventory& inv);

const char* to_string(FrontKind kind);
const char* to_string(PairFamily family);

}  // namespace rosette
