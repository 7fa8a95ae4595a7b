#pragma once

// Cusps, antipodal pairs, rotation numbers and branch classification.
//
// A front with support h is singular exactly where h + h'' vanishes;
// transverse zeros are cusps. For a multiplicity-2 front only the first
// covering [0, pi*M) is reported.

#include <string>
#include <utility>
#include <vector>

#include "rosette/derived_curves.hpp"
#include "rosette/rosette_core.hpp"

namespace rosette {

struct CuspReport {
  std::vector<double> locations;  // sorted, in [0, period / multiplicity)
  int count = 0;
  bool parity_even = true;
  bool is_point = false;
  std::vector<std::string> warnings;
};

CuspReport find_cusps(const FrontSupport& h);

struct AntipodalPair {
  double theta = 0.0;  // canonical (smaller) parameter of the pair
  int k = 1;           // odd offset, partner at theta + k*pi
  std::pair<PlanePoint, PlanePoint> pair;
};

/// One zero of rho(t) - rho(t + k pi) for an odd k in 1..2m-1.
struct AntipodalSolution {
  double theta = 0.0;
  int k = 1;
};

struct AntipodalReport {
  std::vector<AntipodalPair> pairs;          // deduplicated unordered pairs
  std::vector<AntipodalSolution> solutions;  // every (theta, k) solution
  int lower_bound = 0;                       // 2 * ceil(m / 2)
  bool degenerate = false;                   // some k gives a continuum of solutions
  std::vector<std::string> warnings;
};

AntipodalReport antipodal_pairs(const FourierSupport& p);

struct RotationNumber {
  bool defined = false;
  long numerator = 0;
  long denominator = 1;
  double sampled = 0.0;  // winding of the sampled tangent line, in turns per covering

  double value() const { return static_cast<double>(numerator) / denominator; }
};

/// Exact value M / multiplicity, cross-checked from samples.
RotationNumber rotation_number(const FrontSupport& h, int samples = 4096);

enum class BranchClass {
  Rosette,          // h + h'' > 0 everywhere
  ReversedRegular,  // h + h'' < 0 everywhere: regular, opposite coorientation
  Singular,         // has cusps
  Point,
};

const char* to_string(BranchClass c);

/// Rosette or ReversedRegular.
inline bool is_regular(BranchClass c) {
  return c == BranchClass::Rosette || c == BranchClass::ReversedRegular;
}

BranchClass classify_front(const FrontSupport& h, const CuspReport& cusps);

struct BranchSummary {
  int k = 0;
  BranchClass classification = BranchClass::Singular;
  CuspReport cusps;
  RotationNumber rotation;
};

struct ClassificationSummary {
  double lambda = 0.5;
  std::vector<BranchSummary> branches;
  int rosette_count = 0;  // BranchClass::Rosette
  int regular_count = 0;  // Rosette or ReversedRegular
  int total_cusps = 0;
  bool assertions_hold = true;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
};

/// Classifies every branch of E_lambda and checks the branch-count
/// statements: exactly floor(m/2) rosettes, at least 2 cusps in total and
/// the cusp-parity pattern at lambda = 1/2; at least m - 1 regular branches
/// for lambda in (0, 1) \ {1/2}; at least m for lambda outside [0, 1].
ClassificationSummary classify_branches(const FourierSupport& p, double lambda);

}  // namespace rosette
