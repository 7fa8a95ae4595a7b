#pragma once

// Affine lambda-equidistants of a pair of rosettes R_{m1}, R_{m2}.
//
// Parameter circles are cut at the parallel points s_j = j*pi; arcs of the
// second rosette carry primed indices j' = j + 2*m1. A branch is traced by a
// maximal glueing scheme pairing arcs of both rosettes column by column, and
// its support function lives on the common period 2*pi*lcm(m1, m2).

#include <utility>
#include <vector>

#include "rosette/derived_curves.hpp"
#include "rosette/measures.hpp"
#include "rosette/rosette_core.hpp"
#include "rosette/singularities.hpp"

namespace rosette {

struct ParallelArcSet {
  int m1 = 1;
  int m2 = 1;
  std::vector<std::pair<int, int>> entries;  // (i, i + 1) per arc, second rosette offset by 2*m1
};

ParallelArcSet parallel_arc_set(int m1, int m2);

struct GlueingScheme {
  std::vector<int> upper;  // column indices of the upper row
  std::vector<int> lower;
  PairFamily family = PairFamily::WignerPair;
  int k = 0;

  int arc_count() const { return static_cast<int>(upper.size()) - 1; }
};

/// 2*gcd schemes of the Wigner family at lambda = 1/2; otherwise 2*gcd of
/// each lambda family. Throws std::invalid_argument for lambda in {0, 1}.
std::vector<GlueingScheme> maximal_glueing_schemes(int m1, int m2, double lambda);

/// Number of pair branches: 2*gcd at lambda = 1/2, 4*gcd otherwise.
int pair_branch_count(int m1, int m2, double lambda);

struct PairBranch {
  FrontSupport support;
  PairFamily family = PairFamily::WignerPair;
  int k = 0;
  double lambda = 0.5;
};

/// Support function of branch k:
///   lambda = 1/2:         (p1(t) + (-1)^k p2(t + k pi)) / 2
///   k < 2 gcd:            lambda p1(t) + (-1)^k (1 - lambda) p2(t + k pi)
///   k >= 2 gcd:           (1 - lambda) p1(t) + (-1)^k lambda p2(t + (k - 2 gcd) pi)
/// Throws std::out_of_range for k outside the index range.
PairBranch pair_branch(const FourierSupport& p1, const FourierSupport& p2, double lambda, int k);

struct PairBranchReport {
  int k = 0;
  PairFamily family = PairFamily::WignerPair;
  FrontSupport support;
  double length = 0.0;
  IdentityReport length_case;
  RotationNumber rotation;
  CuspReport cusps;
  BranchClass classification = BranchClass::Singular;
  bool curved_same_side = false;  // every parallel pair of the branch curved in the same side
  bool predicted_regular = false;
};

struct PairInventory {
  int m1 = 1;
  int m2 = 1;
  int gcd = 1;
  int lcm = 1;
  double lambda = 0.5;
  std::vector<PairBranchReport> branches;
  int regular_count = 0;
  bool assertions_hold = true;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
};

/// Builds every branch and checks branch count, rotation number lcm, even
/// cusp counts, the length cases and the lower bound on regular branches.
PairInventory pair_inventory(const FourierSupport& p1, const FourierSupport& p2, double lambda,
                             int oracle_samples = 0);

}  // namespace rosette
