#pragma once

// Fronts derived from a rosette, built by exact coefficient arithmetic on the
// support function: affine lambda-equidistant branches (the Wigner caustic at
// lambda = 1/2), the constant width measure set, the spherical measure set
// and offsets. All of them use the coorienting normal -(cos t, sin t).

#include <vector>

#include "rosette/rosette_core.hpp"
#include "rosette/series.hpp"

namespace rosette {

enum class FrontKind { Base, Equidistant, Cwms, Sms, Offset, PairEquidistant };

enum class PairFamily { None, WignerPair, LambdaFirst, LambdaSecond };

struct BranchDescriptor {
  FrontKind kind = FrontKind::Base;
  double lambda = 0.0;  // Equidistant, PairEquidistant
  int k = 0;            // Equidistant, PairEquidistant
  double alpha = 0.0;   // Offset
  PairFamily family = PairFamily::None;
  int source_m = 1;     // rotation number of the (first) source rosette
  int source_m2 = 0;    // second source for pair branches, 0 otherwise
};

/// Generalized support function of a front, periodic with period 2*pi*M.
/// A multiplicity of 2 means one period traces the set twice.
struct FrontSupport {
  int M = 1;
  double c0 = 0.0;
  std::vector<HarmonicTerm> terms;
  int multiplicity = 1;
  BranchDescriptor descriptor;
  double scale = 0.0;  // coefficient scale of the source curve(s)

  SeriesView view() const { return {M, c0, terms}; }

  /// Only translation harmonics (n == M) survive and c0 vanishes, relative
  /// to `scale`: the front is a single point.
  bool is_point() const;
};

inline constexpr double kPointTolerance = 1e-12;

/// Coefficients of t -> p(t + phi).
FourierSupport shift_support(const FourierSupport& p, double phi);

/// The rosette itself as a front.
FrontSupport base_front(const FourierSupport& p);

/// Number of branch indices: m for lambda = 1/2, 2m - 1 otherwise.
int equidistant_branch_count(int m, double lambda);

/// h(t) = lambda p(t) + (-1)^k (1 - lambda) p(t + k pi). k runs over 1..m
/// when lambda = 1/2 and over 1..2m-1 otherwise; throws std::out_of_range
/// outside that range.
FrontSupport equidistant_branch(const FourierSupport& p, double lambda, int k);

/// Wigner caustic branch, lambda = 1/2.
FrontSupport wigner_branch(const FourierSupport& p, int k);

/// h(t) = p(t) - (-1)^m p(t + m pi) - L / (m pi), with L = 2 pi m a0.
FrontSupport cwms_support(const FourierSupport& p);

/// h(t) = p(t) - a0, the offset at level L / (2 pi m).
FrontSupport sms_support(const FourierSupport& p);

/// h(t) = p(t) - alpha.
FrontSupport offset_support(const FourierSupport& p, double alpha);

struct CurveSamples {
  std::vector<double> theta;
  std::vector<PlanePoint> points;  // points.back() == points.front()
  int multiplicity = 1;
  bool is_point = false;
};

inline constexpr int kMinFrontSamples = 16;

/// N + 1 points at uniform parameters over one full period 2*pi*M.
/// Throws std::invalid_argument for N < 16.
CurveSamples sample_front(const FrontSupport& h, int N);

}  // namespace rosette
