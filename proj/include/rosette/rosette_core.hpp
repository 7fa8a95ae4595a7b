#pragma once

// Rosettes given by the Fourier series of their support function
//
//   p(t) = a0 + sum_n (a_n cos(n t / m) + b_n sin(n t / m)),
//
// which is 2*pi*m periodic for rotation number m. The curve point at normal
// angle t is (p cos t - p' sin t, p sin t + p' cos t) and the radius of
// curvature is p + p''.

#include <string>
#include <vector>

#include "rosette/series.hpp"

namespace rosette {

struct FourierSupport {
  int m = 1;
  double a0 = 0.0;
  std::vector<HarmonicTerm> terms;  // sorted by n, unique n >= 1

  SeriesView view() const { return {m, a0, terms}; }

  friend bool operator==(const FourierSupport&, const FourierSupport&) = default;
};

/// Checks m >= 1, n >= 1 and unique n, then sorts the terms. Throws
/// std::invalid_argument on a structural violation.
FourierSupport make_support(int m, double a0, std::vector<HarmonicTerm> terms);

/// Constant support a0 with m = 1.
FourierSupport circle(double radius);

double eval_support(const FourierSupport& p, double theta, int order = 0);
double radius_of_curvature(const FourierSupport& p, double theta);
PlanePoint point_at(const FourierSupport& p, double theta);

/// max(|a0|, max_n sqrt(a_n^2 + b_n^2)); the reference for relative tolerances.
double coefficient_scale(const FourierSupport& p);

/// a0 - sum_n |n^2 - m^2| / m^2 * sqrt(a_n^2 + b_n^2). Positive values prove
/// that the radius of curvature is positive everywhere.
double positivity_bound(const FourierSupport& p);

struct ValidationReport {
  bool is_rosette = false;
  double min_rho = 0.0;
  double min_rho_theta = 0.0;
  bool proved_by_bound = false;
  std::vector<std::string> genericity_warnings;
};

ValidationReport validate_rosette(const FourierSupport& p);

}  // namespace rosette
