#pragma once

// Zero and extremum isolation for periodic trigonometric polynomials.
//
// The series is sampled at N = max(4096, 64 * n_max * P) uniform points over
// one period. Sign changes are refined by bisection to a bracket of 1e-12.
// Intervals without a sign change but with an interior extremum are probed
// for a hidden pair of zeros or a touching (tangential) zero.

#include <vector>

#include "rosette/series.hpp"

namespace rosette {

struct ZeroSet {
  std::vector<double> zeros;       // sign changes, sorted, in [0, 2*pi*P)
  std::vector<double> tangential;  // sign changes with |f'| < 1e-8 * scale (subset of zeros)
  std::vector<double> touching;    // zeros where f touches 0 without changing sign
  bool identically_zero = false;   // every coefficient below 1e-12 * scale
};

inline constexpr double kBisectionWidth = 1e-12;
inline constexpr double kTangentialSlope = 1e-8;
inline constexpr double kZeroCoefficient = 1e-12;

int isolation_sample_count(SeriesView f);

/// Zeros of f over one period. `scale` is the reference coefficient scale
/// used by the tolerance policy.
ZeroSet isolate_zeros(SeriesView f, double scale);

struct Extremum {
  double theta = 0.0;
  double value = 0.0;
};

/// Global minimum of f over one period.
Extremum locate_minimum(SeriesView f);

}  // namespace rosette
