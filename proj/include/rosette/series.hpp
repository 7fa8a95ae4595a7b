#pragma once

// Finite trigonometric series c0 + sum_n (a_n cos(n t / P) + b_n sin(n t / P)),
// periodic with period 2*pi*P. Support functions of rosettes and of every
// front derived from them are stored in this form.

#include <numbers>
#include <span>
#include <vector>

namespace rosette {

inline constexpr double kPi = std::numbers::pi;

struct HarmonicTerm {
  int n = 1;
  double a = 0.0;  // cosine coefficient
  double b = 0.0;  // sine coefficient

  friend bool operator==(const HarmonicTerm&, const HarmonicTerm&) = default;
};

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Non-owning view of a series. `terms` must be sorted by n with unique n.
struct SeriesView {
  int period = 1;
  double constant = 0.0;
  std::span<const HarmonicTerm> terms;
};

/// Owning series, used for intermediate results.
struct Series {
  int period = 1;
  double constant = 0.0;
  std::vector<HarmonicTerm> terms;

  SeriesView view() const { return {period, constant, terms}; }
};

/// Length of one period, 2*pi*P.
inline double period_length(SeriesView s) { return 2.0 * kPi * s.period; }

/// Value (order 0), first (1) or second (2) derivative at theta.
double evaluate(SeriesView s, double theta, int order = 0);

/// s + s'' at theta.
double radius_of_curvature(SeriesView s, double theta);

/// Envelope point (s cos t - s' sin t, s sin t + s' cos t).
PlanePoint point_at(SeriesView s, double theta);

/// max(|c0|, max_n sqrt(a_n^2 + b_n^2)).
double coefficient_scale(SeriesView s);

int max_harmonic(SeriesView s);

/// Coefficients of s'.
Series derivative_series(SeriesView s);

/// Coefficients of s + s''. Harmonic n is scaled by 1 - n^2/P^2.
Series radius_series(SeriesView s);

/// Integral of s from 0 to theta, secular term included.
double primitive(SeriesView s, double theta);

/// Coefficients of t -> s(t + phi).
Series shifted(SeriesView s, double phi);

/// Coefficients of t -> s(t + k*pi). Rotations by multiples of pi/2 are exact.
Series shifted_half_turns(SeriesView s, long k);

/// The same function written over a period 2*pi*new_period (new_period must
/// be a multiple of s.period); harmonic n becomes n * new_period / period.
Series lifted(SeriesView s, int new_period);

/// alpha*f + beta*g. Both series must share the same period.
Series linear_combination(double alpha, SeriesView f, double beta, SeriesView g);

/// Sort by n, merge repeated n, drop terms whose coefficients are exactly zero.
Series normalized(Series s);

/// cos and sin of pi*num/den, exact when the angle is a multiple of pi/2.
struct CosSin {
  double c;
  double s;
};
CosSin cos_sin_pi_fraction(long num, long den);

}  // namespace rosette
