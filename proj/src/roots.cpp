#include "rosette/roots.hpp"

#include <algorithm>
#include <cmath>

namespace rosette {

namespace {

template <class F>
double bisect(F&& f, double lo, double hi, double f_lo) {
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int isolation_sample_count(SeriesView f) {
  return std::max(4096, 64 * max_harmonic(f) * f.period);
}

ZeroSet isolate_zeros(SeriesView f, double scale) {
  ZeroSet out;
  if (coefficient_scale(f) <= kZeroCoefficient * scale) {
    out.identically_zero = true;
    return out;
  }

  const int n = isolation_sample_count(f);
  const double length = period_length(f);
  const double step = length / n;
  std::vector<double> value(n + 1);
  std::vector<double> slope(n + 1);
  for (int i = 0; i < n; ++i) {
    value[i] = evaluate(f, i * step, 0);
    slope[i] = evaluate(f, i * step, 1);
  }
  value[n] = value[0];
  slope[n] = slope[0];

  auto fn = [&](double t) { return evaluate(f, t, 0); };
  auto dfn = [&](double t) { return evaluate(f, t, 1); };
  const double slope_tol = kTangentialSlope * scale;

  auto record = [&](double t) {
    out.zeros.push_back(t);
    if (std::abs(dfn(t)) < slope_tol) out.tangential.push_back(t);
  };

  for (int i = 0; i < n; ++i) {
    const double lo = i * step;
    const double hi = (i + 1 == n) ? length : (i + 1) * step;
    if (value[i] == 0.0) {
      // a sample hits the zero: the neighbours tell crossing from touching
      const double before = value[i == 0 ? n - 1 : i - 1];
      if ((before < 0.0) != (value[i + 1] < 0.0) || before == 0.0 || value[i + 1] == 0.0) {
        record(lo);
      } else {
        out.touching.push_back(lo);
      }
      continue;
    }
    if (value[i + 1] != 0.0 && (value[i] < 0.0) != (value[i + 1] < 0.0)) {
      record(bisect(fn, lo, hi, value[i]));
      continue;
    }
    if (value[i + 1] == 0.0) continue;  // picked up as the next interval's left end

    // No sign change: look for an interior extremum that dips through zero.
    if ((slope[i] < 0.0) == (slope[i + 1] < 0.0) || slope[i] == 0.0 || slope[i + 1] == 0.0) {
      continue;
    }
    const double t_ext = bisect(dfn, lo, hi, slope[i]);
    const double f_ext = fn(t_ext);
    if (f_ext != 0.0 && (f_ext < 0.0) != (value[i] < 0.0)) {
      record(bisect(fn, lo, t_ext, value[i]));
      record(bisect(fn, t_ext, hi, f_ext));
    } else if (std::abs(f_ext) <= kZeroCoefficient * scale) {
      out.touching.push_back(t_ext);
    }
  }

  for (auto* list : {&out.zeros, &out.tangential, &out.touching}) {
    for (auto& t : *list) {
      if (t >= length) t -= length;
    }
    std::sort(list->begin(), list->end());
  }
  return out;
}

Extremum locate_minimum(SeriesView f) {
  const int n = isolation_sample_count(f);
  const double length = period_length(f);
  const double step = length / n;
  int best = 0;
  double best_value = evaluate(f, 0.0, 0);
  for (int i = 1; i < n; ++i) {
    const double v = evaluate(f, i * step, 0);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  // Refine with bisection on f' across the neighbouring cells.
  auto dfn = [&](double t) { return evaluate(f, t, 1); };
  const double lo = (best - 1) * step;
  const double hi = (best + 1) * step;
  const double d_lo = dfn(lo);
  const double d_hi = dfn(hi);
  Extremum ext{best * step, best_value};
  if (d_lo < 0.0 && d_hi > 0.0) {
    const double t = bisect(dfn, lo, hi, d_lo);
    const double v = evaluate(f, t, 0);
    if (v <= ext.value) ext = {t, v};
  }
  ext.theta = std::fmod(ext.theta + length, length);
  return ext;
}

}  // namespace rosette
