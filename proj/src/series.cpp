#include "rosette/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rosette {

double evaluate(SeriesView s, double theta, int order) {
  if (order < 0 || order > 2) {
    throw std::invalid_argument("evaluate: order must be 0, 1 or 2");
  }
  double value = order == 0 ? s.constant : 0.0;
  const double inv_p = 1.0 / s.period;
  for (const auto& t : s.terms) {
    const double w = t.n * inv_p;
    const double c = std::cos(w * theta);
    const double sn = std::sin(w * theta);
    switch (order) {
      case 0:
        value += t.a * c + t.b * sn;
        break;
      case 1:
        value += w * (-t.a * sn + t.b * c);
        break;
      default:
        value -= w * w * (t.a * c + t.b * sn);
        break;
    }
  }
  return value;
}

double radius_of_curvature(SeriesView s, double theta) {
  double value = s.constant;
  const double inv_p = 1.0 / s.period;
  for (const auto& t : s.terms) {
    const double w = t.n * inv_p;
    value += (1.0 - w * w) * (t.a * std::cos(w * theta) + t.b * std::sin(w * theta));
  }
  return value;
}

PlanePoint point_at(SeriesView s, double theta) {
  const double h = evaluate(s, theta, 0);
  const double dh = evaluate(s, theta, 1);
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  return {h * c - dh * sn, h * sn + dh * c};
}

double coefficient_scale(SeriesView s) {
  double scale = std::abs(s.constant);
  for (const auto& t : s.terms) {
    scale = std::max(scale, std::hypot(t.a, t.b));
  }
  return scale;
}

int max_harmonic(SeriesView s) {
  int n = 0;
  for (const auto& t : s.terms) n = std::max(n, t.n);
  return n;
}

Series derivative_series(SeriesView s) {
  Series out{s.period, 0.0, {}};
  out.terms.reserve(s.terms.size());
  for (const auto& t : s.terms) {
    const double w = static_cast<double>(t.n) / s.period;
    out.terms.push_back({t.n, w * t.b, -w * t.a});
  }
  return out;
}

Series radius_series(SeriesView s) {
  Series out{s.period, s.constant, {}};
  out.terms.reserve(s.terms.size());
  const double p2 = static_cast<double>(s.period) * s.period;
  for (const auto& t : s.terms) {
    // (P^2 - n^2) / P^2 is exact for the integer part, n == P gives exact zero.
    const double f = (p2 - static_cast<double>(t.n) * t.n) / p2;
    out.terms.push_back({t.n, f * t.a, f * t.b});
  }
  return out;
}

double primitive(SeriesView s, double theta) {
  double value = s.constant * theta;
  for (const auto& t : s.terms) {
    const double w = static_cast<double>(t.n) / s.period;
    value += (t.a * std::sin(w * theta) - t.b * (std::cos(w * theta) - 1.0)) / w;
  }
  return value;
}

namespace {

HarmonicTerm rotate(const HarmonicTerm& t, CosSin cs) {
  // a cos(x + u) + b sin(x + u) = (a c + b s) cos x + (b c - a s) sin x
  return {t.n, t.a * cs.c + t.b * cs.s, t.b * cs.c - t.a * cs.s};
}

long positive_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CosSin cos_sin_pi_fraction(long num, long den) {
  if (den <= 0) throw std::invalid_argument("cos_sin_pi_fraction: den must be positive");
  const long r = positive_mod(num, 2 * den);  // angle pi*r/den in [0, 2pi)
  if ((2 * r) % den == 0) {
    switch ((2 * r) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = kPi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

Series shifted(SeriesView s, double phi) {
  Series out{s.period, s.constant, {}};
  out.terms.reserve(s.terms.size());
  for (const auto& t : s.terms) {
    const double u = t.n * phi / s.period;
    out.terms.push_back(rotate(t, {std::cos(u), std::sin(u)}));
  }
  return out;
}

Series shifted_half_turns(SeriesView s, long k) {
  Series out{s.period, s.constant, {}};
  out.terms.reserve(s.terms.size());
  for (const auto& t : s.terms) {
    out.terms.push_back(rotate(t, cos_sin_pi_fraction(static_cast<long>(t.n) * k, s.period)));
  }
  return out;
}

Series lifted(SeriesView s, int new_period) {
  if (new_period <= 0 || new_period % s.period != 0) {
    throw std::invalid_argument("lifted: new period must be a positive multiple of the old one");
  }
  const int factor = new_period / s.period;
  Series out{new_period, s.constant, {}};
  out.terms.reserve(s.terms.size());
  for (const auto& t : s.terms) out.terms.push_back({t.n * factor, t.a, t.b});
  return out;
}

Series linear_combination(double alpha, SeriesView f, double beta, SeriesView g) {
  if (f.period != g.period) {
    throw std::invalid_argument("linear_combination: periods differ");
  }
  Series out{f.period, alpha * f.constant + beta * g.constant, {}};
  out.terms.reserve(f.terms.size() + g.terms.size());
  for (const auto& t : f.terms) out.terms.push_back({t.n, alpha * t.a, alpha * t.b});
  for (const auto& t : g.terms) out.terms.push_back({t.n, beta * t.a, beta * t.b});
  return normalized(std::move(out));
}

Series normalized(Series s) {
  std::stable_sort(s.terms.begin(), s.terms.end(),
                   [](const HarmonicTerm& l, const HarmonicTerm& r) { return l.n < r.n; });
  std::vector<HarmonicTerm> merged;
  merged.reserve(s.terms.size());
  for (const auto& t : s.terms) {
    if (!merged.empty() && merged.back().n == t.n) {
      merged.back().a += t.a;
      merged.back().b += t.b;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const HarmonicTerm& t) { return t.a == 0.0 && t.b == 0.0; });
  s.terms = std::move(merged);
  return s;
}

}  // namespace rosette
