#include "rosette/rosette_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rosette/roots.hpp"

namespace rosette {

FourierSupport make_support(int m, double a0, std::vector<HarmonicTerm> terms) {
  if (m < 1) throw std::invalid_argument("rotation number m must be >= 1");
  if (!std::isfinite(a0)) throw std::invalid_argument("a0 must be finite");
  std::sort(terms.begin(), terms.end(),
            [](const HarmonicTerm& l, const HarmonicTerm& r) { return l.n < r.n; });
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].n < 1) throw std::invalid_argument("harmonic index n must be >= 1");
    if (!std::isfinite(terms[i].a) || !std::isfinite(terms[i].b)) {
      throw std::invalid_argument("harmonic coefficients must be finite");
    }
    if (i > 0 && terms[i].n == terms[i - 1].n) {
      throw std::invalid_argument("duplicate harmonic index n = " + std::to_string(terms[i].n));
    }
  }
  return {m, a0, std::move(terms)};
}

FourierSupport circle(double radius) { return {1, radius, {}}; }

double eval_support(const FourierSupport& p, double theta, int order) {
  return evaluate(p.view(), theta, order);
}

double radius_of_curvature(const FourierSupport& p, double theta) {
  return radius_of_curvature(p.view(), theta);
}

PlanePoint point_at(const FourierSupport& p, double theta) { return point_at(p.view(), theta); }

double coefficient_scale(const FourierSupport& p) { return coefficient_scale(p.view()); }

double positivity_bound(const FourierSupport& p) {
  const double m2 = static_cast<double>(p.m) * p.m;
  double bound = p.a0;
  for (const auto& t : p.terms) {
    bound -= std::abs(static_cast<double>(t.n) * t.n - m2) / m2 * std::hypot(t.a, t.b);
  }
  return bound;
}

namespace {

void flag_zeros(SeriesView f, double scale, const std::string& name,
                std::vector<std::string>& warnings) {
  const ZeroSet z = isolate_zeros(f, scale);
  if (z.identically_zero) {
    warnings.push_back(name + "_continuum");
  } else if (!z.tangential.empty() || !z.touching.empty()) {
    warnings.push_back(name + "_tangential");
  }
}

}  // namespace

ValidationReport validate_rosette(const FourierSupport& p) {
  ValidationReport report;
  const Series rho = radius_series(p.view());
  const Extremum low = locate_minimum(rho.view());
  report.min_rho = low.value;
  report.min_rho_theta = low.theta;
  report.proved_by_bound = positivity_bound(p) > 0.0;
  report.is_rosette = report.proved_by_bound || report.min_rho > 0.0;

  const double scale = coefficient_scale(p);
  if (std::abs(report.min_rho) <= kTangentialSlope * scale) {
    report.genericity_warnings.push_back("rho_tangential");
  }
  if (!report.is_rosette) return report;

  // Auxiliary functions whose zeros are counted elsewhere: antipodal
  // differences rho(t) - rho(t + k pi) for odd k, and rho - a0 for the
  // spherical measure set.
  for (int k = 1; k <= p.m; k += 2) {
    const Series shifted_rho = shifted_half_turns(rho.view(), k);
    const Series diff = linear_combination(1.0, rho.view(), -1.0, shifted_rho.view());
    flag_zeros(diff.view(), scale, "antipodal_k" + std::to_string(k), report.genericity_warnings);
  }
  Series sms_rho = rho;
  sms_rho.constant = 0.0;
  flag_zeros(sms_rho.view(), scale, "sms", report.genericity_warnings);
  return report;
}

}  // namespace rosette
