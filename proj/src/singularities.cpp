#include "rosette/singularities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rosette/kernels.hpp"
#include "rosette/roots.hpp"

namespace rosette {

namespace {

double scale_of(const FrontSupport& h) {
  return h.scale > 0.0 ? h.scale : coefficient_scale(h.view());
}

// Wraps t into [0, period), folding values within `tol` of period onto 0.
double wrap(double t, double period, double tol) {
  t = std::fmod(t, period);
  if (t < 0.0) t += period;
  if (period - t <= tol) t = 0.0;
  return t;
}

}  // namespace

CuspReport find_cusps(const FrontSupport& h) {
  CuspReport report;
  if (h.is_point()) {
    report.is_point = true;
    report.warnings.push_back("point_front");
    return report;
  }
  const Series rho = radius_series(h.view());
  const ZeroSet zs = isolate_zeros(rho.view(), scale_of(h));
  const double covering = period_length(h.view()) / h.multiplicity;
  const double cut = covering - 1e-9;
  for (double t : zs.zeros) {
    if (t < cut) report.locations.push_back(t);
  }
  if (!zs.tangential.empty()) report.warnings.push_back("tangential_zero");
  if (!zs.touching.empty()) report.warnings.push_back("touching_zero");
  report.count = static_cast<int>(report.locations.size());
  report.parity_even = report.count % 2 == 0;
  return report;
}

AntipodalReport antipodal_pairs(const FourierSupport& p) {
  AntipodalReport report;
  report.lower_bound = 2 * ((p.m + 1) / 2);
  const Series rho = radius_series(p.view());
  const double scale = coefficient_scale(p);
  const double period = 2.0 * kPi * p.m;
  const double tol = 1e-9;

  for (int k = 1; k < 2 * p.m; k += 2) {
    const Series moved = shifted_half_turns(rho.view(), k);
    const Series diff = linear_combination(1.0, rho.view(), -1.0, moved.view());
    const ZeroSet zs = isolate_zeros(diff.view(), scale);
    if (zs.identically_zero) {
      report.degenerate = true;
      report.warnings.push_back("continuum_k" + std::to_string(k));
      continue;
    }
    if (!zs.tangential.empty() || !zs.touching.empty()) {
      report.warnings.push_back("tangential_k" + std::to_string(k));
    }
    std::vector<double> all = zs.zeros;
    all.insert(all.end(), zs.touching.begin(), zs.touching.end());
    for (double t : all) {
      report.solutions.push_back({t, k});
      const double u = wrap(t, period, tol);
      const double v = wrap(t + k * kPi, period, tol);
      const double lo = std::min(u, v);
      const double hi = std::max(u, v);
      const bool seen = std::any_of(report.pairs.begin(), report.pairs.end(), [&](const auto& q) {
        const double q_hi = wrap(q.theta + q.k * kPi, period, tol);
        return std::abs(q.theta - lo) <= tol && std::abs(q_hi - hi) <= tol;
      });
      if (seen) continue;
      const int offset = static_cast<int>(std::lround((hi - lo) / kPi));
      report.pairs.push_back({lo, offset, {point_at(p, lo), point_at(p, hi)}});
    }
  }
  std::sort(report.solutions.begin(), report.solutions.end(), [](const auto& l, const auto& r) {
    return l.k != r.k ? l.k < r.k : l.theta < r.theta;
  });
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const auto& l, const auto& r) { return l.theta < r.theta; });
  return report;
}

RotationNumber rotation_number(const FrontSupport& h, int samples) {
  RotationNumber r;
  if (h.is_point()) return r;
  r.defined = true;
  const long g = std::gcd(static_cast<long>(h.M), static_cast<long>(h.multiplicity));
  r.numerator = h.M / g;
  r.denominator = h.multiplicity / g;

  // Winding of the sampled tangent line (directions taken modulo pi, so the
  // reversal at a cusp does not contribute).
  const CurveSamples s = sample_front(h, std::max(samples, kMinFrontSamples));
  double total = 0.0;
  double previous = 0.0;
  bool have_previous = false;
  double first = 0.0;
  for (std::size_t i = 0; i + 1 < s.points.size(); ++i) {
    const double dx = s.points[i + 1].x - s.points[i].x;
    const double dy = s.points[i + 1].y - s.points[i].y;
    if (dx == 0.0 && dy == 0.0) continue;
    const double angle = std::atan2(dy, dx);
    if (have_previous) {
      double step = std::remainder(angle - previous, kPi);
      total += step;
    } else {
      first = angle;
      have_previous = true;
    }
    previous = angle;
  }
  if (have_previous) total += std::remainder(first - previous, kPi);
  r.sampled = total / (2.0 * kPi) / h.multiplicity;
  return r;
}

const char* to_string(BranchClass c) {
  switch (c) {
    case BranchClass::Rosette: return "rosette";
    case BranchClass::ReversedRegular: return "regular_reversed";
    case BranchClass::Singular: return "singular";
    case BranchClass::Point: return "point";
  }
  return "unknown";
}

BranchClass classify_front(const FrontSupport& h, const CuspReport& cusps) {
  if (cusps.is_point) return BranchClass::Point;
  if (cusps.count > 0) return BranchClass::Singular;
  if (std::find(cusps.warnings.begin(), cusps.warnings.end(), "touching_zero") !=
      cusps.warnings.end()) {
    return BranchClass::Singular;
  }
  return radius_of_curvature(h.view(), 0.0) > 0.0 ? BranchClass::Rosette
                                                  : BranchClass::ReversedRegular;
}

ClassificationSummary classify_branches(const FourierSupport& p, double lambda) {
  ClassificationSummary summary;
  summary.lambda = lambda;
  const int count = equidistant_branch_count(p.m, lambda);
  summary.branches.resize(count);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    const int k = i + 1;
    const FrontSupport h = equidistant_branch(p, lambda, k);
    BranchSummary& b = summary.branches[i];
    b.k = k;
    b.cusps = find_cusps(h);
    b.classification = classify_front(h, b.cusps);
    b.rotation = rotation_number(h, 1024);
  }

  int odd_branches = 0;
  for (const auto& b : summary.branches) {
    summary.total_cusps += b.cusps.count;
    if (b.classification == BranchClass::Rosette) ++summary.rosette_count;
    if (is_regular(b.classification)) ++summary.regular_count;
    if (!b.cusps.parity_even) ++odd_branches;
    for (const auto& w : b.cusps.warnings) {
      summary.warnings.push_back("k" + std::to_string(b.k) + ":" + w);
    }
  }

  auto require = [&](bool ok, std::string what) {
    if (!ok) {
      summary.assertions_hold = false;
      summary.failures.push_back(std::move(what));
    }
  };
  const int m = p.m;
  if (lambda == 0.5) {
    require(summary.rosette_count == m / 2,
            "expected exactly " + std::to_string(m / 2) + " rosette branches, found " +
                std::to_string(summary.rosette_count));
    require(summary.total_cusps >= 2, "expected at least 2 cusps in total");
    if (m % 2 == 0) {
      require(odd_branches == 0, "expected an even cusp count on every branch (m even)");
    } else {
      require(odd_branches == 1 && !summary.branches.back().cusps.parity_even,
              "expected exactly one branch (k = m) with an odd cusp count (m odd)");
    }
  } else if (lambda > 0.0 && lambda < 1.0) {
    require(summary.regular_count >= m - 1,
            "expected at least " + std::to_string(m - 1) + " regular branches");
    require(odd_branches == 0, "expected an even cusp count on every branch");
  } else if (lambda < 0.0 || lambda > 1.0) {
    require(summary.regular_count >= m, "expected at least " + std::to_string(m) +
                                            " regular branches");
    require(odd_branches == 0, "expected an even cusp count on every branch");
  }
  return summary;
}

}  // namespace rosette
