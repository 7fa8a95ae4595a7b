#include "rosette/derived_curves.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rosette/kernels.hpp"

namespace rosette {

namespace {

FrontSupport to_front(Series s, int multiplicity, BranchDescriptor descriptor, double scale) {
  s = normalized(std::move(s));
  return {s.period, s.constant, std::move(s.terms), multiplicity, descriptor, scale};
}

Series as_series(const FourierSupport& p) { return {p.m, p.a0, p.terms}; }

}  // namespace

bool FrontSupport::is_point() const {
  const double tol = kPointTolerance * scale;
  if (std::abs(c0) > tol) return false;
  for (const auto& t : terms) {
    if (t.n != M && std::hypot(t.a, t.b) > tol) return false;
  }
  return true;
}

FourierSupport shift_support(const FourierSupport& p, double phi) {
  Series s = shifted(p.view(), phi);
  return {p.m, p.a0, std::move(s.terms)};
}

FrontSupport base_front(const FourierSupport& p) {
  BranchDescriptor d{.kind = FrontKind::Base, .source_m = p.m};
  return to_front(as_series(p), 1, d, coefficient_scale(p));
}

int equidistant_branch_count(int m, double lambda) { return lambda == 0.5 ? m : 2 * m - 1; }

FrontSupport equidistant_branch(const FourierSupport& p, double lambda, int k) {
  const int count = equidistant_branch_count(p.m, lambda);
  if (k < 1 || k > count) {
    throw std::out_of_range("branch index k = " + std::to_string(k) + " outside 1.." +
                            std::to_string(count));
  }
  const Series moved = shifted_half_turns(p.view(), k);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  Series h = linear_combination(lambda, p.view(), sign * (1.0 - lambda), moved.view());
  const int multiplicity = (lambda == 0.5 && k == p.m) ? 2 : 1;
  BranchDescriptor d{.kind = FrontKind::Equidistant, .lambda = lambda, .k = k, .source_m = p.m};
  return to_front(std::move(h), multiplicity, d, coefficient_scale(p));
}

FrontSupport wigner_branch(const FourierSupport& p, int k) { return equidistant_branch(p, 0.5, k); }

FrontSupport cwms_support(const FourierSupport& p) {
  const Series moved = shifted_half_turns(p.view(), p.m);
  const double sign = (p.m % 2 == 0) ? 1.0 : -1.0;
  Series h = linear_combination(1.0, p.view(), -sign, moved.view());
  // L / (m pi) = 2 a0
  h.constant -= 2.0 * p.a0;
  BranchDescriptor d{.kind = FrontKind::Cwms, .source_m = p.m};
  return to_front(std::move(h), 1, d, coefficient_scale(p));
}

FrontSupport sms_support(const FourierSupport& p) {
  Series h = as_series(p);
  h.constant = 0.0;
  BranchDescriptor d{.kind = FrontKind::Sms, .alpha = p.a0, .source_m = p.m};
  return to_front(std::move(h), 1, d, coefficient_scale(p));
}

FrontSupport offset_support(const FourierSupport& p, double alpha) {
  Series h = as_series(p);
  h.constant -= alpha;
  BranchDescriptor d{.kind = FrontKind::Offset, .alpha = alpha, .source_m = p.m};
  return to_front(std::move(h), 1, d, coefficient_scale(p));
}

CurveSamples sample_front(const FrontSupport& h, int N) {
  if (N < kMinFrontSamples) {
    throw std::invalid_argument("sample_front: N must be >= " + std::to_string(kMinFrontSamples));
  }
  CurveSamples out;
  out.multiplicity = h.multiplicity;
  out.is_point = h.is_point();
  const double step = period_length(h.view()) / N;
  out.theta.resize(N + 1);
  for (int i = 0; i <= N; ++i) out.theta[i] = i * step;
  out.points.resize(N + 1);
  kernels::sample_points(h.view(), 0.0, step, std::span(out.points).first(N));
  out.points[N] = out.points[0];
  return out;
}

}  // namespace rosette
