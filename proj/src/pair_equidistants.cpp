#include "rosette/pair_equidistants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rosette {

namespace {

void require_lambda(double lambda) {
  if (lambda == 0.0 || lambda == 1.0) {
    throw std::invalid_argument("pair equidistants need lambda outside {0, 1}");
  }
}

double parity_sign(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

std::string case_name(PairFamily family, bool inside, bool even) {
  return std::string(inside ? "inside_" : "outside_") + (even ? "even_" : "odd_") +
         (family == PairFamily::LambdaSecond ? "second" : "first");
}

}  // namespace

ParallelArcSet parallel_arc_set(int m1, int m2) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("rotation numbers must be >= 1");
  ParallelArcSet set{m1, m2, {}};
  set.entries.reserve(2 * m1 + 2 * m2);
  for (int i = 0; i < 2 * m1; ++i) set.entries.emplace_back(i, (i + 1) % (2 * m1));
  const int offset = 2 * m1;
  for (int i = 0; i < 2 * m2; ++i) {
    set.entries.emplace_back(offset + i, offset + (i + 1) % (2 * m2));
  }
  return set;
}

int pair_branch_count(int m1, int m2, double lambda) {
  require_lambda(lambda);
  const int g = std::gcd(m1, m2);
  return lambda == 0.5 ? 2 * g : 4 * g;
}

std::vector<GlueingScheme> maximal_glueing_schemes(int m1, int m2, double lambda) {
  const int count = pair_branch_count(m1, m2, lambda);
  const int g = std::gcd(m1, m2);
  const int columns = 2 * std::lcm(m1, m2) + 1;
  const int offset = 2 * m1;
  std::vector<GlueingScheme> schemes;
  schemes.reserve(count);
  for (int k = 0; k < count; ++k) {
    GlueingScheme s;
    s.k = k;
    s.upper.resize(columns);
    s.lower.resize(columns);
    if (k < 2 * g) {
      s.family = lambda == 0.5 ? PairFamily::WignerPair : PairFamily::LambdaFirst;
      for (int j = 0; j < columns; ++j) {
        s.upper[j] = j % (2 * m1);
        s.lower[j] = offset + (k + j) % (2 * m2);
      }
    } else {
      s.family = PairFamily::LambdaSecond;
      const int shift = k - 2 * g;
      for (int j = 0; j < columns; ++j) {
        s.upper[j] = offset + (shift + j) % (2 * m2);
        s.lower[j] = j % (2 * m1);
      }
    }
    schemes.push_back(std::move(s));
  }
  return schemes;
}

PairBranch pair_branch(const FourierSupport& p1, const FourierSupport& p2, double lambda, int k) {
  const int count = pair_branch_count(p1.m, p2.m, lambda);
  if (k < 0 || k >= count) {
    throw std::out_of_range("pair branch index k = " + std::to_string(k) + " outside 0.." +
                            std::to_string(count - 1));
  }
  const int g = std::gcd(p1.m, p2.m);
  const int period = std::lcm(p1.m, p2.m);
  const Series first = lifted(p1.view(), period);
  const Series second = lifted(p2.view(), period);

  PairFamily family = PairFamily::WignerPair;
  double w1 = 0.5;
  double w2 = 0.5;
  int shift = k;
  if (lambda != 0.5) {
    if (k < 2 * g) {
      family = PairFamily::LambdaFirst;
      w1 = lambda;
      w2 = 1.0 - lambda;
    } else {
      family = PairFamily::LambdaSecond;
      w1 = 1.0 - lambda;
      w2 = lambda;
      shift = k - 2 * g;
    }
  }
  const Series moved = shifted_half_turns(second.view(), shift);
  Series h = linear_combination(w1, first.view(), parity_sign(k) * w2, moved.view());

  BranchDescriptor d{.kind = FrontKind::PairEquidistant,
                     .lambda = lambda,
                     .k = k,
                     .family = family,
                     .source_m = p1.m,
                     .source_m2 = p2.m};
  const double scale = std::max(coefficient_scale(p1), coefficient_scale(p2));
  FrontSupport support{h.period, h.constant, std::move(h.terms), 1, d, scale};
  return {std::move(support), family, k, lambda};
}

namespace {

// Radius terms of the two rosettes at a parallel pair have the same sign
// everywhere along the branch.
bool curved_same_side(const FourierSupport& p1, const FourierSupport& p2, int k, int shift) {
  const int samples = 1024;
  const int period = std::lcm(p1.m, p2.m);
  const double step = 2.0 * kPi * period / samples;
  for (int i = 0; i < samples; ++i) {
    const double t = i * step;
    const double r1 = radius_of_curvature(p1, t);
    const double r2 = parity_sign(k) * radius_of_curvature(p2, t + shift * kPi);
    if (r1 * r2 <= 0.0) return false;
  }
  return true;
}

IdentityReport length_case(const FourierSupport& p1, const FourierSupport& p2,
                           const PairBranch& branch, double length,
                           std::optional<double> oracle_length, int oracle_samples) {
  const double lambda = branch.lambda;
  const int period = std::lcm(p1.m, p2.m);
  const double r1 = static_cast<double>(period) / p1.m;
  const double r2 = static_cast<double>(period) / p2.m;
  const bool inside = lambda > 0.0 && lambda < 1.0;
  const bool even = branch.k % 2 == 0;
  double w1 = lambda;
  double w2 = 1.0 - lambda;
  if (branch.family == PairFamily::LambdaSecond) std::swap(w1, w2);
  if (!inside) {
    w1 = std::abs(w1);
    w2 = std::abs(w2);
  }
  const bool inequality = inside ? !even : even;
  const double l1 = rosette_length(p1);
  const double l2 = rosette_length(p2);

  IdentityReport r;
  r.identity_id = std::string("pair_length_") + case_name(branch.family, inside, even);
  r.lhs = length;
  r.oracle_lhs = oracle_length;
  std::optional<double> oracle_rhs;
  if (oracle_samples > 0) {
    const double o1 = oracle_measures(base_front(p1), oracle_samples).length;
    const double o2 = oracle_measures(base_front(p2), oracle_samples).length;
    oracle_rhs = w1 * r1 * o1 + w2 * r2 * o2;
  }
  const std::string formula =
      std::string("L_branch ") + (inequality ? "<=" : "=") + " w1 (lcm/m1) L1 + w2 (lcm/m2) L2";
  r.variants.push_back(make_variant("printed", formula, inequality, length,
                                    w1 * r1 * l1 + w2 * r2 * l2, oracle_length, oracle_rhs));
  r.terms["w1"] = w1;
  r.terms["w2"] = w2;
  r.terms["L1"] = l1;
  r.terms["L2"] = l2;
  adjudicate(r);
  return r;
}

}  // namespace

PairInventory pair_inventory(const FourierSupport& p1, const FourierSupport& p2, double lambda,
                             int oracle_samples) {
  PairInventory inv;
  inv.m1 = p1.m;
  inv.m2 = p2.m;
  inv.gcd = std::gcd(p1.m, p2.m);
  inv.lcm = std::lcm(p1.m, p2.m);
  inv.lambda = lambda;
  const int count = pair_branch_count(p1.m, p2.m, lambda);
  inv.branches.resize(count);

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    PairBranch branch = pair_branch(p1, p2, lambda, k);
    PairBranchReport& b = inv.branches[k];
    b.k = k;
    b.family = branch.family;
    b.length = length_closed(branch.support);
    std::optional<double> oracle_length;
    if (oracle_samples > 0) oracle_length = oracle_measures(branch.support, oracle_samples).length;
    b.length_case = length_case(p1, p2, branch, b.length, oracle_length, oracle_samples);
    b.rotation = rotation_number(branch.support, 1024);
    b.cusps = find_cusps(branch.support);
    b.classification = classify_front(branch.support, b.cusps);
    const int shift = branch.family == PairFamily::LambdaSecond ? k - 2 * inv.gcd : k;
    b.curved_same_side = curved_same_side(p1, p2, k, shift);
    const bool inside = lambda > 0.0 && lambda < 1.0;
    b.predicted_regular = inside ? b.curved_same_side : !b.curved_same_side;
    b.support = std::move(branch.support);
  }

  auto require = [&](bool ok, std::string what) {
    if (!ok) {
      inv.assertions_hold = false;
      inv.failures.push_back(std::move(what));
    }
  };
  for (const auto& b : inv.branches) {
    const std::string tag = "k" + std::to_string(b.k) + ": ";
    if (is_regular(b.classification)) ++inv.regular_count;
    require(b.rotation.defined && b.rotation.numerator == inv.lcm && b.rotation.denominator == 1,
            tag + "rotation number differs from lcm");
    require(b.cusps.parity_even, tag + "odd cusp count");
    require(b.length_case.verdict, tag + b.length_case.identity_id + " does not hold");
    require(!b.predicted_regular || is_regular(b.classification),
            tag + "curved-in-same-side criterion predicts a regular branch, found cusps");
    for (const auto& w : b.cusps.warnings) inv.warnings.push_back(tag + w);
  }
  const int needed = lambda == 0.5 ? inv.gcd : 2 * inv.gcd;
  require(inv.regular_count >= needed,
          "expected at least " + std::to_string(needed) + " regular branches, found " +
              std::to_string(inv.regular_count));

  // Accidental symmetry can make two branch supports coincide.
  for (std::size_t i = 0; i < inv.branches.size(); ++i) {
    for (std::size_t j = i + 1; j < inv.branches.size(); ++j) {
      const auto& a = inv.branches[i].support;
      const auto& b = inv.branches[j].support;
      const Series diff = linear_combination(1.0, a.view(), -1.0, b.view());
      if (coefficient_scale(diff.view()) <= kPointTolerance * a.scale) {
        inv.warnings.push_back("coincident_branches k" + std::to_string(i) + " k" +
                               std::to_string(j));
      }
    }
  }
  return inv;
}

}  // namespace rosette
