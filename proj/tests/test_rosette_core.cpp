#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "rosette/rosette_core.hpp"

using namespace rosette;

TEST_CASE("make_support validates and sorts") {
  const auto p = make_support(2, 10.0, {{4, 0.0, 1.0}, {1, 4.0, 0.0}});
  REQUIRE(p.terms.size() == 2);
  CHECK(p.terms[0].n == 1);
  CHECK(p.terms[1].n == 4);
  CHECK_THROWS_AS(make_support(0, 1.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_support(1, 1.0, {{0, 1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_support(1, 1.0, {{2, 1.0, 0.0}, {2, 0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_support(1, NAN, {}), std::invalid_argument);
}

TEST_CASE("circle") {
  const auto c = circle(1.0);
  CHECK(c.m == 1);
  for (double t : {0.0, 1.0, 2.5, 5.0}) {
    const auto q = point_at(c, t);
    CHECK(q.x == doctest::Approx(std::cos(t)));
    CHECK(q.y == doctest::Approx(std::sin(t)));
    CHECK(radius_of_curvature(c, t) == doctest::Approx(1.0));
  }
  const auto v = validate_rosette(c);
  CHECK(v.is_rosette);
  CHECK(v.proved_by_bound);
  CHECK(v.min_rho == doctest::Approx(1.0));
}

TEST_CASE("not a rosette: curvature radius changes sign") {
  const auto p = make_support(1, 0.0, {{2, 1.0, 0.0}});
  const auto v = validate_rosette(p);
  CHECK_FALSE(v.is_rosette);
  CHECK(v.min_rho == doctest::Approx(-3.0).epsilon(1e-9));  // rho = 3 cos 2t
}

TEST_CASE("positive but not proved by the sufficient bound") {
  // rho = 1 + 2.325 c - 2.5 c^3 with c = cos(t/2); minimum ~0.137
  const auto p = make_support(2, 1.0, {{1, 0.6, 0.0}, {3, 0.5, 0.0}});
  CHECK(positivity_bound(p) < 0.0);
  const auto c = oracle::of(p);
  double lo = INFINITY;
  for (int i = 0; i < 100000; ++i) lo = std::min(lo, oracle::rho(c, 4 * kPi * i / 100000));
  const auto v = validate_rosette(p);
  CHECK(lo > 0.1);
  CHECK(v.is_rosette);
  CHECK_FALSE(v.proved_by_bound);
  CHECK(v.min_rho == doctest::Approx(lo).epsilon(1e-7));
}

TEST_CASE("reference curves are rosettes") {
  CHECK(validate_rosette(gen::reference_m2()).is_rosette);
  CHECK(validate_rosette(gen::reference_m3()).is_rosette);
  CHECK(validate_rosette(gen::simple_m2()).is_rosette);
  CHECK(validate_rosette(gen::simple_m3()).is_rosette);
}

TEST_CASE("random rosettes: evaluation, points and curvature against oracles") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = gen::random_rosette(rng, 1, 5);
    const auto c = oracle::of(p);
    const auto v = validate_rosette(p);
    CHECK(v.is_rosette);
    CHECK(v.proved_by_bound);
    CHECK(v.min_rho > 0.0);
    for (int i = 0; i < 10; ++i) {
      const double t = gen::uniform(rng, 0, 2 * kPi * p.m);
      CHECK(eval_support(p, t) == doctest::Approx(oracle::value(c, t)).epsilon(1e-12));
      const auto q = point_at(p, t);
      const auto r = oracle::point(c, t);
      CHECK(q.x == doctest::Approx(r.x).epsilon(1e-12).scale(p.a0));
      CHECK(q.y == doctest::Approx(r.y).epsilon(1e-12).scale(p.a0));
      auto f = [&](double s) { return oracle::value(c, s); };
      CHECK(radius_of_curvature(p, t) ==
            doctest::Approx(f(t) + oracle::d2(f, t)).epsilon(1e-5).scale(p.a0));
      // tangent of the envelope: dX/dt = rho * (-sin t, cos t)
      auto x = [&](double s) { return oracle::point(c, s).x; };
      auto y = [&](double s) { return oracle::point(c, s).y; };
      const double rho = radius_of_curvature(p, t);
      CHECK(oracle::d1(x, t) == doctest::Approx(-rho * std::sin(t)).epsilon(1e-6).scale(p.a0));
      CHECK(oracle::d1(y, t) == doctest::Approx(rho * std::cos(t)).epsilon(1e-6).scale(p.a0));
    }
  }
}

TEST_CASE("translation harmonic moves the curve rigidly") {
  gen::Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = gen::random_rosette(rng, 1, 4);
    const double dx = gen::uniform(rng, -3, 3);
    const double dy = gen::uniform(rng, -3, 3);
    auto terms = p.terms;
    bool found = false;
    for (auto& t : terms) {
      if (t.n == p.m) {
        t.a += dx;
        t.b += dy;
        found = true;
      }
    }
    if (!found) terms.push_back({p.m, dx, dy});
    const auto q = make_support(p.m, p.a0, terms);
    for (int i = 0; i < 5; ++i) {
      const double t = gen::uniform(rng, 0, 20);
      const auto a = point_at(p, t);
      const auto b = point_at(q, t);
      CHECK(b.x - a.x == doctest::Approx(dx).epsilon(1e-10));
      CHECK(b.y - a.y == doctest::Approx(dy).epsilon(1e-10));
      CHECK(radius_of_curvature(q, t) == doctest::Approx(radius_of_curvature(p, t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("scaling the support scales the curve") {
  gen::Rng rng(43);
  const auto p = gen::random_rosette(rng, 2, 2);
  auto terms = p.terms;
  for (auto& t : terms) {
    t.a *= 2.5;
    t.b *= 2.5;
  }
  const auto q = make_support(p.m, 2.5 * p.a0, terms);
  CHECK(positivity_bound(q) == doctest::Approx(2.5 * positivity_bound(p)));
  CHECK(coefficient_scale(q) == doctest::Approx(2.5 * coefficient_scale(p)));
  const auto a = point_at(p, 1.3);
  const auto b = point_at(q, 1.3);
  CHECK(b.x == doctest::Approx(2.5 * a.x));
  CHECK(b.y == doctest::Approx(2.5 * a.y));
}
