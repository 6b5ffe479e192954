#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "echreeb/perturb.hpp"
#include "echreeb/profile.hpp"

using namespace echreeb;

namespace {
FormProfile perturbed(long long num, long long den, long long c_num, long long c_den) {
  return FormProfile(taubes_modifier(Surd::rational(num, den), Surd::rational(c_num, c_den)));
}
}  // namespace

TEST_CASE("coefficient evaluation at anchor angles") {
  const auto base = FormProfile::taubes();
  auto [a1_0, a2_0] = evaluate_profile(base, 0.0);
  CHECK(a1_0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(a2_0 == doctest::Approx(0.0).epsilon(1e-14));
  auto [a1_eq, a2_eq] = evaluate_profile(base, 0.5 * kPi);
  CHECK(a1_eq == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(a2_eq) < 1e-15);
  CHECK_THROWS_AS(evaluate_profile(base, -0.1), std::domain_error);
  CHECK_THROWS_AS(evaluate_profile(base, kPi + 0.1), std::domain_error);

  // Trivial rescaling by e^0 leaves the coefficients unchanged.
  const FormProfile scaled(taubes_modifier(Surd(0, 1, 2), Surd(0)));
  for (double theta : {0.3, 1.1, 2.0, 2.9}) {
    CHECK(scaled.a1(theta) == doctest::Approx(base.a1(theta)).epsilon(1e-15));
    CHECK(scaled.a2(theta) == doctest::Approx(base.a2(theta)).epsilon(1e-15));
  }
}

TEST_CASE("contact certificate") {
  const auto base = FormProfile::taubes();
  const auto cert = contact_certificate(base, 10000);
  CHECK(cert.pass);
  // worst margin is -sqrt6, attained at the equator
  CHECK(cert.worst_margin == doctest::Approx(-std::sqrt(6.0)).epsilon(1e-9));
  CHECK(std::abs(cert.worst_theta - 0.5 * kPi) < 1e-3);

  CHECK(contact_certificate(perturbed(1, 10, 2, 1), 10000).pass);

  const auto degenerate = contact_certificate_raw(
      [](double) { return 1.0; }, [](double) { return 0.0; }, [](double) { return 0.0; },
      [](double) { return 0.0; }, 512);
  CHECK(!degenerate.pass);
  CHECK_THROWS_AS(contact_certificate(base, 1), std::invalid_argument);
}

TEST_CASE("conformal covariance of the contact pairing") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    ConformalExponent f;
    const int deg = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k <= deg; ++k)
      f.poly.push_back(Surd::rational(static_cast<long long>(rng() % 9) - 4, 4));
    const FormProfile rescaled(f);
    const FormProfile base = FormProfile::taubes();
    for (int i = 0; i < 100; ++i) {
      const double theta = 1e-3 + (kPi - 2e-3) * static_cast<double>(rng() % 100000) / 100000.0;
      const double factor = std::exp(2.0 * poly_eval(rescaled.f(), std::cos(theta)));
      CHECK(rescaled.cross(theta) ==
            doctest::Approx(factor * base.cross(theta)).epsilon(1e-10));
    }
    CHECK(contact_certificate(rescaled, 2048).pass == contact_certificate(base, 2048).pass);
  }
}

TEST_CASE("reeb field") {
  const auto base = FormProfile::taubes();
  const auto eq = reeb_field(base, 0.5 * kPi);
  CHECK(eq.dt == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(eq.dphi) < 1e-14);
  CHECK(reeb_at_pole(base, Pole::north) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(reeb_field(base, 0.0), std::domain_error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const double theta = 0.05 + (kPi - 0.1) * static_cast<double>(rng() % 100000) / 100000.0;
    const auto v = reeb_field(base, theta);
    const double pairing = base.a1(theta) * v.dt + base.a2(theta) * v.dphi;
    CHECK(pairing == doctest::Approx(1.0).epsilon(1e-12));
    // d(lambda)(R, d/dtheta) = -(a1' dt + a2' dphi)(R) component
    const double dlam = base.da1(theta) * v.dt + base.da2(theta) * v.dphi;
    CHECK(std::abs(dlam) < 1e-10);
  }
}

TEST_CASE("torus family catalog for the base form") {
  const auto base = FormProfile::taubes();
  const auto mb = morse_bott_catalog(base, 10.0, 10000);
  // equator + two contractible + the mirror pair with slope +-1
  CHECK(mb.families.size() == 5);

  const MorseBottFamily* equator = nullptr;
  int contractible = 0, mirror = 0;
  for (const auto& f : mb.families) {
    CHECK(f.action > 0.0);
    CHECK(f.action < 10.0);
    CHECK(f.homology_class == -f.winding_t);
    CHECK(f.contractible == (f.winding_t == 0));
    CHECK(f.action ==
          doctest::Approx(2.0 * kPi * (f.winding_t * base.a1(f.theta0) +
                                       f.winding_phi * base.a2(f.theta0)))
              .epsilon(1e-12));
    if (std::abs(f.theta0 - 0.5 * kPi) < 1e-9) equator = &f;
    if (f.contractible) ++contractible;
    if (std::abs(f.slope_p) == 1 && f.slope_q == 1) ++mirror;
  }
  REQUIRE(equator != nullptr);
  CHECK(equator->winding_t == -1);
  CHECK(equator->winding_phi == 0);
  CHECK(equator->homology_class == 1);
  CHECK(equator->action == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  CHECK(contractible == 2);
  CHECK(mirror == 2);

  CHECK(morse_bott_catalog(base, 1.0, 10000).families.empty());
  CHECK_THROWS_AS(morse_bott_catalog(base, -1.0, 10000), std::invalid_argument);
}

TEST_CASE("exceptional rotation classes") {
  const auto base = FormProfile::taubes();
  const Surd expected = Surd(-2, 1, 2);  // sqrt6/2 - 1
  const auto north = exceptional_rotation(base, Pole::north);
  const auto south = exceptional_rotation(base, Pole::south);
  CHECK(north.rotation == expected);
  CHECK(south.rotation == expected);
  CHECK(north.action == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(south.action == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  // equals sqrt(3/2) mod 1
  CHECK(Surd(0, 1, 2).mod1() == expected);

  const auto quarter = exceptional_rotation(perturbed(1, 4, 2, 1), Pole::north);
  CHECK(quarter.rotation == Surd::rational(1, 4));
  CHECK(exceptional_rotation(perturbed(1, 4, 2, 1), Pole::south).rotation == Surd::rational(1, 4));
}

TEST_CASE("second-derivative condition") {
  const auto base = FormProfile::taubes();
  const auto mb = morse_bott_catalog(base, 10.0, 10000);
  const auto cert = technical_condition_check(base, mb.families);
  CHECK(cert.pass);
  for (const auto& e : cert.entries) CHECK(e.margin < 0.0);

  const auto p = perturbed(1, 10, 2, 1);
  CHECK(technical_condition_check(p, morse_bott_catalog(p, 10.0, 10000).families).pass);

  // A sign-flipped test pair is rejected: feed families whose angles sit
  // where an artificial exponent pushes a' x a'' positive.
  ConformalExponent wild;
  wild.poly = {Surd(0), Surd(0), Surd(0), Surd(0), Surd(8)};  // 8 u^4
  const FormProfile distorted(wild);
  bool found_positive = false;
  for (double theta = 0.1; theta < kPi; theta += 0.01) {
    const double s = std::sin(theta);
    const double e = distorted.conformal(theta);
    const double margin = -e * e * s * s * s * poly_eval(distorted.V(), std::cos(theta));
    if (margin > 0.0) found_positive = true;
  }
  if (found_positive) {
    MorseBottFamily fake;
    bool flagged = false;
    for (double theta = 0.1; theta < kPi; theta += 0.01) {
      fake.theta0 = theta;
      const auto check = technical_condition_check(distorted, {fake});
      if (!check.pass) flagged = true;
    }
    CHECK(flagged);
  }
}
