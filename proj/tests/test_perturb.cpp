#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "echreeb/json_io.hpp"
#include "echreeb/perturb.hpp"

using namespace echreeb;

TEST_CASE("quadratic modifier identities") {
  // eps = sqrt(3/2), c = 0 recovers the base form as a polynomial identity.
  const auto zero = taubes_modifier(Surd(0, 1, 2), Surd(0));
  CHECK(zero.is_zero());
  CHECK(poly_is_zero(FormProfile(zero).f()));

  // eps = 1/4, c = 2: quadratic coefficient -(3 - sqrt6/4)/2, constant -2.
  const auto f = taubes_modifier(Surd::rational(1, 4), Surd(2));
  REQUIRE(f.poly.size() == 3);
  CHECK(f.poly[2] == Surd(-12, 1, 8));  // (-3 + sqrt6/4)/2 = (-12 + sqrt6)/8
  CHECK(f.poly[1].is_zero());
  CHECK(f.c == Surd(2));
  // f(pi/2) = -c for every (eps, c)
  CHECK(poly_eval(FormProfile(f).f(), Surd(0)) == -Surd(2));

  CHECK_THROWS_AS(taubes_modifier(Surd(0), Surd(0)), std::domain_error);
  CHECK_THROWS_AS(taubes_modifier(Surd(2), Surd(0)), std::domain_error);
  CHECK_THROWS_AS(taubes_modifier(Surd::rational(1, 4), Surd(-1)), std::domain_error);
}

TEST_CASE("splitting the base-form catalog at cutoff 10") {
  const auto base = FormProfile::taubes();
  const auto cat = bourgeois_split(base, 10.0, 1e-2);
  CHECK(cat.type == BoundaryType::untwisted);

  // 5 families -> 10 split orbits, plus the two pole orbits.
  CHECK(cat.orbits.size() == 12);
  int elliptic = 0, hyperbolic = 0, exceptional = 0;
  for (const auto& o : cat.orbits) {
    CHECK(o.name == cat.find(o.name)->name);
    if (o.exceptional) {
      ++exceptional;
      CHECK(o.kind == OrbitKind::elliptic);
      CHECK(o.action == doctest::Approx(4.0 * kPi));
      CHECK(o.homology_class == -1);
      CHECK(*o.rotation == Surd(-2, 1, 2));
      continue;
    }
    if (o.kind == OrbitKind::elliptic) {
      ++elliptic;
      CHECK(o.l_positive == LPositivity::positive);
      CHECK(o.rotation.has_value());
    } else {
      ++hyperbolic;
      CHECK(o.kind == OrbitKind::positive_hyperbolic);
      CHECK(!o.rotation.has_value());
    }
    CHECK(o.action_lo <= o.action);
    CHECK(o.action <= o.action_hi);
    CHECK(o.action_hi - o.action_lo == doctest::Approx(1e-2));
    CHECK(o.action_hi < 10.0);
  }
  CHECK(elliptic == 5);
  CHECK(hyperbolic == 5);
  CHECK(exceptional == 2);

  // Equator pair carries class +1, the contractible pairs class 0.
  const auto* he = cat.find("h@1.570796327#0");
  REQUIRE(he != nullptr);
  CHECK(he->homology_class == 1);
}

TEST_CASE("below the minimal family action only the pole orbits remain") {
  const auto cat = bourgeois_split(FormProfile::taubes(), 1.0, 1e-3);
  CHECK(cat.orbits.size() == 2);
  CHECK(cat.orbits[0].exceptional);
  CHECK(cat.orbits[1].exceptional);
}

TEST_CASE("emitted actions approach the family action as delta shrinks") {
  const auto base = FormProfile::taubes();
  const auto families = morse_bott_catalog(base, 10.0).families;
  double prev_gap = 1.0;
  for (double delta : {1e-2, 1e-3, 1e-4}) {
    const auto cat = bourgeois_split(base, 10.0, delta);
    double gap = 0.0;
    for (const auto& o : cat.orbits) {
      if (o.exceptional) continue;
      for (const auto& f : families)
        if (std::abs(f.theta0 - *o.from_angle) < 1e-9)
          gap = std::max(gap, std::abs(o.action - f.action));
    }
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-4);
}

TEST_CASE("splitting is deterministic") {
  const auto a = catalog_to_json(bourgeois_split(FormProfile::taubes(), 10.0, 1e-3)).dump();
  const auto b = catalog_to_json(bourgeois_split(FormProfile::taubes(), 10.0, 1e-3)).dump();
  CHECK(a == b);
  const auto ra = build_lambda_A(5.0, Surd::rational(1, 32), Surd(2), 1e-3, 10.0);
  const auto rb = build_lambda_A(5.0, Surd::rational(1, 32), Surd(2), 1e-3, 10.0);
  CHECK(catalog_to_json(ra.catalog).dump() == catalog_to_json(rb.catalog).dump());
  CHECK(neighborhood_to_json(ra.neighborhood).dump() ==
        neighborhood_to_json(rb.neighborhood).dump());
}

TEST_CASE("full pipeline bookkeeping") {
  const auto res = build_lambda_A(5.0, Surd::rational(1, 32), Surd(2), 1e-3, 10.0);
  CHECK(res.neighborhood.max_f < -1.0);
  CHECK(res.neighborhood.kappa >= -res.neighborhood.inf_f);
  CHECK(res.neighborhood.kappa > 1.0);
  int flat = 0;
  for (const auto& o : res.catalog.orbits) {
    if (o.action_hi < 5.0) {
      CHECK(o.l_flat);
      ++flat;
    } else {
      CHECK(!o.l_flat);
    }
    if (o.kind == OrbitKind::elliptic) CHECK(o.l_positive != LPositivity::not_positive);
  }
  CHECK(flat > 0);

  // Degenerate parameters reduce to the plain splitting of the base form.
  const auto plain = bourgeois_split(FormProfile::taubes(), 10.0, 1e-3);
  const auto degenerate_profile = FormProfile(taubes_modifier(Surd(0, 1, 2), Surd(0)));
  CHECK(catalog_to_json(bourgeois_split(degenerate_profile, 10.0, 1e-3)).dump() ==
        catalog_to_json(plain).dump());

  // rho=10, eps=1/20, L=12: the pole orbits stay L-positive (eps < action/L)
  const auto wide = build_lambda_A(10.0, Surd::rational(1, 20), Surd::rational(5, 4), 1e-3, 12.0);
  for (const auto& o : wide.catalog.orbits)
    if (o.exceptional) CHECK(o.l_positive == LPositivity::positive);

  // Pipeline constraint failures.
  CHECK_THROWS_AS(build_lambda_A(12.0, Surd::rational(1, 32), Surd(2), 1e-3, 10.0),
                  std::invalid_argument);  // L <= rho
  CHECK_THROWS_AS(build_lambda_A(5.0, Surd::rational(1, 32), Surd(0), 1e-3, 10.0),
                  std::invalid_argument);  // c too small: max exponent not < -1
  // eps too large for the pole orbits to stay L-positive at these parameters
  CHECK_THROWS_WITH_AS(build_lambda_A(5.0, Surd::rational(1, 10), Surd(2), 1e-3, 10.0),
                       doctest::Contains("maximal admissible eps"), std::invalid_argument);
}

TEST_CASE("quotient catalog for the symmetric base form") {
  const auto base = FormProfile::taubes();
  const auto cat = twisted_catalog(base, 10.0, 1e-3);
  CHECK(cat.type == BoundaryType::twisted);

  int exceptional = 0, neg_hyp = 0, pos_hyp = 0, elliptic = 0;
  for (const auto& o : cat.orbits) {
    if (o.exceptional) {
      ++exceptional;
      CHECK(o.kind == OrbitKind::elliptic);
      CHECK(*o.rotation == Surd(-2, 1, 2));
      CHECK(o.homology_class == -2);
      continue;
    }
    switch (o.kind) {
      case OrbitKind::negative_hyperbolic:
        ++neg_hyp;
        CHECK(!o.rotation.has_value());
        CHECK(o.homology_class == 1);
        CHECK(o.action_hi == doctest::Approx(kPi));  // half the equator period
        break;
      case OrbitKind::positive_hyperbolic:
        ++pos_hyp;
        break;
      case OrbitKind::elliptic:
        ++elliptic;
        CHECK(o.l_positive == LPositivity::positive);
        break;
    }
  }
  CHECK(exceptional == 1);
  CHECK(neg_hyp == 2);
  // merged contractible family + merged mirror-slope family -> 2 h orbits
  CHECK(pos_hyp == 2);
  // their elliptic partners + the interval-family elliptic orbit
  CHECK(elliptic == 3);

  require_catalog_type(cat, BoundaryType::twisted);
  CHECK_THROWS_AS(require_catalog_type(cat, BoundaryType::untwisted), std::invalid_argument);

  // Non-symmetric profiles are rejected.
  ConformalExponent odd;
  odd.poly = {Surd(0), Surd::rational(1, 8)};
  CHECK_THROWS_AS(twisted_catalog(FormProfile(odd), 10.0, 1e-3), std::invalid_argument);
}

TEST_CASE("L-positivity check semantics") {
  ReebOrbit o;
  o.kind = OrbitKind::elliptic;
  o.rotation = Surd::from_double(0.1);
  o.action = o.action_lo = o.action_hi = 1.0;
  CHECK(l_positive_check(o, 5.0) == LPositivity::positive);
  o.rotation = Surd::rational(1, 5);  // exactly on the open boundary 0.2 = 1/5
  CHECK(l_positive_check(o, 5.0) == LPositivity::not_positive);
  o.kind = OrbitKind::positive_hyperbolic;
  CHECK(l_positive_check(o, 5.0) == LPositivity::not_applicable);
  o.kind = OrbitKind::elliptic;
  o.action = o.action_lo = o.action_hi = 7.0;  // above the cutoff: outside the definition
  CHECK(l_positive_check(o, 5.0) == LPositivity::not_applicable);
}
