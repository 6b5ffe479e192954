#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "echreeb/json_io.hpp"

using namespace echreeb;

TEST_CASE("surd serialization") {
  const Surd s(-2, 1, 2);
  const Json j = surd_to_json(s);
  CHECK(j.dump() == "[-2,2,1,2]");
  CHECK(surd_from_json(j) == s);
  CHECK(surd_from_json(Json::parse("[1,4]")) == Surd::rational(1, 4));
  CHECK(surd_from_json(Json::parse("3")) == Surd(3));
  // huge components round-trip through strings
  Surd big = Surd(1, 1, 3);
  for (int i = 0; i < 8; ++i) big = big * big + Surd::rational(1, 7);
  CHECK(big.r() > BigInt(std::numeric_limits<long long>::max()));
  CHECK(surd_from_json(surd_to_json(big)) == big);
}

TEST_CASE("profile document round trip") {
  const FormProfile modified(taubes_modifier(Surd::rational(1, 4), Surd(2)));
  const Json j = profile_to_json(modified);
  CHECK(j["base"] == "taubes");
  const FormProfile back = profile_from_json(j);
  CHECK(back.f() == modified.f());
  CHECK(profile_to_json(back).dump() == j.dump());

  const Json base_doc = Json::parse(R"({"base":"taubes","f_coeffs":[],"c":[0,1]})");
  CHECK(poly_is_zero(profile_from_json(base_doc).f()));
  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"base":"other"})")), std::invalid_argument);
}

TEST_CASE("catalog document round trip") {
  const auto cat = bourgeois_split(FormProfile::taubes(), 10.0, 1e-3);
  const Json j = catalog_to_json(cat);
  const OrbitCatalog back = catalog_from_json(j);
  CHECK(back.orbits.size() == cat.orbits.size());
  CHECK(catalog_to_json(back).dump() == j.dump());
  for (std::size_t i = 0; i < cat.orbits.size(); ++i) {
    CHECK(back.orbits[i].name == cat.orbits[i].name);
    CHECK(back.orbits[i].kind == cat.orbits[i].kind);
    CHECK(back.orbits[i].action_lo == cat.orbits[i].action_lo);
    CHECK(back.orbits[i].homology_class == cat.orbits[i].homology_class);
    CHECK(back.orbits[i].rotation.has_value() == cat.orbits[i].rotation.has_value());
    if (back.orbits[i].rotation) CHECK(*back.orbits[i].rotation == *cat.orbits[i].rotation);
  }
}

TEST_CASE("curve component documents") {
  const Json doc = Json::parse(R"({
    "id": "plane",
    "genus": 0,
    "c_tau": 1,
    "q_tau": 0,
    "hint": "special_plane",
    "ends": [{"orbit": {"name": "e0", "kind": "elliptic", "rotation": [-2, 2, 1, 2], "action": 12.566},
              "multiplicity": 1, "side": "negative"}]
  })");
  const auto comp = component_from_json(doc, nullptr, {});
  CHECK(comp.hint == KindHint::special_plane);
  CHECK(comp.ends.size() == 1);
  CHECK(comp.ends[0].orbit.rotation == Surd(-2, 1, 2));
  const Json out = component_to_json(comp);
  const auto again = component_from_json(out, nullptr, {});
  CHECK(component_to_json(again).dump() == out.dump());

  // orbit references resolve against a catalog
  const auto cat = bourgeois_split(FormProfile::taubes(), 10.0, 1e-3);
  Json ref_doc = Json::parse(R"({
    "id": "plane2", "c_tau": 1, "q_tau": 0, "hint": "special_plane",
    "ends": [{"orbit_ref": "e@pole0#0", "multiplicity": 1, "side": "negative"}]
  })");
  const auto comp2 = component_from_json(ref_doc, &cat, {});
  CHECK(comp2.ends[0].orbit.kind == OrbitKind::elliptic);
  CHECK(comp2.ends[0].orbit.rotation == Surd(-2, 1, 2));
  ref_doc["ends"][0]["orbit_ref"] = "missing";
  CHECK_THROWS_AS(component_from_json(ref_doc, &cat, {}), std::invalid_argument);
}

TEST_CASE("generator and manifold documents") {
  OrbitCatalog cat;
  cat.cutoff = 3.0;
  ReebOrbit o;
  o.name = "e";
  o.kind = OrbitKind::elliptic;
  o.rotation = Surd::rational(1, 8);
  o.action = o.action_lo = o.action_hi = 1.0;
  o.homology_class = 0;
  cat.orbits = {o};
  const auto out = enumerate_generators(cat, 0, 3.0);
  const auto dims = filtered_dimensions(cat, 0, 3.0);
  const Json j = generators_to_json(out, dims);
  CHECK(j["generators"].size() == 3);  // m = 0, 1, 2
  CHECK(j["dimensions"]["even"] == 3);

  ManifoldSummary m;
  m.euler = 3;
  m.signature = 1;
  m.b2_plus = 1;
  m.n_untwisted = 2;
  m.spin_c.push_back({"s0", 9});
  const auto back = manifold_from_json(manifold_to_json(m));
  CHECK(back.euler == 3);
  CHECK(back.spin_c.size() == 1);
  CHECK(back.spin_c[0].c1_squared == 9);
}

TEST_CASE("reports are byte-stable") {
  const auto once = catalog_to_json(bourgeois_split(FormProfile::taubes(), 10.0, 1e-2)).dump(2);
  const auto twice = catalog_to_json(bourgeois_split(FormProfile::taubes(), 10.0, 1e-2)).dump(2);
  CHECK(once == twice);
}
