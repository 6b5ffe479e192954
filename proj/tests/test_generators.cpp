#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "echreeb/generators.hpp"
#include "echreeb/manifold.hpp"

using namespace echreeb;

namespace {

ReebOrbit orbit(const std::string& name, OrbitKind kind, double action, long long cls,
                double rotation = 0.1) {
  ReebOrbit o;
  o.name = name;
  o.kind = kind;
  if (kind == OrbitKind::elliptic) o.rotation = Surd::from_double(rotation);
  o.action = o.action_lo = o.action_hi = action;
  o.homology_class = cls;
  return o;
}

std::string key(const OrbitSetGenerator& g) {
  std::ostringstream os;
  for (const auto& p : g.pairs) os << p.orbit << ':' << p.multiplicity << ';';
  return os.str();
}

OrbitCatalog three_orbit_catalog() {
  OrbitCatalog cat;
  cat.cutoff = 3.0;
  cat.orbits = {orbit("e", OrbitKind::elliptic, 1.0, 1),
                orbit("h", OrbitKind::positive_hyperbolic, 1.2, 1),
                orbit("e0", OrbitKind::elliptic, 0.5, 0)};
  return cat;
}

}  // namespace

TEST_CASE("small cutoffs leave only the empty set") {
  OrbitCatalog cat;
  cat.cutoff = 0.25;
  cat.orbits = {orbit("e", OrbitKind::elliptic, 1.0, 1)};
  const auto out = enumerate_generators(cat, 0, 0.25);
  REQUIRE(out.generators.size() == 1);
  CHECK(out.generators[0].pairs.empty());
  CHECK(out.generators[0].total_class == 0);
  CHECK(out.generators[0].parity == 0);
  CHECK(enumerate_generators(cat, 1, 0.25).generators.empty());
}

TEST_CASE("hand-checked three-orbit catalog") {
  const auto out = enumerate_generators(three_orbit_catalog(), 1, 3.0);
  std::set<std::string> got;
  for (const auto& g : out.generators) got.insert(key(g));
  // class-1 sets below action 3: {e}, {h}, {e,e0^m} m<=3, {h,e0^m} m<=3
  const std::set<std::string> expected = {
      "e:1;",       "h:1;",       "e:1;e0:1;", "e:1;e0:2;", "e:1;e0:3;",
      "e0:1;h:1;",  "e0:2;h:1;",  "e0:3;h:1;"};
  CHECK(got == expected);
  for (const auto& g : out.generators) {
    CHECK(g.total_class == 1);
    CHECK(g.action_hi < 3.0);
  }
}

TEST_CASE("admissibility excludes repeated hyperbolic orbits") {
  const auto out = enumerate_generators(three_orbit_catalog(), 2, 3.0);
  for (const auto& g : out.generators)
    for (const auto& p : g.pairs)
      if (p.orbit == "h") CHECK(p.multiplicity == 1);
}

TEST_CASE("filtration is monotone and partitions by class") {
  const auto cat = three_orbit_catalog();
  std::size_t prev = 0;
  for (double L : {1.0, 2.0, 3.0, 4.0}) {
    const auto out = enumerate_generators(cat, 1, L);
    CHECK(out.generators.size() >= prev);
    prev = out.generators.size();
  }
  // partition: every admissible set below L appears for exactly one class
  std::size_t total = 0;
  for (long long cls = -8; cls <= 8; ++cls)
    total += enumerate_generators(cat, cls, 4.0).generators.size();
  // full enumeration with unconstrained class, via brute force over the caps
  std::size_t full = 0;
  for (long long me = 0; me <= 4; ++me)
    for (long long mh = 0; mh <= 1; ++mh)
      for (long long m0 = 0; m0 <= 8; ++m0)
        if (me * 1.0 + mh * 1.2 + m0 * 0.5 < 4.0) ++full;
  CHECK(total == full);
}

TEST_CASE("interval actions split included and borderline sets") {
  OrbitCatalog cat;
  cat.cutoff = 2.0;
  ReebOrbit o = orbit("e", OrbitKind::elliptic, 1.0, 0);
  o.action_lo = 0.9375;  // dyadic interval [0.9375, 1.0625]
  o.action_hi = 1.0625;
  cat.orbits = {o};
  const auto out = enumerate_generators(cat, 0, 2.0);
  // m=0 (empty) and m=1 (hi 1.0625 < 2) included; m=2 has lo 1.875 < 2 <= hi 2.125
  CHECK(out.generators.size() == 2);
  REQUIRE(out.borderline.size() == 1);
  CHECK(out.borderline[0].pairs[0].multiplicity == 2);
}

TEST_CASE("rho gate") {
  EnumerationOptions opts;
  opts.rho = 2.0;
  const auto out = enumerate_generators(three_orbit_catalog(), 0, 3.0, opts);
  for (const auto& g : out.generators) CHECK(g.action_hi <= 2.0);
  // {e0, e0, e0, e0} has action 2.0 exactly: kept by the non-strict gate
  bool found_boundary = false;
  for (const auto& g : out.generators)
    if (key(g) == "e0:4;") found_boundary = true;
  CHECK(found_boundary);
}

TEST_CASE("grading parity") {
  OrbitSetGenerator empty;
  CHECK(grading_parity(empty) == 0);
  const auto out = enumerate_generators(three_orbit_catalog(), 1, 3.0);
  for (const auto& g : out.generators) {
    bool has_h = false;
    for (const auto& p : g.pairs) has_h |= (p.orbit == "h");
    CHECK(g.parity == (has_h ? 1 : 0));
  }
  const auto dims = filtered_dimensions(three_orbit_catalog(), 1, 3.0);
  CHECK(dims.even_count == 4);
  CHECK(dims.odd_count == 4);
  CHECK(filtered_dimensions(three_orbit_catalog(), 5, 3.0).even_count == 0);
}

TEST_CASE("count cap guards runaway enumerations") {
  OrbitCatalog cat;
  cat.orbits = {orbit("e", OrbitKind::elliptic, 0.001, 0)};
  EnumerationOptions opts;
  opts.count_cap = 100;
  CHECK_THROWS_AS(enumerate_generators(cat, 0, 8.0, opts), std::runtime_error);
}

TEST_CASE("epsilon sign basics") {
  SignedComponent single{"c0", 0, {}, {}, std::nullopt, true};
  CHECK(epsilon_sign({single}, {}, {}) == 1);

  SignedComponent a{"a", 1, {"h1"}, {"l1"}, std::nullopt, false};
  SignedComponent b{"b", 1, {"h2"}, {"l2"}, std::nullopt, false};
  const std::vector<std::string> ref_h = {"h1", "h2"}, ref_l = {"l1", "l2"};
  CHECK(epsilon_sign({a, b}, ref_h, ref_l) == epsilon_sign({b, a}, ref_h, ref_l));

  SignedComponent bad{"bad", 0, {"h1"}, {}, std::nullopt, false};
  CHECK_THROWS_AS(epsilon_sign({bad}, {"h1"}, {}), std::invalid_argument);
}

TEST_CASE("total weights") {
  SignedComponent plane{"p", 0, {}, {}, std::nullopt, true};
  CHECK(total_weight({plane}, {}, {}) == 1);

  SignedComponent sphere{"E", 0, {}, {}, std::nullopt, true};
  CHECK(total_weight({sphere, plane}, {}, {}) == 1);

  SignedComponent torus{"T", 0, {}, {}, 2, false};
  CHECK(total_weight({torus}, {}, {}) == 2);
  SignedComponent torus_neg{"T2", 0, {}, {}, -3, false};
  CHECK(total_weight({torus, torus_neg}, {}, {}) == -6);

  SignedComponent unresolved{"g", 0, {}, {}, std::nullopt, false};
  CHECK_THROWS_AS(total_weight({unresolved}, {}, {}), std::runtime_error);
}

TEST_CASE("tensor ordering signs") {
  CHECK(tensor_ordering_sign({0}, {1}) == 1);
  CHECK(tensor_ordering_sign({1, 0}, {1, 1}) == -1);
  CHECK(tensor_ordering_sign({1, 0}, {0, 1}) == 1);
  CHECK(tensor_ordering_sign({2, 1, 0}, {1, 0, 1}) == -1);
  // all even factors: every ordering gives +1
  std::vector<int> perm = {0, 1, 2, 3};
  do {
    CHECK(tensor_ordering_sign(perm, {0, 0, 0, 0}) == 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK_THROWS_AS(tensor_ordering_sign({0, 0}, {1, 1}), std::invalid_argument);
}

TEST_CASE("manifold bookkeeping") {
  CHECK(spin_c_dimension(3, 1, 9) == 0);
  CHECK(spin_c_dimension(4, 0, 8) == 0);
  CHECK_THROWS_AS(spin_c_dimension(3, 1, 8), std::domain_error);
  CHECK(closed_case_index(1, -1) == 0);
  // closed-case correspondence: twisting the canonical structure by A gives
  // c1^2 = (2 chi + 3 sigma) + 4 c1.A + 4 A.A, so the dimension is c1.A + A.A
  std::mt19937_64 rng_closed(99);
  for (int trial = 0; trial < 50; ++trial) {
    const long long chi = static_cast<long long>(rng_closed() % 9) - 4;
    const long long sigma = static_cast<long long>(rng_closed() % 9) - 4;
    const long long a = static_cast<long long>(rng_closed() % 9) - 4;
    const long long b = static_cast<long long>(rng_closed() % 9) - 4;
    CHECK(closed_case_index(a, b) ==
          spin_c_dimension(chi, sigma, 2 * chi + 3 * sigma + 4 * a + 4 * b));
  }

  CHECK(gate_check({}) == GateResult::proceed);
  CHECK(gate_check({-1, 0, 3}) == GateResult::proceed);
  CHECK(gate_check({0, -2}) == GateResult::vanish);

  ManifoldSummary s;
  s.b1 = 0;
  s.b2_plus = 1;
  s.n_untwisted = 2;
  const auto audit = parity_audit(s, 4, 2);
  CHECK(audit.untwisted_parity_ok);
  CHECK(audit.grading_parity == 0);
  CHECK(audit.i_minus_p_even);
  CHECK(audit.pass);
  s.n_untwisted = 1;
  CHECK(!parity_audit(s, 4, 2).untwisted_parity_ok);
  CHECK(!parity_audit(s, 3, 2).i_minus_p_even);
}

TEST_CASE("random catalogs agree with a brute-force enumerator") {
  std::mt19937_64 rng(0xfeedbeefULL);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    OrbitCatalog cat;
    std::vector<long long> nums;
    for (int i = 0; i < n; ++i) {
      const long long num = 8 + static_cast<long long>(rng() % 40);  // action num/8 in [1,6)
      const int kd = static_cast<int>(rng() % 2);
      cat.orbits.push_back(orbit("o" + std::to_string(i),
                                 kd ? OrbitKind::elliptic : OrbitKind::positive_hyperbolic,
                                 static_cast<double>(num) / 8.0,
                                 static_cast<long long>(rng() % 3) - 1));
      nums.push_back(num);
    }
    const long long gamma = static_cast<long long>(rng() % 3) - 1;
    const long long L_num = 16 + static_cast<long long>(rng() % 33);
    const double L = static_cast<double>(L_num) / 8.0;

    std::set<std::string> got;
    for (const auto& g : enumerate_generators(cat, gamma, L).generators) got.insert(key(g));

    std::set<std::string> expected;
    std::vector<long long> caps(n), mult(n, 0);
    for (int i = 0; i < n; ++i) {
      long long cap = 0;
      while ((cap + 1) * nums[i] < L_num) ++cap;
      if (cat.orbits[i].kind != OrbitKind::elliptic) cap = std::min<long long>(cap, 1);
      caps[i] = cap;
    }
    while (true) {
      long long total = 0, cls = 0;
      for (int i = 0; i < n; ++i) {
        total += mult[i] * nums[i];
        cls += mult[i] * cat.orbits[i].homology_class;
      }
      if (total < L_num && cls == gamma) {
        std::ostringstream os;
        for (int i = 0; i < n; ++i)
          if (mult[i] > 0) os << cat.orbits[i].name << ':' << mult[i] << ';';
        expected.insert(os.str());
      }
      int i = 0;
      while (i < n && ++mult[i] > caps[i]) mult[i++] = 0;
      if (i == n) break;
    }
    CHECK(got == expected);
  }
}
