#include "echreeb/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "echreeb/flow.hpp"
#include "echreeb/generators.hpp"
#include "echreeb/index.hpp"
#include "echreeb/manifold.hpp"
#include "echreeb/perturb.hpp"

namespace echreeb {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "FAILED: " << what << "; ";
    }
  }
};

Surd expected_base_rotation() { return Surd(-2, 1, 2); }  // sqrt6/2 - 1

// --- criterion 1 ---------------------------------------------------------
CriterionResult criterion_rotation() {
  Check c;
  const auto profile = FormProfile::taubes();
  const Surd expected = expected_base_rotation();
  c.expect(expected == Surd(0, 1, 2).mod1(), "surd normalization of sqrt(3/2) mod 1");
  for (Pole p : {Pole::north, Pole::south}) {
    const auto exc = exceptional_rotation(profile, p);
    c.expect(exc.rotation == expected, "exact rotation class at a pole");
    const auto rep = linearized_return_pole(profile, p);
    c.expect(rep.classification == OrbitClass::elliptic, "pole orbit classified elliptic");
    c.expect(std::abs(rep.rotation - expected.to_double()) <= 1e-5,
             "oracle rotation within 1e-5");
  }
  c.log << "rotation=" << expected.str() << "=" << expected.to_double();
  return {1, "exceptional-orbit rotation class, exact and by oracle", c.ok, c.log.str(), 0};
}

// --- criterion 2 ---------------------------------------------------------
CriterionResult criterion_modifier_roundtrip() {
  Check c;
  const Surd c2 = Surd(2);
  for (const Surd& eps : {Surd::rational(1, 10), Surd::rational(1, 4)}) {
    FormProfile profile(taubes_modifier(eps, c2));
    for (Pole p : {Pole::north, Pole::south})
      c.expect(exceptional_rotation(profile, p).rotation == eps,
               "pole rotation equals eps exactly (eps=" + eps.str() + ")");
  }
  const auto zero = taubes_modifier(Surd(0, 1, 2), Surd(0));
  c.expect(zero.is_zero(), "modifier vanishes at eps=sqrt(3/2), c=0");

  const std::vector<FormProfile> profiles = {
      FormProfile::taubes(), FormProfile(taubes_modifier(Surd::rational(1, 10), c2)),
      FormProfile(taubes_modifier(Surd::rational(1, 4), c2))};
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& pr : profiles) {
    const auto mb = morse_bott_catalog(pr, 10.0, 10000);
    const auto tech = technical_condition_check(pr, mb.families);
    c.expect(tech.pass, "second-derivative condition at all catalog angles");
    for (const auto& e : tech.entries) worst = std::max(worst, e.margin);
  }
  c.log << "worst margin " << worst;
  return {2, "modifier round trip and second-derivative condition", c.ok, c.log.str(), 0};
}

// --- criterion 3 ---------------------------------------------------------
CriterionResult criterion_plane_table(double rotation_shift) {
  Check c;
  Surd rot = expected_base_rotation();
  if (rotation_shift != 0.0) rot = (rot + Surd::from_double(rotation_shift)).mod1();
  const auto plane = make_special_plane(elliptic_orbit("e0", rot, 4.0 * kPi));
  const std::vector<long long> expected = {0, 0, 0, 0, -2, -4};
  std::ostringstream table;
  long long first_negative = 0;
  for (long long d = 1; d <= 6; ++d) {
    const long long I = ech_index(plane, d);
    table << I << (d < 6 ? "," : "");
    c.expect(I == expected[d - 1], "index of the d-fold plane cover, d=" + std::to_string(d));
    if (first_negative == 0 && I < 0) first_negative = d;
  }
  c.expect(first_negative == 5, "negativity threshold at d=5");
  c.log << "I(dC)=[" << table.str() << "]";
  return {3, "multiple-cover index table for the special plane", c.ok, c.log.str(), 0};
}

// --- criterion 4 ---------------------------------------------------------
CriterionResult criterion_sphere_and_quotient_plane() {
  Check c;
  const auto sphere = make_exceptional_sphere();
  const auto nh_plane = make_negative_hyperbolic_plane(negative_hyperbolic_orbit("n0", 1.0));
  for (long long d = 1; d <= 6; ++d) {
    c.expect(ech_index(sphere, d) == -d * (d - 1),
             "sphere index -d(d-1) at d=" + std::to_string(d));
    c.expect(2 * ech_index(nh_plane, d) == -d * (d - 1),
             "negative-hyperbolic plane index -d(d-1)/2 at d=" + std::to_string(d));
  }
  return {4, "exceptional-sphere and negative-hyperbolic plane index tables", c.ok, "", 0};
}

// --- criterion 5 ---------------------------------------------------------
CriterionResult criterion_family_catalog() {
  Check c;
  const auto profile = FormProfile::taubes();
  const auto mb = morse_bott_catalog(profile, 10.0, 10000);

  const MorseBottFamily* equator = nullptr;
  std::vector<const MorseBottFamily*> contractible;
  for (const auto& f : mb.families) {
    if (std::abs(f.theta0 - 0.5 * kPi) < 1e-9) equator = &f;
    if (f.contractible) contractible.push_back(&f);
  }
  c.expect(equator != nullptr, "equator family present");
  if (equator) {
    c.expect(equator->winding_t == -1 && equator->winding_phi == 0, "equator winding (-1,0)");
    c.expect(equator->homology_class == 1, "equator class +1");
    c.expect(std::abs(equator->action - 2.0 * kPi) <= 1e-9, "equator action 2*pi");
  }
  c.expect(contractible.size() == 2, "two contractible families");
  const double contractible_action = 4.0 * std::sqrt(2.0) * kPi / 3.0;
  for (const auto* f : contractible) {
    c.expect(f->homology_class == 0, "contractible class 0");
    c.expect(std::abs(f->action - contractible_action) <= 1e-9, "contractible action 4*sqrt2*pi/3");
    c.expect(std::abs(std::abs(std::cos(f->theta0)) - 1.0 / std::sqrt(3.0)) <= 1e-9,
             "contractible angle at |cos| = 1/sqrt3");
  }
  double worst = 0.0;
  for (const auto& f : mb.families) {
    const double err = std::abs(measure_period(profile, f) - f.action);
    worst = std::max(worst, err);
    c.expect(err <= 1e-6, "numeric period within 1e-6 of the closed form");
  }
  for (Pole p : {Pole::north, Pole::south}) {
    const double err = std::abs(measure_pole_period(profile, p) - 4.0 * kPi);
    worst = std::max(worst, err);
    c.expect(err <= 1e-6, "pole period within 1e-6 of 4*pi");
  }
  c.log << mb.families.size() << " families below 10, worst period error " << worst;
  return {5, "torus-family catalog with the period oracle", c.ok, c.log.str(), 0};
}

// --- criterion 6 ---------------------------------------------------------
CriterionResult criterion_equator_return_map() {
  Check c;
  const auto profile = FormProfile::taubes();
  const auto mb = morse_bott_catalog(profile, 7.0, 10000);
  const MorseBottFamily* equator = nullptr;
  for (const auto& f : mb.families)
    if (std::abs(f.theta0 - 0.5 * kPi) < 1e-9) equator = &f;
  c.expect(equator != nullptr, "equator family present");
  if (equator) {
    const auto rep = linearized_return(profile, *equator);
    c.expect(rep.classification == OrbitClass::degenerate_shear, "shear classification");
    c.expect(rep.det_error <= 1e-6, "unit determinant");
    const double expected = 2.0 * kPi * std::sqrt(6.0);
    c.expect(std::abs(rep.shear - expected) <= 1e-4, "shear entry 2*pi*sqrt6 within 1e-4");
    c.log << "shear=" << rep.shear << " expected=" << expected;
  }
  return {6, "equator linearized return map", c.ok, c.log.str(), 0};
}

// --- criterion 7 ---------------------------------------------------------
CriterionResult criterion_split_catalogs() {
  Check c;
  const double L = 10.0;
  const std::vector<FormProfile> profiles = {
      FormProfile::taubes(), FormProfile(taubes_modifier(Surd::rational(1, 32), Surd(2))),
      FormProfile(taubes_modifier(Surd::rational(1, 16), Surd::rational(3, 2)))};
  for (const auto& pr : profiles) {
    const auto families = morse_bott_catalog(pr, L, 10000).families;
    for (double delta : {1e-2, 1e-3}) {
      const auto cat = bourgeois_split(pr, L, delta);
      std::multiset<long long> family_angles, split_angles;
      for (const auto& f : families)
        family_angles.insert(static_cast<long long>(std::llround(f.theta0 * 1e9)));
      long long h_count = 0, e_count = 0;
      for (const auto& o : cat.orbits) {
        if (o.kind == OrbitKind::elliptic) {
          c.expect(o.l_positive != LPositivity::not_positive,
                   "elliptic orbit " + o.name + " is L-positive (or above the cutoff)");
          if (!o.exceptional)
            c.expect(o.l_positive == LPositivity::positive,
                     "split elliptic orbit " + o.name + " strictly L-positive");
        }
        if (o.exceptional) {
          c.expect(o.action_lo == o.action && o.action_hi == o.action,
                   "exceptional action is a point value");
          continue;
        }
        c.expect(o.action_lo <= o.action && o.action <= o.action_hi,
                 "nominal action inside the declared interval");
        c.expect(std::abs((o.action_hi - o.action_lo) - delta) <= 1e-12,
                 "interval width equals delta");
        split_angles.insert(static_cast<long long>(std::llround(*o.from_angle * 1e9)));
        if (o.kind == OrbitKind::positive_hyperbolic) ++h_count;
        if (o.kind == OrbitKind::elliptic) ++e_count;
        bool matches_family = false;
        for (const auto& f : families)
          if (std::abs(f.theta0 - *o.from_angle) < 1e-9 && std::abs(f.action - o.action_hi) < 1e-12)
            matches_family = true;
        c.expect(matches_family, "interval upper end equals the family action");
      }
      c.expect(h_count == static_cast<long long>(families.size()) &&
                   e_count == static_cast<long long>(families.size()),
               "one hyperbolic and one elliptic orbit per family");
      // Completeness: the split angles, with multiplicity 2 per family, cover
      // exactly the independent family list.
      std::multiset<long long> doubled;
      for (long long a : family_angles) {
        doubled.insert(a);
        doubled.insert(a);
      }
      c.expect(split_angles == doubled, "no family below the cutoff is missing");
    }
  }
  return {7, "split-catalog properties over three profiles", c.ok, c.log.str(), 0};
}

// --- criterion 8 ---------------------------------------------------------
// Independent enumerator: odometer over per-orbit multiplicities with exact
// scaled-integer arithmetic (denominators are powers of two).
std::set<std::string> brute_force_generators(const std::vector<ReebOrbit>& orbits,
                                             long long total_class, long long L_num,
                                             long long denom,
                                             const std::vector<long long>& action_nums) {
  std::set<std::string> out;
  const std::size_t n = orbits.size();
  std::vector<long long> caps(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long cap = 0;
    while ((cap + 1) * action_nums[i] < L_num) ++cap;
    if (orbits[i].kind != OrbitKind::elliptic) cap = std::min<long long>(cap, 1);
    caps[i] = cap;
  }
  std::vector<long long> mult(n, 0);
  while (true) {
    long long total = 0, cls = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total += mult[i] * action_nums[i];
      cls += mult[i] * orbits[i].homology_class;
    }
    if (total < L_num && cls == total_class) {
      std::ostringstream os;
      for (std::size_t i = 0; i < n; ++i)
        if (mult[i] > 0) os << orbits[i].name << ':' << mult[i] << ';';
      out.insert(os.str());
    }
    std::size_t i = 0;
    while (i < n) {
      if (++mult[i] <= caps[i]) break;
      mult[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  (void)denom;
  return out;
}

CriterionResult criterion_enumeration_oracle() {
  Check c;
  std::mt19937_64 rng(0x5eed0801ULL);
  const long long denom = 8;
  long long total_generators = 0;
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<ReebOrbit> orbits;
    std::vector<long long> action_nums;
    for (int i = 0; i < n; ++i) {
      ReebOrbit o;
      o.name = "o" + std::to_string(i);
      const int kind_draw = static_cast<int>(rng() % 10);
      o.kind = kind_draw < 5   ? OrbitKind::elliptic
               : kind_draw < 8 ? OrbitKind::positive_hyperbolic
                               : OrbitKind::negative_hyperbolic;
      if (o.kind == OrbitKind::elliptic)
        o.rotation = Surd::rational(1 + static_cast<long long>(rng() % 30), 32);
      // action = k/8 with k in [8, 31]: exact in binary floating point
      const long long num = 8 + static_cast<long long>(rng() % 24);
      o.action = o.action_lo = o.action_hi = static_cast<double>(num) / 8.0;
      o.homology_class = static_cast<long long>(rng() % 5) - 2;
      orbits.push_back(o);
      action_nums.push_back(num);
    }
    const long long gamma = static_cast<long long>(rng() % 5) - 2;
    const long long L_num = 32 + static_cast<long long>(rng() % 33);  // L in [4,8], eighths
    const double L = static_cast<double>(L_num) / 8.0;

    OrbitCatalog cat;
    cat.cutoff = L;
    cat.orbits = orbits;
    const auto enumerated = enumerate_generators(cat, gamma, L);
    c.expect(enumerated.borderline.empty(), "no borderline generators for point actions");

    std::set<std::string> got;
    for (const auto& g : enumerated.generators) {
      std::ostringstream os;
      for (const auto& p : g.pairs) os << p.orbit << ':' << p.multiplicity << ';';
      got.insert(os.str());
    }
    const auto expected = brute_force_generators(orbits, gamma, L_num, denom, action_nums);
    c.expect(got == expected, "set equality with the brute-force enumerator, trial " +
                                  std::to_string(trial));
    total_generators += static_cast<long long>(expected.size());
  }
  c.log << "200 catalogs, " << total_generators << " generators matched";
  return {8, "generator enumeration against brute force", c.ok, c.log.str(), 0};
}

// --- criterion 9 ---------------------------------------------------------
void partitions_of(long long d, std::vector<std::vector<long long>>& out) {
  std::vector<long long> cur;
  std::function<void(long long, long long)> rec = [&](long long rest, long long max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (long long part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(d, d);
}

CriterionResult criterion_super_rigidity() {
  Check c;
  const auto orbit = elliptic_orbit("e", Surd::rational(1, 32), 1.0);
  const auto plane = make_special_plane(orbit);
  long long combos = 0;
  for (long long d = 1; d <= 10 && c.ok; ++d) {
    std::vector<std::vector<long long>> parts;
    partitions_of(d, parts);
    for (long long g = 0; g <= 5 && c.ok; ++g) {
      for (const auto& part : parts) {
        const auto cover = plane_cover(plane, d, g, part);
        const auto cert = super_rigidity_certificate(cover);
        c.expect(cert.status == CertStatus::granted,
                 "certificate granted for d=" + std::to_string(d) + " g=" + std::to_string(g));
        c.expect(cert.margin == -2 * static_cast<long long>(part.size()),
                 "margin equals -2 x (cover ends)");
        ++combos;
      }
    }
  }
  const auto torus_cert = auto_transversality(make_special_torus());
  c.expect(torus_cert.status == CertStatus::not_granted, "special torus stays uncertified");
  c.log << combos << " cover combinatorics certified; torus uncertified";
  return {9, "super-rigidity certificates for plane covers", c.ok, c.log.str(), 0};
}

// --- criterion 10 --------------------------------------------------------
CriterionResult criterion_signs() {
  Check c;
  std::mt19937_64 rng(0x5eed1001ULL);
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<SignedComponent> comps(n);
    std::vector<std::string> all_h, all_l;
    int hid = 0, lid = 0;
    for (int i = 0; i < n; ++i) {
      comps[i].id = "c" + std::to_string(i);
      const int parity = static_cast<int>(rng() % 2);
      comps[i].fredholm_index = parity + 2 * static_cast<long long>(rng() % 3);
      const int nh = parity + 2 * static_cast<int>(rng() % 2);
      const int nl = parity + 2 * static_cast<int>(rng() % 2);
      for (int k = 0; k < nh; ++k) comps[i].hyperbolic_ends.push_back("h" + std::to_string(hid++));
      for (int k = 0; k < nl; ++k) comps[i].loops.push_back("l" + std::to_string(lid++));
      all_h.insert(all_h.end(), comps[i].hyperbolic_ends.begin(), comps[i].hyperbolic_ends.end());
      all_l.insert(all_l.end(), comps[i].loops.begin(), comps[i].loops.end());
    }
    std::shuffle(all_h.begin(), all_h.end(), rng);
    std::shuffle(all_l.begin(), all_l.end(), rng);
    const int reference_sign = epsilon_sign(comps, all_h, all_l);
    auto shuffled = comps;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    c.expect(epsilon_sign(shuffled, all_h, all_l) == reference_sign,
             "sign invariant under component reordering, trial " + std::to_string(trial));
  }

  // Tensor reordering: exhaustive over <= 4 components. Reference check via
  // adjacent bubble swaps, flipping exactly on odd-odd adjacent swaps.
  for (int n = 1; n <= 4 && c.ok; ++n) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> parities(n);
      for (int i = 0; i < n; ++i) parities[i] = (mask >> i) & 1;
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      do {
        const int got = tensor_ordering_sign(perm, parities);
        std::vector<int> work = perm;
        int expected = 1;
        for (std::size_t i = 0; i < work.size(); ++i)
          for (std::size_t j = 0; j + 1 < work.size() - i; ++j)
            if (work[j] > work[j + 1]) {
              if (parities[work[j]] && parities[work[j + 1]]) expected = -expected;
              std::swap(work[j], work[j + 1]);
            }
        c.expect(got == expected, "bubble-sort recomputation agrees");
        for (int i = 0; i + 1 < n; ++i) {
          auto swapped = perm;
          std::swap(swapped[i], swapped[i + 1]);
          const int flip = tensor_ordering_sign(swapped, parities);
          if (parities[perm[i]] && parities[perm[i + 1]]) {
            c.expect(flip == -got, "adjacent swap of two odd factors flips the sign");
          } else {
            c.expect(flip == got, "adjacent swap involving an even factor keeps the sign");
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return {10, "sign machinery invariance and tensor reordering", c.ok, "", 0};
}

// --- criterion 11 --------------------------------------------------------
CriterionResult criterion_parity() {
  Check c;
  ManifoldSummary s;
  s.b1 = 0;
  s.b2_plus = 1;
  s.n_untwisted = 2;
  c.expect(parity_audit(s, 0).untwisted_parity_ok, "untwisted-circle parity accepts 2");
  s.n_untwisted = 1;
  c.expect(!parity_audit(s, 0).untwisted_parity_ok, "untwisted-circle parity rejects 1");
  c.expect(parity_audit(s, 4, 2).i_minus_p_even, "I - p even accepted");
  c.expect(!parity_audit(s, 3, 2).i_minus_p_even, "I - p odd rejected");

  std::mt19937_64 rng(0x5eed1101ULL);
  for (int trial = 0; trial < 200; ++trial) {
    ManifoldSummary m;
    m.b1 = static_cast<long long>(rng() % 4);
    m.b2_plus = 1 + static_cast<long long>(rng() % 4);
    const long long parity = ((1 - m.b1 + m.b2_plus) % 2 + 2) % 2;
    m.n_untwisted = parity + 2 * static_cast<long long>(rng() % 4);
    c.expect(parity_audit(m, 0).untwisted_parity_ok, "constructed-consistent summary passes");
    m.n_untwisted += 1;
    c.expect(!parity_audit(m, 0).untwisted_parity_ok, "constructed-inconsistent summary fails");
  }

  const auto hyp = positive_hyperbolic_orbit("h");
  long long odd_seen = 0;
  for (int trial = 0; trial < 1000000; ++trial) {
    Surd rot;
    const int shape = static_cast<int>(rng() % 3);
    if (shape == 0) {
      const long long den = 2 + static_cast<long long>(rng() % 1000000);
      const long long num = 1 + static_cast<long long>(rng() % (den - 1));
      rot = Surd::rational(num, den);
    } else if (shape == 1) {
      const double x = std::ldexp(static_cast<double>(1 + (rng() % ((1ULL << 52) - 2))), -52);
      rot = Surd::from_double(x);
    } else {
      const long long a = static_cast<long long>(rng() % 200) - 100;
      const long long b = 1 + static_cast<long long>(rng() % 100);
      const long long r = 1 + static_cast<long long>(rng() % 100);
      rot = Surd(a, b, r).mod1();
      if (rot.is_zero()) rot = Surd::rational(1, 2);
    }
    const long long m = 1 + static_cast<long long>(rng() % 1000);
    const auto orbit = elliptic_orbit("e", rot);
    const long long v = cz(orbit, m);
    if (v % 2 == 0) {
      c.expect(false, "elliptic index parity");
      break;
    }
    ++odd_seen;
    if (cz(hyp, m) != 0) {
      c.expect(false, "positive hyperbolic index vanishes");
      break;
    }
    // Exact floor against the floating floor away from integer thresholds.
    const double approx = static_cast<double>(m) * rot.to_double();
    if (std::abs(approx - std::round(approx)) > 1e-9) {
      if ((v - 1) / 2 != static_cast<long long>(std::floor(approx))) {
        c.expect(false, "exact floor agrees with the floating floor");
        break;
      }
    }
  }
  c.log << odd_seen << " random elliptic indices, all odd";
  return {11, "parity audits and Conley-Zehnder parity", c.ok, c.log.str(), 0};
}

// --- criterion 12 --------------------------------------------------------
CurrentDecomposition random_clean_decomposition(std::mt19937_64& rng) {
  CurrentDecomposition cur;
  const int ncomp = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < ncomp; ++k) {
    CoveredComponent cc;
    const int shape = static_cast<int>(rng() % 3);
    if (shape == 0) {
      cc.curve = make_special_plane(
          elliptic_orbit("e" + std::to_string(k), Surd::rational(1, 64), 1.0), "p" + std::to_string(k));
      cc.multiplicity = 1 + static_cast<long long>(rng() % 3);
    } else if (shape == 1) {
      cc.curve = make_special_torus("t" + std::to_string(k));
      cc.multiplicity = 1 + static_cast<long long>(rng() % 3);
    } else {
      // embedded component with positive index: closed, genus 0, ind = 2l
      cc.curve.id = "g" + std::to_string(k);
      const long long l = static_cast<long long>(rng() % 3);
      cc.curve.c_tau = 1 + l;
      cc.curve.q_tau = l;  // keeps C.C = (1/2)(-2 + ind) + ... manageable
      cc.multiplicity = 1;
    }
    cur.components.push_back(cc);
  }
  const int nexc = static_cast<int>(rng() % 3);
  for (int s = 0; s < nexc; ++s)
    cur.exceptional.push_back({"E" + std::to_string(s), 1});
  cur.cc_cross.assign(cur.components.size(), std::vector<long long>(cur.components.size(), 0));
  cur.ee_cross.assign(cur.exceptional.size(), std::vector<long long>(cur.exceptional.size(), 0));
  cur.ec_cross.assign(cur.exceptional.size(),
                      std::vector<long long>(cur.components.size(), 0));
  cur.e_dot_a.assign(cur.exceptional.size(), 0);
  for (auto& v : cur.e_dot_a) v = static_cast<long long>(rng() % 3) - 1;  // >= -1
  return cur;
}

CriterionResult criterion_current_bound() {
  Check c;
  std::mt19937_64 rng(0x5eed1201ULL);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    auto cur = random_clean_decomposition(rng);
    // Multiple covers only on vanishing self-intersection components.
    for (auto& comp : cur.components)
      if (comp.multiplicity > 1 &&
          !(self_intersection(comp.curve, 10.0) == Rational{0, 1}))
        comp.multiplicity = 1;
    const auto diag = current_index_bound(cur, 10.0);
    c.expect(diag.structural_equality, "clean decomposition attains the structural equality");
    c.expect(diag.violations.empty(), "no violations reported on clean data");
    c.expect(diag.rhs_simplified == diag.clean_part, "bound reduces to the weighted index sum");
    c.expect(diag.gate_ok, "pairing gate holds");
  }

  const char* kinds[4] = {"delta", "cross", "exceptional", "cover"};
  int flagged[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    auto cur = random_clean_decomposition(rng);
    const int which = trial % 4;
    if (which == 0) {
      cur.components[0].curve.delta_sing = 1 + static_cast<long long>(rng() % 2);
      const auto diag = current_index_bound(cur, 10.0);
      c.expect(!diag.deltas_zero && !diag.structural_equality, "singular count flagged");
      if (!diag.deltas_zero) ++flagged[0];
    } else if (which == 1) {
      if (cur.components.size() < 2) {
        CoveredComponent extra;
        extra.curve = make_special_torus("t-extra");
        cur.components.push_back(extra);
        cur.cc_cross.assign(cur.components.size(),
                            std::vector<long long>(cur.components.size(), 0));
        for (auto& row : cur.ec_cross) row.resize(cur.components.size(), 0);
      }
      cur.cc_cross[0][1] = cur.cc_cross[1][0] = 1;
      const auto diag = current_index_bound(cur, 10.0);
      c.expect(!diag.cross_terms_zero && !diag.structural_equality, "cross term flagged");
      if (!diag.cross_terms_zero) ++flagged[1];
    } else if (which == 2) {
      if (cur.exceptional.empty()) {
        cur.exceptional.push_back({"E0", 1});
        cur.ee_cross.assign(1, std::vector<long long>(1, 0));
        cur.ec_cross.assign(1, std::vector<long long>(cur.components.size(), 0));
        cur.e_dot_a.assign(1, 0);
      }
      cur.exceptional[0].multiplicity = 2;
      const auto diag = current_index_bound(cur, 10.0);
      c.expect(!diag.exceptional_simple && !diag.structural_equality,
               "exceptional multiplicity flagged");
      if (!diag.exceptional_simple) ++flagged[2];
    } else {
      CoveredComponent bad;
      bad.curve.id = "bad";
      bad.curve.c_tau = 3;
      bad.curve.q_tau = 2;  // closed, ind = 4, C.C = 1
      bad.multiplicity = 2;
      cur.components.push_back(bad);
      cur.cc_cross.assign(cur.components.size(),
                          std::vector<long long>(cur.components.size(), 0));
      for (auto& row : cur.ec_cross) row.resize(cur.components.size(), 0);
      const auto diag = current_index_bound(cur, 10.0);
      c.expect(!diag.covers_only_special && !diag.structural_equality,
               "multiply covered non-special component flagged");
      if (!diag.covers_only_special) ++flagged[3];
    }
  }
  c.log << "violations flagged:";
  for (int i = 0; i < 4; ++i) c.log << " " << kinds[i] << "=" << flagged[i];
  return {12, "current index-bound equality diagnostics", c.ok, c.log.str(), 0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<std::function<CriterionResult()>> suite = {
      [] { return criterion_rotation(); },
      [] { return criterion_modifier_roundtrip(); },
      [&] { return criterion_plane_table(opts.rotation_shift); },
      [] { return criterion_sphere_and_quotient_plane(); },
      [] { return criterion_family_catalog(); },
      [] { return criterion_equator_return_map(); },
      [] { return criterion_split_catalogs(); },
      [] { return criterion_enumeration_oracle(); },
      [] { return criterion_super_rigidity(); },
      [] { return criterion_signs(); },
      [] { return criterion_parity(); },
      [] { return criterion_current_bound(); },
  };
  const double budgets[12] = {5.0, 1e9, 1e9, 1e9, 30.0, 1e9, 1e9, 60.0, 1e9, 1e9, 1e9, 1e9};
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto start = Clock::now();
    CriterionResult res;
    try {
      res = suite[i]();
    } catch (const std::exception& ex) {
      res.number = static_cast<int>(i + 1);
      res.name = "criterion " + std::to_string(i + 1);
      res.pass = false;
      res.details = std::string("exception: ") + ex.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (res.seconds > budgets[i]) {
      res.pass = false;
      res.details += " [over time budget]";
    }
    results.push_back(std::move(res));
  }
  return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

void print_results(std::ostream& os, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.number << "  " << r.name;
    if (!r.details.empty()) os << "  [" << r.details << "]";
    os << "\n";
  }
}

}  // namespace echreeb
