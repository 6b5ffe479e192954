#include "echreeb/index.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace echreeb {

OrbitRef orbit_ref(const ReebOrbit& o) {
  OrbitRef r;
  r.name = o.name;
  r.kind = o.kind;
  if (o.rotation) r.rotation = o.rotation->mod1();
  r.action = o.action;
  return r;
}

void validate_component(const FormalCurveComponent& c) {
  if (c.genus < 0) throw std::invalid_argument("curve: negative genus");
  if (c.delta_sing < 0) throw std::invalid_argument("curve: negative singularity count");
  for (const auto& e : c.ends)
    if (e.multiplicity < 1) throw std::invalid_argument("curve: end multiplicity must be >= 1");
  switch (c.hint) {
    case KindHint::exceptional_sphere:
      if (!c.ends.empty() || c.genus != 0 || c.q_tau != -1)
        throw std::invalid_argument("exceptional sphere: needs no ends, genus 0, Q_tau = -1");
      break;
    case KindHint::special_plane:
      if (c.genus != 0 || c.ends.size() != 1 || c.ends[0].positive ||
          c.ends[0].multiplicity != 1 || c.ends[0].orbit.kind != OrbitKind::elliptic)
        throw std::invalid_argument(
            "special plane: needs genus 0 and one negative end of multiplicity 1 at an elliptic orbit");
      break;
    case KindHint::special_torus:
      if (c.genus != 1 || !c.ends.empty() || c.c_tau != 0 || c.q_tau != 0)
        throw std::invalid_argument("special torus: needs genus 1, no ends, c_tau = Q_tau = 0");
      break;
    default:
      break;
  }
}

FormalCurveComponent make_special_plane(const OrbitRef& orbit, std::string id) {
  FormalCurveComponent c;
  c.id = std::move(id);
  c.hint = KindHint::special_plane;
  c.c_tau = 1;
  c.q_tau = 0;
  c.ends.push_back({orbit, 1, false});
  validate_component(c);
  return c;
}

FormalCurveComponent make_special_torus(std::string id) {
  FormalCurveComponent c;
  c.id = std::move(id);
  c.hint = KindHint::special_torus;
  c.genus = 1;
  validate_component(c);
  return c;
}

FormalCurveComponent make_exceptional_sphere(std::string id) {
  FormalCurveComponent c;
  c.id = std::move(id);
  c.hint = KindHint::exceptional_sphere;
  c.c_tau = 1;
  c.q_tau = -1;
  validate_component(c);
  return c;
}

FormalCurveComponent make_negative_hyperbolic_plane(const OrbitRef& orbit, std::string id) {
  if (orbit.kind != OrbitKind::negative_hyperbolic)
    throw std::invalid_argument("make_negative_hyperbolic_plane: orbit must be negative hyperbolic");
  FormalCurveComponent c;
  c.id = std::move(id);
  c.c_tau = 1;
  c.q_tau = 0;
  c.ends.push_back({orbit, 1, false});
  return c;
}

void validate_cover(const CoverData& c) {
  validate_component(c.base);
  if (c.degree < 1) throw std::invalid_argument("cover: degree must be >= 1");
  if (c.branch_points < 0 || c.cover_genus < 0)
    throw std::invalid_argument("cover: negative branch or genus data");
  std::vector<long long> totals(c.base.ends.size(), 0);
  for (const auto& e : c.ends) {
    if (e.base_end >= c.base.ends.size()) throw std::invalid_argument("cover: end over missing base end");
    if (e.multiplicity < 1) throw std::invalid_argument("cover: end multiplicity must be >= 1");
    totals[e.base_end] += e.multiplicity;
  }
  for (std::size_t i = 0; i < totals.size(); ++i)
    if (totals[i] != c.degree * c.base.ends[i].multiplicity)
      throw std::invalid_argument("cover: end multiplicities do not add up to degree x base multiplicity");
  if (c.connected && c.base.ends.size() == 1 && c.base.genus == 0) {
    const long long e_count = static_cast<long long>(c.ends.size());
    if (c.branch_points != c.degree + 2 * c.cover_genus - 2 + e_count)
      throw std::invalid_argument("cover: branch points violate Riemann-Hurwitz for a plane cover");
  }
}

CoverData identity_cover(const FormalCurveComponent& base) {
  CoverData c;
  c.base = base;
  c.degree = 1;
  c.cover_genus = base.genus;
  for (std::size_t i = 0; i < base.ends.size(); ++i) c.ends.push_back({i, base.ends[i].multiplicity});
  c.connected = true;
  validate_cover(c);
  return c;
}

CoverData plane_cover(const FormalCurveComponent& base, long long degree, long long cover_genus,
                      const std::vector<long long>& end_multiplicities) {
  if (base.ends.size() != 1) throw std::invalid_argument("plane_cover: base must have exactly one end");
  CoverData c;
  c.base = base;
  c.degree = degree;
  c.cover_genus = cover_genus;
  for (long long m : end_multiplicities) c.ends.push_back({0, m});
  c.branch_points = degree + 2 * cover_genus - 2 + static_cast<long long>(end_multiplicities.size());
  c.connected = true;
  validate_cover(c);
  return c;
}

long long cz(const OrbitRef& orbit, long long m) {
  if (m <= 0) throw std::domain_error("cz: multiplicity must be positive");
  switch (orbit.kind) {
    case OrbitKind::positive_hyperbolic:
      return 0;
    case OrbitKind::negative_hyperbolic:
      return m;
    case OrbitKind::elliptic: {
      const Surd rot = orbit.rotation;
      if (!(rot.sign() > 0) || !(rot < Surd(1)))
        throw std::domain_error("cz: elliptic rotation class must lie in (0,1)");
      const BigInt fl = (Surd(m) * rot).floor();
      return 2 * fl.convert_to<long long>() + 1;
    }
  }
  throw std::logic_error("cz: unknown orbit kind");
}

long long cz_total(const OrbitRef& orbit, long long m) {
  if (m <= 0) throw std::domain_error("cz_total: multiplicity must be positive");
  switch (orbit.kind) {
    case OrbitKind::positive_hyperbolic:
      return 0;
    case OrbitKind::negative_hyperbolic:
      return m * (m + 1) / 2;
    case OrbitKind::elliptic: {
      long long sum = 0;
      for (long long k = 1; k <= m; ++k) sum += cz(orbit, k);
      return sum;
    }
  }
  throw std::logic_error("cz_total: unknown orbit kind");
}

long long ech_index(const FormalCurveComponent& curve, long long d) {
  if (d < 1) throw std::domain_error("ech_index: multiplicity must be >= 1");
  long long total = d * curve.c_tau + d * d * curve.q_tau;
  for (const auto& e : curve.ends) {
    const long long s = cz_total(e.orbit, d * e.multiplicity);
    total += e.positive ? s : -s;
  }
  return total;
}

long long fredholm_index(const FormalCurveComponent& curve) {
  long long total = -curve.euler_characteristic() + 2 * curve.c_tau;
  for (const auto& e : curve.ends) {
    const long long s = cz(e.orbit, e.multiplicity);
    total += e.positive ? s : -s;
  }
  return total;
}

CoverIndexResult cover_index(const CoverData& cover) {
  validate_cover(cover);
  CoverIndexResult res;
  const long long chi_cover = cover.degree * cover.base.euler_characteristic() - cover.branch_points;
  long long total = -chi_cover + 2 * cover.degree * cover.base.c_tau;
  for (const auto& e : cover.ends) {
    const auto& base_end = cover.base.ends[e.base_end];
    const long long s = cz(base_end.orbit, e.multiplicity);
    total += base_end.positive ? s : -s;
  }
  res.index = total;
  res.pullback_index = total - 2 * cover.branch_points;

  res.hypothesis_ok = true;
  for (const auto& be : cover.base.ends) {
    if (be.orbit.kind == OrbitKind::positive_hyperbolic) continue;
    if (be.orbit.kind == OrbitKind::elliptic) {
      // degree-positive: every cover multiplicity up to d x m keeps cz = 1
      const Surd top = Surd(cover.degree * be.multiplicity) * be.orbit.rotation;
      if (top < Surd(1)) continue;
      res.hypothesis_ok = false;
      res.hypothesis_note = "elliptic end at " + be.orbit.name + " is not degree-positive";
      break;
    }
    res.hypothesis_ok = false;
    res.hypothesis_note = "end at a negative hyperbolic orbit";
    break;
  }
  res.index_ge_branch_points = res.index >= cover.branch_points;
  return res;
}

long long pullback_operator_index(const CoverData& cover) {
  return cover_index(cover).pullback_index;
}

InequalityCheck index_inequality_check(const FormalCurveComponent& curve) {
  const long long slack = ech_index(curve, 1) - 2 * curve.delta_sing - fredholm_index(curve);
  return {slack >= 0, slack};
}

bool rho_positive(const OrbitRef& orbit, double rho) {
  if (orbit.kind != OrbitKind::elliptic) return false;
  if (!(orbit.action < rho)) return true;  // the interval (0, action/rho) mod 1 covers the circle
  const Surd bound = Surd::from_double(orbit.action) / Surd::from_double(rho);
  const Surd rot = orbit.rotation.mod1();
  return rot.sign() > 0 && rot < bound;
}

Rational self_intersection(const FormalCurveComponent& curve, double rho) {
  long long h = 0, e_rho = 0;
  for (const auto& e : curve.ends) {
    if (e.orbit.kind != OrbitKind::elliptic) {
      ++h;
    } else if (rho_positive(e.orbit, rho)) {
      e_rho += e.multiplicity;
    }
  }
  const long long num =
      2 * curve.genus - 2 + fredholm_index(curve) + h + 2 * e_rho + 4 * curve.delta_sing;
  if (num % 2 == 0) return {num / 2, 1};
  return {num, 2};
}

long long cz_one_window(const OrbitRef& orbit) {
  if (orbit.kind != OrbitKind::elliptic)
    throw std::domain_error("cz_one_window: elliptic orbits only");
  const Surd rot = orbit.rotation;
  if (!(rot.sign() > 0) || !(rot < Surd(1)))
    throw std::domain_error("cz_one_window: rotation class must lie in (0,1)");
  const Surd inv = rot.reciprocal();
  BigInt fl = inv.floor();
  if (Surd(fl.convert_to<long long>()) == inv) fl -= 1;  // 1/theta integral: window stops one earlier
  const BigInt cap = BigInt(std::numeric_limits<long long>::max());
  return (fl > cap ? cap : fl).convert_to<long long>();
}

Certificate partition_check(const OrbitRef& orbit, long long total_multiplicity,
                            const std::vector<long long>& end_multiplicities, bool positive_side) {
  Certificate cert;
  if (orbit.kind != OrbitKind::elliptic) {
    cert.status = CertStatus::not_applicable;
    cert.reason = "partition conditions implemented for elliptic orbits only";
    return cert;
  }
  if (total_multiplicity < 1) throw std::domain_error("partition_check: multiplicity must be >= 1");
  long long sum = 0;
  for (long long m : end_multiplicities) {
    if (m < 1) throw std::invalid_argument("partition_check: parts must be >= 1");
    sum += m;
  }
  if (sum != total_multiplicity)
    throw std::invalid_argument("partition_check: parts do not sum to the total multiplicity");
  const Surd rot = orbit.rotation.mod1();
  if (!(rot.sign() > 0) || !(Surd(total_multiplicity) * rot < Surd(1))) {
    cert.status = CertStatus::not_applicable;
    cert.reason = "rotation class not in (0, 1/m); general partition tables not covered";
    return cert;
  }
  bool ok;
  if (positive_side) {
    ok = std::all_of(end_multiplicities.begin(), end_multiplicities.end(),
                     [](long long m) { return m == 1; });
    cert.reason = ok ? "matches (1,...,1)" : "positive partition must be (1,...,1)";
  } else {
    ok = end_multiplicities.size() == 1 && end_multiplicities[0] == total_multiplicity;
    cert.reason = ok ? "matches (m)" : "negative partition must be (m)";
  }
  cert.status = ok ? CertStatus::granted : CertStatus::not_granted;
  return cert;
}

namespace {

long long count_h_plus(const FormalCurveComponent& curve) {
  long long h = 0;
  for (const auto& e : curve.ends) {
    if (e.orbit.kind == OrbitKind::positive_hyperbolic) ++h;
    if (e.orbit.kind == OrbitKind::negative_hyperbolic && e.multiplicity % 2 == 0) ++h;
  }
  return h;
}

}  // namespace

Certificate auto_transversality(const FormalCurveComponent& curve) {
  Certificate cert;
  const long long lhs = 2 * curve.genus - 2 + count_h_plus(curve);
  const long long ind = fredholm_index(curve);
  cert.margin = ind - lhs;
  if (lhs < ind) {
    cert.status = CertStatus::granted;
    cert.reason = "surjectivity criterion holds";
  } else {
    cert.status = CertStatus::not_granted;
    cert.reason = "criterion fails; no transversality conclusion";
  }
  return cert;
}

Certificate super_rigidity_certificate(const CoverData& cover) {
  Certificate cert;
  if (cover.base.hint != KindHint::special_plane) {
    cert.status = CertStatus::not_applicable;
    cert.reason = "base is not a special plane";
    return cert;
  }
  validate_cover(cover);
  const OrbitRef& orbit = cover.base.ends[0].orbit;
  for (const auto& e : cover.ends) {
    if (cz(orbit, e.multiplicity) != 1) {
      cert.status = CertStatus::not_applicable;
      cert.reason = "a cover end has Conley-Zehnder index != 1";
      return cert;
    }
  }
  long long h_plus = 0;  // all ends are elliptic here
  const long long ind = cover_index(cover).index;
  const long long value = 2 * cover.cover_genus - 2 + h_plus + ind - 2 * cover.branch_points;
  cert.margin = value;
  cert.status = (value < 0) ? CertStatus::granted : CertStatus::not_granted;
  cert.reason = (value < 0) ? "pulled-back operator is injective" : "criterion fails";
  return cert;
}

bool validate_index_parity(const FormalCurveComponent& curve) {
  long long h_pos = 0;
  for (const auto& e : curve.ends)
    if (e.orbit.kind == OrbitKind::positive_hyperbolic) ++h_pos;
  return ((ech_index(curve, 1) - h_pos) % 2) == 0;
}

IndexBoundDiagnostics current_index_bound(const CurrentDecomposition& current, double rho) {
  const std::size_t K = current.components.size();
  const std::size_t S = current.exceptional.size();
  if (current.cc_cross.size() != K || current.ee_cross.size() != S ||
      current.ec_cross.size() != S || current.e_dot_a.size() != S)
    throw std::invalid_argument("current_index_bound: intersection tables incomplete");
  for (const auto& row : current.cc_cross)
    if (row.size() != K) throw std::invalid_argument("current_index_bound: cc table incomplete");
  for (const auto& row : current.ee_cross)
    if (row.size() != S) throw std::invalid_argument("current_index_bound: ee table incomplete");
  for (const auto& row : current.ec_cross)
    if (row.size() != K) throw std::invalid_argument("current_index_bound: ec table incomplete");

  IndexBoundDiagnostics diag;

  long long cross_cc = 0;
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t k2 = 0; k2 < K; ++k2)
      if (k != k2)
        cross_cc +=
            current.components[k].multiplicity * current.components[k2].multiplicity * current.cc_cross[k][k2];

  long long full = 0, mid = 0, simplified = 0, clean = 0;
  diag.deltas_zero = true;
  diag.covers_only_special = true;
  for (const auto& comp : current.components) {
    const long long d = comp.multiplicity;
    if (d < 1) throw std::invalid_argument("current_index_bound: multiplicities must be positive");
    const long long ind = fredholm_index(comp.curve);
    const long long I1 = ech_index(comp.curve, 1);
    const Rational cc = self_intersection(comp.curve, rho);
    // d(d-1) is even, so d(d-1) * C.C is an integer even when C.C is half-integral.
    full += d * I1 + d * (d - 1) * cc.num / cc.den;
    mid += d * I1 + 2 * d * (d - 1) * comp.curve.delta_sing;
    simplified += d * ind + 2 * d * d * comp.curve.delta_sing;
    clean += d * ind;
    if (comp.curve.delta_sing != 0) {
      diag.deltas_zero = false;
      diag.violations.push_back("positive singularity count on " + comp.curve.id);
    }
    if (d > 1 && !(cc.num == 0)) {
      diag.covers_only_special = false;
      diag.violations.push_back("multiply covered component with nonzero self-intersection: " +
                                comp.curve.id);
    }
  }

  long long exc_full = 0, exc_mid = 0, exc_simplified = 0;
  diag.exceptional_simple = true;
  diag.gate_ok = true;
  for (std::size_t s = 0; s < S; ++s) {
    const long long m = current.exceptional[s].multiplicity;
    if (m < 1) throw std::invalid_argument("current_index_bound: multiplicities must be positive");
    exc_full += -m * (m - 1);
    exc_mid += m * (m + 1) + 2 * m * current.e_dot_a[s];
    exc_simplified += m * (m - 1);
    if (m > 1) {
      diag.exceptional_simple = false;
      diag.violations.push_back("exceptional sphere " + current.exceptional[s].id +
                                " has multiplicity > 1");
    }
    if (current.e_dot_a[s] < -1) diag.gate_ok = false;
  }

  long long cross_ee = 0;
  for (std::size_t s = 0; s < S; ++s)
    for (std::size_t s2 = 0; s2 < S; ++s2)
      if (s != s2)
        cross_ee += current.exceptional[s].multiplicity * current.exceptional[s2].multiplicity *
                    current.ee_cross[s][s2];
  long long cross_ec = 0;
  for (std::size_t s = 0; s < S; ++s)
    for (std::size_t k = 0; k < K; ++k)
      cross_ec += 2 * current.exceptional[s].multiplicity * current.components[k].multiplicity *
                  current.ec_cross[s][k];

  diag.cross_terms_zero = (cross_cc == 0);
  if (!diag.cross_terms_zero) diag.violations.push_back("nonzero cross intersection term");

  diag.rhs_full = full + exc_full + cross_cc + cross_ee + cross_ec;
  diag.rhs_with_gate = mid + exc_mid + cross_cc;
  diag.rhs_simplified = simplified + exc_simplified + cross_cc;
  diag.clean_part = clean;
  diag.structural_equality = diag.cross_terms_zero && diag.deltas_zero && diag.exceptional_simple &&
                             diag.covers_only_special && (diag.rhs_simplified == diag.clean_part);
  return diag;
}

}  // namespace echreeb
