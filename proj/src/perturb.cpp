#include "echreeb/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace echreeb {

namespace {

std::string angle_name(const char* tag, double theta, int index) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s@%.9f#%d", tag, theta, index);
  return buf;
}

std::string pole_name(Pole p) { return p == Pole::north ? "e@pole0#0" : "e@polepi#0"; }

double angle_sort_key(const ReebOrbit& o) {
  if (o.exceptional) {
    if (!o.from_angle) return -1.0;
    return (*o.from_angle == 0.0) ? -1.0 : kPi + 1.0;
  }
  return o.from_angle.value_or(0.0);
}

void sort_catalog(OrbitCatalog& cat) {
  std::sort(cat.orbits.begin(), cat.orbits.end(), [](const ReebOrbit& a, const ReebOrbit& b) {
    const double ka = angle_sort_key(a), kb = angle_sort_key(b);
    if (ka != kb) return ka < kb;
    if (a.kind != b.kind) return kind_tag(a.kind)[0] < kind_tag(b.kind)[0];
    return a.name < b.name;
  });
}

}  // namespace

LPositivity l_positive_check(const ReebOrbit& orbit, double L) {
  if (orbit.kind != OrbitKind::elliptic || !orbit.rotation) return LPositivity::not_applicable;
  if (!(orbit.action_hi < L)) return LPositivity::not_applicable;  // definition needs action < L
  const Surd bound = Surd::from_double(orbit.action_lo) / Surd::from_double(L);
  const Surd rot = orbit.rotation->mod1();
  return (rot.sign() > 0 && rot < bound) ? LPositivity::positive : LPositivity::not_positive;
}

ConformalExponent taubes_modifier(const Surd& eps, const Surd& c) {
  const Surd upper = Surd(0, 1, 2);  // sqrt(3/2) = sqrt6/2
  if (!(eps.sign() > 0) || eps > upper)
    throw std::domain_error("taubes_modifier: eps must lie in (0, sqrt(3/2)]");
  if (c.sign() < 0) throw std::domain_error("taubes_modifier: c must be nonnegative");
  // -((3 - sqrt6 eps)/2) u^2 - c
  const Surd quad = (Surd::sqrt6() * eps - Surd(3)) / Surd(2);
  ConformalExponent f;
  f.poly = {Surd(0), Surd(0), quad};
  poly_trim(f.poly);
  f.c = c;
  return f;
}

OrbitCatalog bourgeois_split(const FormProfile& profile, double L, double delta, int grid_size) {
  if (delta <= 0.0) throw std::invalid_argument("bourgeois_split: delta must be positive");
  const auto mb = morse_bott_catalog(profile, L, grid_size);
  const auto tech = technical_condition_check(profile, mb.families);
  if (!tech.pass) {
    for (const auto& e : tech.entries)
      if (!(e.margin < 0.0)) {
        std::ostringstream os;
        os << "bourgeois_split: technical condition fails at theta0=" << e.theta0
           << " (a' x a'' = " << e.margin << ")";
        throw std::runtime_error(os.str());
      }
  }

  OrbitCatalog cat;
  cat.cutoff = L;
  cat.delta = delta;
  cat.type = BoundaryType::untwisted;

  for (const auto& fam : mb.families) {
    if (delta >= fam.action) {
      std::ostringstream os;
      os << "bourgeois_split: delta=" << delta << " too large for family action " << fam.action
         << " at theta0=" << fam.theta0;
      throw std::invalid_argument(os.str());
    }
    ReebOrbit h;
    h.name = angle_name("h", fam.theta0, 0);
    h.kind = OrbitKind::positive_hyperbolic;
    h.action_lo = fam.action - delta;
    h.action_hi = fam.action;
    h.action = fam.action - 0.5 * delta;
    h.homology_class = fam.homology_class;
    h.from_angle = fam.theta0;

    ReebOrbit e = h;
    e.name = angle_name("e", fam.theta0, 0);
    e.kind = OrbitKind::elliptic;
    e.rotation = Surd::from_double(e.action / (2.0 * L));
    e.l_positive = l_positive_check(e, L);
    if (e.l_positive != LPositivity::positive) {
      std::ostringstream os;
      os << "bourgeois_split: delta=" << delta << " does not keep the elliptic orbit at theta0="
         << fam.theta0 << " L-positive";
      throw std::invalid_argument(os.str());
    }
    cat.orbits.push_back(e);
    cat.orbits.push_back(h);
  }

  for (Pole p : {Pole::north, Pole::south}) {
    const auto exc = exceptional_rotation(profile, p);
    ReebOrbit o;
    o.name = pole_name(p);
    o.kind = OrbitKind::elliptic;
    o.rotation = exc.rotation;
    o.action_lo = o.action_hi = o.action = exc.action;
    o.homology_class = -1;  // the pole orbits advance t positively
    o.exceptional = true;
    o.from_angle = pole_angle(p);
    o.l_positive = l_positive_check(o, L);
    cat.orbits.push_back(o);
  }

  sort_catalog(cat);
  return cat;
}

LambdaAResult build_lambda_A(double rho, const Surd& eps, const Surd& c, double delta, double L,
                             int grid_size) {
  if (!(L > rho)) throw std::invalid_argument("build_lambda_A: requires L > rho");
  const auto modifier = taubes_modifier(eps, c);
  FormProfile profile(modifier);

  // Neighborhood constraint: the exponent relating the final form to the base
  // one has max <= -c + delta, which must stay below -1.
  const double max_f = -c.to_double() + delta;
  if (!(max_f < -1.0)) {
    std::ostringstream os;
    os << "build_lambda_A: max conformal exponent " << max_f << " is not < -1; need c > "
       << 1.0 + delta;
    throw std::invalid_argument(os.str());
  }

  OrbitCatalog cat = bourgeois_split(profile, L, delta, grid_size);

  for (const auto& o : cat.orbits) {
    if (o.exceptional && o.l_positive == LPositivity::not_positive) {
      const double max_eps = o.action / L;
      std::ostringstream os;
      os << "build_lambda_A: eps=" << eps.to_double() << " leaves " << o.name
         << " non-L-positive; maximal admissible eps at these parameters is " << max_eps;
      throw std::invalid_argument(os.str());
    }
  }

  for (auto& o : cat.orbits)
    if (o.action_hi < rho) o.l_flat = true;  // flat range: asymptotic data complex-linear

  NeighborhoodSpec spec;
  spec.epsilon = eps;
  spec.c = c;
  spec.max_f = max_f;
  spec.inf_f = ((Surd::sqrt6() * eps - Surd(3)) / Surd(2) - c).to_double() - delta;
  spec.kappa = std::ceil(-spec.inf_f);

  std::ostringstream label;
  label << "taubes*exp(f[eps=" << eps.str() << ",c=" << c.str() << "])";
  cat.profile_label = label.str();

  return {std::move(profile), std::move(cat), spec};
}

OrbitCatalog twisted_catalog(const FormProfile& profile, double L, double delta, int grid_size) {
  if (!profile.sigma_symmetric())
    throw std::invalid_argument("twisted_catalog: profile is not symmetric under theta -> pi - theta");
  if (delta <= 0.0) throw std::invalid_argument("twisted_catalog: delta must be positive");

  const auto mb = morse_bott_catalog(profile, L, grid_size);
  const auto tech = technical_condition_check(profile, mb.families);
  for (const auto& e : tech.entries)
    if (!(e.margin < 0.0)) {
      std::ostringstream os;
      os << "twisted_catalog: technical condition fails at theta0=" << e.theta0;
      throw std::runtime_error(os.str());
    }

  OrbitCatalog cat;
  cat.cutoff = L;
  cat.delta = delta;
  cat.type = BoundaryType::twisted;

  // Pair the families exchanged by theta -> pi - theta; the equator family is
  // fixed and descends to an interval of orbits with double-covered endpoints.
  std::vector<const MorseBottFamily*> lower, equator;
  std::vector<bool> matched(mb.families.size(), false);
  for (std::size_t i = 0; i < mb.families.size(); ++i) {
    const double th = mb.families[i].theta0;
    if (std::abs(th - 0.5 * kPi) < 1e-9) {
      equator.push_back(&mb.families[i]);
    } else if (th < 0.5 * kPi) {
      lower.push_back(&mb.families[i]);
    }
  }
  for (const auto* fam : lower) {
    bool found = false;
    for (const auto& other : mb.families) {
      if (std::abs((kPi - other.theta0) - fam->theta0) < 1e-7) {
        if (std::abs(other.action - fam->action) > 1e-7)
          throw std::runtime_error("twisted_catalog: paired families have unequal actions");
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("twisted_catalog: unpaired torus family");

    if (delta >= fam->action) throw std::invalid_argument("twisted_catalog: delta too large");
    ReebOrbit h;
    h.name = angle_name("h", fam->theta0, 0);
    h.kind = OrbitKind::positive_hyperbolic;
    h.action_lo = fam->action - delta;
    h.action_hi = fam->action;
    h.action = fam->action - 0.5 * delta;
    h.homology_class = 2 * fam->homology_class;  // the quotient halves the t-circle
    h.from_angle = fam->theta0;
    h.note = "merged image of the families at theta0 and pi-theta0";

    ReebOrbit e = h;
    e.name = angle_name("e", fam->theta0, 0);
    e.kind = OrbitKind::elliptic;
    e.rotation = Surd::from_double(e.action / (2.0 * L));
    e.l_positive = l_positive_check(e, L);
    cat.orbits.push_back(e);
    cat.orbits.push_back(h);
  }

  for (const auto* fam : equator) {
    // Downstairs the fixed torus is an interval of orbits; its two endpoint
    // orbits have half the period and lift to double covers.
    const double half = 0.5 * fam->action;
    if (delta >= half) throw std::invalid_argument("twisted_catalog: delta too large for endpoint orbits");
    for (int i = 0; i < 2; ++i) {
      ReebOrbit n;
      n.name = angle_name("n", fam->theta0, i);
      n.kind = OrbitKind::negative_hyperbolic;
      n.action_lo = half - delta;
      n.action_hi = half;
      n.action = half - 0.5 * delta;
      n.homology_class = fam->homology_class;
      n.from_angle = fam->theta0;
      n.note = "half-period endpoint orbit; its double cover lifts to the fixed family";
      cat.orbits.push_back(n);
    }
    ReebOrbit e;
    e.name = angle_name("e", fam->theta0, 0);
    e.kind = OrbitKind::elliptic;
    e.action_lo = fam->action - delta;
    e.action_hi = fam->action;
    e.action = fam->action - 0.5 * delta;
    e.homology_class = 2 * fam->homology_class;
    e.from_angle = fam->theta0;
    e.rotation = Surd::from_double(e.action / (2.0 * L));
    e.l_positive = l_positive_check(e, L);
    e.note = "interior orbit of the interval family";
    cat.orbits.push_back(e);
  }

  const auto exc_n = exceptional_rotation(profile, Pole::north);
  const auto exc_s = exceptional_rotation(profile, Pole::south);
  if (!(exc_n.rotation == exc_s.rotation))
    throw std::runtime_error("twisted_catalog: pole rotation classes differ");
  ReebOrbit e;
  e.name = "e@pole#0";
  e.kind = OrbitKind::elliptic;
  e.rotation = exc_n.rotation;
  e.action_lo = e.action_hi = e.action = exc_n.action;
  e.homology_class = -2;
  e.exceptional = true;
  e.from_angle = 0.0;
  e.l_positive = l_positive_check(e, L);
  e.note = "common image of the two pole orbits; action reported from the double cover";
  cat.orbits.push_back(e);

  sort_catalog(cat);
  return cat;
}

void require_catalog_type(const OrbitCatalog& catalog, BoundaryType expected) {
  if (catalog.type != expected) {
    std::ostringstream os;
    os << "catalog has boundary type "
       << (catalog.type == BoundaryType::twisted ? "twisted" : "untwisted") << ", expected "
       << (expected == BoundaryType::twisted ? "twisted" : "untwisted");
    throw std::invalid_argument(os.str());
  }
}

}  // namespace echreeb
