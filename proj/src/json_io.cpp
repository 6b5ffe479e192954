#include "echreeb/json_io.hpp"

#include <limits>

namespace echreeb {

namespace {

Json bigint_to_json(const BigInt& v) {
  static const BigInt lo(std::numeric_limits<long long>::min());
  static const BigInt hi(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<long long>());
}

const char* kind_name(OrbitKind k) { return to_string(k); }

OrbitKind kind_from_name(const std::string& s) {
  if (s == "elliptic") return OrbitKind::elliptic;
  if (s == "positive_hyperbolic") return OrbitKind::positive_hyperbolic;
  if (s == "negative_hyperbolic") return OrbitKind::negative_hyperbolic;
  throw std::invalid_argument("unknown orbit kind: " + s);
}

const char* lpos_name(LPositivity l) {
  switch (l) {
    case LPositivity::positive: return "positive";
    case LPositivity::not_positive: return "not_positive";
    case LPositivity::not_applicable: return "not_applicable";
  }
  return "?";
}

LPositivity lpos_from_name(const std::string& s) {
  if (s == "positive") return LPositivity::positive;
  if (s == "not_positive") return LPositivity::not_positive;
  return LPositivity::not_applicable;
}

const char* hint_name(KindHint h) {
  switch (h) {
    case KindHint::generic_embedded: return "generic_embedded";
    case KindHint::special_plane: return "special_plane";
    case KindHint::special_torus: return "special_torus";
    case KindHint::exceptional_sphere: return "exceptional_sphere";
    case KindHint::cylinder: return "cylinder";
  }
  return "?";
}

KindHint hint_from_name(const std::string& s) {
  if (s == "generic_embedded") return KindHint::generic_embedded;
  if (s == "special_plane") return KindHint::special_plane;
  if (s == "special_torus") return KindHint::special_torus;
  if (s == "exceptional_sphere") return KindHint::exceptional_sphere;
  if (s == "cylinder") return KindHint::cylinder;
  throw std::invalid_argument("unknown curve hint: " + s);
}

}  // namespace

Json surd_to_json(const Surd& s) {
  return Json::array({bigint_to_json(s.p()), bigint_to_json(s.r()), bigint_to_json(s.q()),
                      bigint_to_json(s.r())});
}

Surd surd_from_json(const Json& j) {
  if (j.is_number_integer()) return Surd(j.get<long long>());
  if (!j.is_array() || (j.size() != 2 && j.size() != 4))
    throw std::invalid_argument("surd: expected [num, den] or [num, den, surd_num, surd_den]");
  const BigInt num = bigint_from_json(j[0]);
  const BigInt den = bigint_from_json(j[1]);
  Surd out = Surd::rational(num, den);
  if (j.size() == 4) {
    const BigInt snum = bigint_from_json(j[2]);
    const BigInt sden = bigint_from_json(j[3]);
    out += Surd(0, snum, sden);
  }
  return out;
}

Json profile_to_json(const FormProfile& profile) {
  Json j;
  j["base"] = "taubes";
  Json coeffs = Json::array();
  for (const auto& c : profile.exponent().poly) coeffs.push_back(surd_to_json(c));
  j["f_coeffs"] = coeffs;
  const auto& c = profile.exponent().c;
  j["c"] = Json::array({bigint_to_json(c.p()), bigint_to_json(c.r())});
  return j;
}

FormProfile profile_from_json(const Json& j) {
  if (j.value("base", "taubes") != std::string("taubes"))
    throw std::invalid_argument("profile: only the taubes base is supported");
  ConformalExponent f;
  if (j.contains("f_coeffs"))
    for (const auto& c : j["f_coeffs"]) f.poly.push_back(surd_from_json(c));
  if (j.contains("c")) {
    const Surd c = surd_from_json(j["c"]);
    if (!c.is_rational()) throw std::invalid_argument("profile: c must be rational");
    f.c = c;
  }
  return FormProfile(std::move(f));
}

Json morse_bott_to_json(const FormProfile& profile, const MorseBottCatalog& catalog) {
  Json j;
  j["profile"] = profile_to_json(profile);
  j["cutoff"] = catalog.cutoff;
  j["winding_bound"] = catalog.winding_bound;
  j["winding_bound_is_heuristic"] = true;
  j["grid_size"] = catalog.grid_size;
  Json fams = Json::array();
  for (const auto& f : catalog.families) {
    Json e;
    e["theta0"] = f.theta0;
    e["slope"] = Json::array({f.slope_p, f.slope_q});
    e["winding"] = Json::array({f.winding_t, f.winding_phi});
    e["action"] = f.action;
    e["homology_class"] = f.homology_class;
    e["contractible"] = f.contractible;
    fams.push_back(e);
  }
  j["families"] = fams;
  return j;
}

Json orbit_to_json(const ReebOrbit& o) {
  Json j;
  j["name"] = o.name;
  j["kind"] = kind_name(o.kind);
  if (o.rotation) {
    j["rotation"] = surd_to_json(*o.rotation);
    j["rotation_float"] = o.rotation->to_double();
  }
  j["action"] = o.action;
  j["action_interval"] = Json::array({o.action_lo, o.action_hi});
  j["homology_class"] = o.homology_class;
  j["l_flat"] = o.l_flat;
  j["l_positive"] = lpos_name(o.l_positive);
  j["exceptional"] = o.exceptional;
  if (o.from_angle) j["from_angle"] = *o.from_angle;
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

ReebOrbit orbit_from_json(const Json& j) {
  ReebOrbit o;
  o.name = j.at("name").get<std::string>();
  o.kind = kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("rotation")) o.rotation = surd_from_json(j["rotation"]);
  o.action = j.at("action").get<double>();
  if (j.contains("action_interval")) {
    o.action_lo = j["action_interval"][0].get<double>();
    o.action_hi = j["action_interval"][1].get<double>();
  } else {
    o.action_lo = o.action_hi = o.action;
  }
  o.homology_class = j.value("homology_class", 0LL);
  o.l_flat = j.value("l_flat", false);
  o.l_positive = lpos_from_name(j.value("l_positive", "not_applicable"));
  o.exceptional = j.value("exceptional", false);
  if (j.contains("from_angle")) o.from_angle = j["from_angle"].get<double>();
  o.note = j.value("note", "");
  return o;
}

Json catalog_to_json(const OrbitCatalog& c) {
  Json j;
  j["profile_label"] = c.profile_label;
  j["cutoff"] = c.cutoff;
  j["delta"] = c.delta;
  j["boundary_type"] = (c.type == BoundaryType::twisted) ? "twisted" : "untwisted";
  Json orbits = Json::array();
  for (const auto& o : c.orbits) orbits.push_back(orbit_to_json(o));
  j["orbits"] = orbits;
  return j;
}

OrbitCatalog catalog_from_json(const Json& j) {
  OrbitCatalog c;
  c.profile_label = j.value("profile_label", "");
  c.cutoff = j.at("cutoff").get<double>();
  c.delta = j.value("delta", 0.0);
  c.type = (j.value("boundary_type", "untwisted") == std::string("twisted"))
               ? BoundaryType::twisted
               : BoundaryType::untwisted;
  for (const auto& o : j.at("orbits")) c.orbits.push_back(orbit_from_json(o));
  return c;
}

Json neighborhood_to_json(const NeighborhoodSpec& n) {
  Json j;
  j["epsilon"] = surd_to_json(n.epsilon);
  j["epsilon_float"] = n.epsilon.to_double();
  j["c"] = surd_to_json(n.c);
  j["kappa"] = n.kappa;
  j["max_exponent"] = n.max_f;
  j["inf_exponent"] = n.inf_f;
  return j;
}

Json return_map_to_json(const ReturnMapReport& r) {
  Json j;
  j["period"] = r.period;
  j["monodromy"] = Json::array({Json::array({r.monodromy[0][0], r.monodromy[0][1]}),
                                Json::array({r.monodromy[1][0], r.monodromy[1][1]})});
  switch (r.classification) {
    case OrbitClass::elliptic:
      j["classification"] = "elliptic";
      j["rotation"] = r.rotation;
      break;
    case OrbitClass::positive_hyperbolic:
      j["classification"] = "positive_hyperbolic";
      break;
    case OrbitClass::negative_hyperbolic:
      j["classification"] = "negative_hyperbolic";
      break;
    case OrbitClass::degenerate_shear:
      j["classification"] = "degenerate_shear";
      j["shear"] = r.shear;
      break;
  }
  j["det_error"] = r.det_error;
  return j;
}

Json orbit_ref_to_json(const OrbitRef& o) {
  Json j;
  j["name"] = o.name;
  j["kind"] = kind_name(o.kind);
  if (o.kind == OrbitKind::elliptic) j["rotation"] = surd_to_json(o.rotation);
  j["action"] = o.action;
  return j;
}

OrbitRef orbit_ref_from_json(const Json& j) {
  OrbitRef o;
  o.name = j.value("name", "");
  o.kind = kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("rotation")) o.rotation = surd_from_json(j["rotation"]);
  o.action = j.value("action", 1.0);
  return o;
}

FormalCurveComponent component_from_json(const Json& j, const OrbitCatalog* catalog,
                                         const std::vector<OrbitRef>& inline_orbits) {
  FormalCurveComponent c;
  c.id = j.value("id", "component");
  c.genus = j.value("genus", 0LL);
  c.c_tau = j.value("c_tau", 0LL);
  c.q_tau = j.value("q_tau", 0LL);
  c.delta_sing = j.value("delta", 0LL);
  c.hint = hint_from_name(j.value("hint", "generic_embedded"));
  if (j.contains("ends")) {
    for (const auto& e : j["ends"]) {
      CurveEnd end;
      if (e.contains("orbit_ref")) {
        const std::string name = e["orbit_ref"].get<std::string>();
        bool found = false;
        for (const auto& o : inline_orbits)
          if (o.name == name) {
            end.orbit = o;
            found = true;
          }
        if (!found && catalog) {
          if (const ReebOrbit* co = catalog->find(name)) {
            end.orbit = echreeb::orbit_ref(*co);
            found = true;
          }
        }
        if (!found) throw std::invalid_argument("curve end references unknown orbit " + name);
      } else {
        end.orbit = orbit_ref_from_json(e.at("orbit"));
      }
      end.multiplicity = e.value("multiplicity", 1LL);
      end.positive = e.value("side", "negative") == std::string("positive");
      c.ends.push_back(end);
    }
  }
  validate_component(c);
  return c;
}

Json component_to_json(const FormalCurveComponent& c) {
  Json j;
  j["id"] = c.id;
  j["genus"] = c.genus;
  j["c_tau"] = c.c_tau;
  j["q_tau"] = c.q_tau;
  j["delta"] = c.delta_sing;
  j["hint"] = hint_name(c.hint);
  Json ends = Json::array();
  for (const auto& e : c.ends) {
    Json je;
    je["orbit"] = orbit_ref_to_json(e.orbit);
    je["multiplicity"] = e.multiplicity;
    je["side"] = e.positive ? "positive" : "negative";
    ends.push_back(je);
  }
  j["ends"] = ends;
  return j;
}

Json generator_to_json(const OrbitSetGenerator& g) {
  Json j;
  Json pairs = Json::array();
  for (const auto& p : g.pairs) pairs.push_back(Json::array({p.orbit, p.multiplicity}));
  j["pairs"] = pairs;
  j["action_interval"] = Json::array({g.action_lo, g.action_hi});
  j["total_class"] = g.total_class;
  j["parity"] = g.parity == 0 ? "even" : "odd";
  return j;
}

Json generators_to_json(const EnumeratedGenerators& e, const FilteredDimensions& dims) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : e.generators) gens.push_back(generator_to_json(g));
  j["generators"] = gens;
  Json border = Json::array();
  for (const auto& g : e.borderline) border.push_back(generator_to_json(g));
  j["borderline"] = border;
  j["dimensions"]["even"] = dims.even_count;
  j["dimensions"]["odd"] = dims.odd_count;
  return j;
}

Json manifold_to_json(const ManifoldSummary& m) {
  Json j;
  j["euler"] = m.euler;
  j["signature"] = m.signature;
  j["b1"] = m.b1;
  j["b2_plus"] = m.b2_plus;
  j["n_untwisted"] = m.n_untwisted;
  j["n_twisted"] = m.n_twisted;
  Json recs = Json::array();
  for (const auto& r : m.spin_c) {
    Json jr;
    jr["name"] = r.name;
    jr["c1_squared"] = r.c1_squared;
    recs.push_back(jr);
  }
  j["spin_c"] = recs;
  return j;
}

ManifoldSummary manifold_from_json(const Json& j) {
  ManifoldSummary m;
  m.euler = j.at("euler").get<long long>();
  m.signature = j.at("signature").get<long long>();
  m.b1 = j.value("b1", 0LL);
  m.b2_plus = j.value("b2_plus", 1LL);
  m.n_untwisted = j.value("n_untwisted", 0LL);
  m.n_twisted = j.value("n_twisted", 0LL);
  if (j.contains("spin_c"))
    for (const auto& r : j["spin_c"])
      m.spin_c.push_back({r.value("name", ""), r.at("c1_squared").get<long long>()});
  return m;
}

}  // namespace echreeb
