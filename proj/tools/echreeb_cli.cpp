// Command-line surface over the contact-profile, orbit-catalog, index and
// enumeration layers. All reports are deterministic JSON (or plain tables).
#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "echreeb/acceptance.hpp"
#include "echreeb/flow.hpp"
#include "echreeb/generators.hpp"
#include "echreeb/index.hpp"
#include "echreeb/json_io.hpp"
#include "echreeb/perturb.hpp"

namespace {

using echreeb::Json;

int thread_count() {
  if (const char* env = std::getenv("ECHREEB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

echreeb::Surd parse_exact(const std::string& text) {
  if (text == "sqrt(3/2)" || text == "sqrt6/2") return echreeb::Surd(0, 1, 2);
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const long long num = std::stoll(text.substr(0, slash));
    const long long den = std::stoll(text.substr(slash + 1));
    return echreeb::Surd::rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const long long num = std::stoll(digits);
    long long den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return echreeb::Surd::rational(num, den);
  }
  return echreeb::Surd(std::stoll(text));
}

echreeb::FormProfile load_profile(const std::string& path) {
  if (path.empty()) return echreeb::FormProfile::taubes();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file " + path);
  Json j = Json::parse(in);
  return echreeb::profile_from_json(j);
}

void emit(const Json& doc, const std::string& out_path, const std::string& format) {
  std::ostringstream os;
  if (format == "table") {
    std::function<void(const Json&, int)> dump = [&](const Json& j, int depth) {
      const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
      if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
          if (value.is_object() || value.is_array()) {
            os << pad << key << ":\n";
            dump(value, depth + 1);
          } else {
            os << pad << key << ": " << value.dump() << "\n";
          }
        }
      } else if (j.is_array()) {
        for (const auto& value : j) {
          if (value.is_object() || value.is_array()) {
            os << pad << "-\n";
            dump(value, depth + 1);
          } else {
            os << pad << "- " << value.dump() << "\n";
          }
        }
      } else {
        os << pad << j.dump() << "\n";
      }
    };
    dump(doc, 0);
  } else {
    os << doc.dump(2) << "\n";
  }
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << os.str();
  }
}

struct CurveDocument {
  std::vector<echreeb::OrbitRef> orbits;
  std::vector<echreeb::FormalCurveComponent> components;
  std::vector<std::pair<echreeb::CoverData, std::string>> covers;  // cover + base id
  std::vector<std::vector<long long>> multiplicities;              // per component
};

CurveDocument load_curves(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file " + path);
  Json j = Json::parse(in);
  CurveDocument doc;
  if (j.contains("orbits"))
    for (const auto& o : j["orbits"]) doc.orbits.push_back(echreeb::orbit_ref_from_json(o));
  for (const auto& cj : j.at("components")) {
    doc.components.push_back(echreeb::component_from_json(cj, nullptr, doc.orbits));
    std::vector<long long> mults = {1};
    if (cj.contains("multiplicities")) mults = cj["multiplicities"].get<std::vector<long long>>();
    doc.multiplicities.push_back(mults);
  }
  if (j.contains("covers")) {
    for (const auto& cj : j["covers"]) {
      const std::string base_id = cj.at("base").get<std::string>();
      const echreeb::FormalCurveComponent* base = nullptr;
      for (const auto& comp : doc.components)
        if (comp.id == base_id) base = &comp;
      if (!base) throw std::runtime_error("cover references unknown component " + base_id);
      echreeb::CoverData cover;
      if (cj.contains("end_multiplicities")) {
        cover = echreeb::plane_cover(*base, cj.at("degree").get<long long>(),
                                     cj.value("cover_genus", 0LL),
                                     cj["end_multiplicities"].get<std::vector<long long>>());
      } else {
        cover = echreeb::identity_cover(*base);
      }
      doc.covers.emplace_back(cover, base_id);
    }
  }
  return doc;
}

int cmd_orbits(const std::string& profile_path, double cutoff, const std::string& out,
               const std::string& format) {
  const auto profile = load_profile(profile_path);
  const auto cert = echreeb::contact_certificate(profile);
  Json doc;
  doc["contact_certificate"]["pass"] = cert.pass;
  doc["contact_certificate"]["worst_margin"] = cert.worst_margin;
  doc["contact_certificate"]["worst_theta"] = cert.worst_theta;
  doc["contact_structure_euler_number"] = echreeb::kContactStructureEulerNumber;
  if (!cert.pass) {
    doc["contact_certificate"]["message"] = cert.message;
    emit(doc, out, format);
    return 1;
  }
  const auto mb = echreeb::morse_bott_catalog(profile, cutoff);
  doc.update(echreeb::morse_bott_to_json(profile, mb));
  const auto tech = echreeb::technical_condition_check(profile, mb.families);
  doc["technical_condition"]["pass"] = tech.pass;
  Json margins = Json::array();
  for (const auto& e : tech.entries)
    margins.push_back(Json::array({e.theta0, e.margin}));
  doc["technical_condition"]["margins"] = margins;
  Json exc = Json::array();
  for (echreeb::Pole p : {echreeb::Pole::north, echreeb::Pole::south}) {
    const auto data = echreeb::exceptional_rotation(profile, p);
    Json e;
    e["pole"] = (p == echreeb::Pole::north) ? "0" : "pi";
    e["action"] = data.action;
    e["rotation"] = echreeb::surd_to_json(data.rotation);
    e["rotation_float"] = data.rotation.to_double();
    exc.push_back(e);
  }
  doc["exceptional_orbits"] = exc;
  emit(doc, out, format);
  return tech.pass ? 0 : 1;
}

int cmd_perturb(const std::string& profile_path, double rho, const std::string& eps_text,
                const std::string& c_text, double delta, double cutoff, bool twisted,
                const std::string& out, const std::string& format) {
  const echreeb::Surd eps = parse_exact(eps_text);
  const echreeb::Surd c = parse_exact(c_text);
  Json doc;
  if (twisted) {
    if (!profile_path.empty()) {
      const auto profile = load_profile(profile_path);
      doc["catalog"] = echreeb::catalog_to_json(echreeb::twisted_catalog(profile, cutoff, delta));
    } else {
      const echreeb::FormProfile profile(echreeb::taubes_modifier(eps, c));
      doc["catalog"] = echreeb::catalog_to_json(echreeb::twisted_catalog(profile, cutoff, delta));
    }
    doc["modifier_is_zero"] = echreeb::taubes_modifier(eps, c).is_zero();
    emit(doc, out, format);
    return 0;
  }
  const auto result = echreeb::build_lambda_A(rho, eps, c, delta, cutoff);
  doc["modifier_is_zero"] = result.profile.exponent().is_zero();
  doc["profile"] = echreeb::profile_to_json(result.profile);
  doc["catalog"] = echreeb::catalog_to_json(result.catalog);
  doc["neighborhood"] = echreeb::neighborhood_to_json(result.neighborhood);
  emit(doc, out, format);
  return 0;
}

int cmd_verify(const std::string& profile_path, double cutoff, const std::string& out,
               const std::string& format) {
  const auto profile = load_profile(profile_path);
  const auto mb = echreeb::morse_bott_catalog(profile, cutoff);
  Json rows = Json::array();
  bool ok = true;

  const int threads = thread_count();
  std::vector<echreeb::ReturnMapReport> reports(mb.families.size());
  std::vector<double> measured(mb.families.size());
  if (threads > 1) {
    std::vector<std::future<void>> futures;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t)
      futures.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < mb.families.size(); i = next++) {
          measured[i] = echreeb::measure_period(profile, mb.families[i]);
          reports[i] = echreeb::linearized_return(profile, mb.families[i]);
        }
      }));
    for (auto& f : futures) f.get();
  } else {
    for (std::size_t i = 0; i < mb.families.size(); ++i) {
      measured[i] = echreeb::measure_period(profile, mb.families[i]);
      reports[i] = echreeb::linearized_return(profile, mb.families[i]);
    }
  }

  for (std::size_t i = 0; i < mb.families.size(); ++i) {
    const auto& fam = mb.families[i];
    Json row;
    row["theta0"] = fam.theta0;
    row["predicted"] = fam.action;
    row["measured"] = measured[i];
    row["abs_error"] = std::abs(measured[i] - fam.action);
    row.update(echreeb::return_map_to_json(reports[i]));
    // Step-halving convergence check.
    const double refined = echreeb::measure_period(profile, fam, 1 << 15);
    row["step_halving_delta"] = std::abs(refined - measured[i]);
    if (row["abs_error"].get<double>() > 1e-6 || row["step_halving_delta"].get<double>() > 1e-8)
      ok = false;
    rows.push_back(row);
  }
  for (echreeb::Pole p : {echreeb::Pole::north, echreeb::Pole::south}) {
    const auto exact = echreeb::exceptional_rotation(profile, p);
    const auto rep = echreeb::linearized_return_pole(profile, p);
    Json row;
    row["pole"] = (p == echreeb::Pole::north) ? "0" : "pi";
    row["predicted"] = exact.action;
    row["measured"] = echreeb::measure_pole_period(profile, p);
    row["abs_error"] = std::abs(row["measured"].get<double>() - exact.action);
    row.update(echreeb::return_map_to_json(rep));
    row["rotation_exact"] = echreeb::surd_to_json(exact.rotation);
    row["rotation_abs_error"] = std::abs(rep.rotation - exact.rotation.to_double());
    if (row["abs_error"].get<double>() > 1e-6 || row["rotation_abs_error"].get<double>() > 1e-5)
      ok = false;
    rows.push_back(row);
  }
  Json doc;
  doc["orbits"] = rows;
  doc["pass"] = ok;
  emit(doc, out, format);
  return ok ? 0 : 1;
}

int cmd_index(const std::string& curves_path, const std::string& out, const std::string& format) {
  const auto doc_in = load_curves(curves_path);
  Json rows = Json::array();
  for (std::size_t i = 0; i < doc_in.components.size(); ++i) {
    const auto& comp = doc_in.components[i];
    Json row;
    row["id"] = comp.id;
    row["c_tau"] = comp.c_tau;
    row["q_tau"] = comp.q_tau;
    row["fredholm_index"] = echreeb::fredholm_index(comp);
    Json table = Json::array();
    for (long long d : doc_in.multiplicities[i]) {
      Json entry;
      entry["multiplicity"] = d;
      entry["ech_index"] = echreeb::ech_index(comp, d);
      long long cz_I = 0, cz_ind = 0;
      for (const auto& e : comp.ends) {
        const long long total = echreeb::cz_total(e.orbit, d * e.multiplicity);
        const long long single = echreeb::cz(e.orbit, e.multiplicity);
        cz_I += e.positive ? total : -total;
        cz_ind += e.positive ? single : -single;
      }
      entry["cz_index_sum"] = cz_I;
      entry["cz_fredholm_sum"] = cz_ind;
      table.push_back(entry);
    }
    row["table"] = table;
    rows.push_back(row);
  }
  Json doc;
  doc["components"] = rows;
  emit(doc, out, format);
  return 0;
}

int cmd_generators(const std::string& profile_path, double cutoff, double delta, long long gamma,
                   bool twisted, double rho, bool has_rho, const std::string& out,
                   const std::string& format) {
  const auto profile = load_profile(profile_path);
  const echreeb::OrbitCatalog catalog = twisted
                                            ? echreeb::twisted_catalog(profile, cutoff, delta)
                                            : echreeb::bourgeois_split(profile, cutoff, delta);
  echreeb::EnumerationOptions opts;
  if (has_rho) opts.rho = rho;
  const auto enumerated = echreeb::enumerate_generators(catalog, gamma, cutoff, opts);
  const auto dims = echreeb::filtered_dimensions(catalog, gamma, cutoff, opts);
  Json doc;
  doc["catalog"] = echreeb::catalog_to_json(catalog);
  doc["total_class"] = gamma;
  doc.update(echreeb::generators_to_json(enumerated, dims));
  if (has_rho) doc["rho_gate"] = rho;
  emit(doc, out, format);
  return 0;
}

int cmd_certify(const std::string& curves_path, double rho, double cutoff, const std::string& out,
                const std::string& format) {
  const auto doc_in = load_curves(curves_path);
  Json rows = Json::array();
  bool any_fail = false;
  const auto status_name = [](echreeb::CertStatus s) {
    switch (s) {
      case echreeb::CertStatus::granted: return "granted";
      case echreeb::CertStatus::not_granted: return "not_granted";
      case echreeb::CertStatus::not_applicable: return "not_applicable";
    }
    return "?";
  };
  for (const auto& comp : doc_in.components) {
    Json row;
    row["id"] = comp.id;
    const auto ineq = echreeb::index_inequality_check(comp);
    row["index_inequality"]["pass"] = ineq.pass;
    row["index_inequality"]["slack"] = ineq.slack;
    if (!ineq.pass) any_fail = true;
    const auto at = echreeb::auto_transversality(comp);
    row["transversality"]["status"] = status_name(at.status);
    row["transversality"]["margin"] = at.margin;
    row["index_parity_consistent"] = echreeb::validate_index_parity(comp);
    const auto cc = echreeb::self_intersection(comp, rho);
    row["self_intersection"] = Json::array({cc.num, cc.den});
    Json ends = Json::array();
    for (const auto& e : comp.ends) {
      Json je;
      je["orbit"] = e.orbit.name;
      if (e.orbit.kind == echreeb::OrbitKind::elliptic) {
        je["rho_positive"] = echreeb::rho_positive(e.orbit, rho);
        je["cz_one_window"] = echreeb::cz_one_window(e.orbit);
        const auto part = echreeb::partition_check(e.orbit, e.multiplicity, {e.multiplicity},
                                                   /*positive_side=*/e.positive);
        je["partition"] = status_name(part.status);
        je["partition_note"] = part.reason;
      }
      ends.push_back(je);
    }
    row["ends"] = ends;
    rows.push_back(row);
  }
  Json covers = Json::array();
  for (const auto& [cover, base_id] : doc_in.covers) {
    Json row;
    row["base"] = base_id;
    row["degree"] = cover.degree;
    const auto ci = echreeb::cover_index(cover);
    row["cover_index"] = ci.index;
    row["pullback_index"] = ci.pullback_index;
    row["hypothesis_ok"] = ci.hypothesis_ok;
    if (!ci.hypothesis_note.empty()) row["hypothesis_note"] = ci.hypothesis_note;
    row["index_ge_branch_points"] = ci.index_ge_branch_points;
    const auto sr = echreeb::super_rigidity_certificate(cover);
    row["super_rigidity"]["status"] = status_name(sr.status);
    row["super_rigidity"]["margin"] = sr.margin;
    row["super_rigidity"]["note"] = sr.reason;
    covers.push_back(row);
  }
  Json doc;
  doc["components"] = rows;
  doc["covers"] = covers;
  doc["cutoff"] = cutoff;
  doc["rho"] = rho;
  emit(doc, out, format);
  return any_fail ? 1 : 0;
}

int cmd_paper_checks(double rotation_shift, const std::string& out, const std::string& format) {
  echreeb::AcceptanceOptions opts;
  opts.rotation_shift = rotation_shift;
  const auto results = echreeb::run_acceptance(opts);
  if (format == "table" && out.empty()) {
    echreeb::print_results(std::cout, results);
  } else {
    Json rows = Json::array();
    for (const auto& r : results) {
      Json row;
      row["number"] = r.number;
      row["name"] = r.name;
      row["pass"] = r.pass;
      row["details"] = r.details;
      rows.push_back(row);
    }
    Json doc;
    doc["criteria"] = rows;
    doc["pass"] = echreeb::all_pass(results);
    emit(doc, out, format);
  }
  return echreeb::all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reeb dynamics, orbit catalogs and index calculus for rotation-invariant contact forms on S1 x S2"};
  app.require_subcommand(1);

  std::string profile_path, curves_path, out_path, format = "json";
  double cutoff = 10.0, rho = 5.0, delta = 1e-3, rotation_shift = 0.0;
  std::string eps_text = "1/10", c_text = "2";
  long long gamma = 0;
  bool twisted = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };

  auto* orbits = app.add_subcommand("orbits", "torus families and exceptional orbits of a profile");
  orbits->add_option("--profile", profile_path, "profile document (default: base form)");
  orbits->add_option("--cutoff", cutoff, "action cutoff L");
  add_common(orbits);

  auto* perturb = app.add_subcommand("perturb", "build the nondegenerate orbit catalog");
  perturb->add_option("--profile", profile_path, "profile document (twisted mode only)");
  perturb->add_option("--rho", rho, "energy bound rho");
  perturb->add_option("--epsilon", eps_text, "exact pole rotation, e.g. 1/10 or sqrt(3/2)");
  perturb->add_option("--c", c_text, "exact conformal offset");
  perturb->add_option("--delta", delta, "splitting scale");
  perturb->add_option("--cutoff", cutoff, "action cutoff L");
  perturb->add_flag("--twisted", twisted, "quotient catalog for a twisted boundary component");
  add_common(perturb);

  auto* verify = app.add_subcommand("verify", "numeric oracle for periods and return maps");
  verify->add_option("--profile", profile_path, "profile document (default: base form)");
  verify->add_option("--cutoff", cutoff, "action cutoff L");
  add_common(verify);

  auto* index = app.add_subcommand("index", "index calculus over a formal-curve document");
  index->add_option("--curves", curves_path, "curve document")->required();
  add_common(index);

  auto* generators = app.add_subcommand("generators", "admissible orbit sets below the cutoff");
  generators->add_option("--profile", profile_path, "profile document (default: base form)");
  generators->add_option("--cutoff", cutoff, "action cutoff L");
  generators->add_option("--delta", delta, "splitting scale");
  generators->add_option("--gamma", gamma, "total homology class");
  generators->add_flag("--twisted", twisted, "use the quotient catalog");
  auto* rho_opt = generators->add_option("--rho", rho, "keep only action <= rho");
  add_common(generators);

  auto* certify = app.add_subcommand("certify", "certificate bundle for formal curves and covers");
  certify->add_option("--curves", curves_path, "curve document")->required();
  certify->add_option("--rho", rho, "energy bound for positivity checks");
  certify->add_option("--cutoff", cutoff, "action cutoff L");
  add_common(certify);

  auto* checks = app.add_subcommand("paper-checks", "run the full verification battery");
  checks->add_option("--perturb-rotation", rotation_shift,
                     "diagnostic shift of the index-table rotation class");
  add_common(checks);

  CLI11_PARSE(app, argc, argv);

  try {
    if (orbits->parsed()) return cmd_orbits(profile_path, cutoff, out_path, format);
    if (perturb->parsed())
      return cmd_perturb(profile_path, rho, eps_text, c_text, delta, cutoff, twisted, out_path,
                         format);
    if (verify->parsed()) return cmd_verify(profile_path, cutoff, out_path, format);
    if (index->parsed()) return cmd_index(curves_path, out_path, format);
    if (generators->parsed())
      return cmd_generators(profile_path, cutoff, delta, gamma, twisted, rho,
                            rho_opt->count() > 0, out_path, format);
    if (certify->parsed()) return cmd_certify(curves_path, rho, cutoff, out_path, format);
    if (checks->parsed()) return cmd_paper_checks(rotation_shift, out_path, format);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
