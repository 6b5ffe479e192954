#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "echreeb/acceptance.hpp"
#include "echreeb/flow.hpp"
#include "echreeb/generators.hpp"
#include "echreeb/index.hpp"
#include "echreeb/json_io.hpp"
#include "echreeb/manifold.hpp"
#include "echreeb/perturb.hpp"

namespace py = pybind11;
using namespace echreeb;

namespace {

Surd surd_from_object(const py::object& obj) {
  if (py::isinstance<Surd>(obj)) return obj.cast<Surd>();
  if (py::isinstance<py::int_>(obj)) return Surd(obj.cast<long long>());
  if (py::isinstance<py::float_>(obj)) return Surd::from_double(obj.cast<double>());
  if (py::isinstance<py::tuple>(obj) || py::isinstance<py::list>(obj)) {
    const auto seq = obj.cast<std::vector<long long>>();
    if (seq.size() == 2) return Surd::rational(seq[0], seq[1]);
    if (seq.size() == 4) return Surd::rational(seq[0], seq[1]) + Surd(0, seq[2], seq[3]);
  }
  throw py::type_error("expected Surd, int, float, (num, den) or (num, den, surd_num, surd_den)");
}

}  // namespace

PYBIND11_MODULE(_echreeb, m) {
  m.doc() = "Reeb dynamics, nondegenerate orbit catalogs and index calculus for "
            "rotation-invariant contact forms on S1 x S2";

  py::class_<Surd>(m, "Surd")
      .def(py::init([](const py::object& o) { return surd_from_object(o); }))
      .def_static("sqrt6", &Surd::sqrt6)
      .def_static("rational",
                  [](long long num, long long den) { return Surd::rational(num, den); })
      .def_static("from_float", &Surd::from_double)
      .def("__float__", &Surd::to_double)
      .def("__str__", &Surd::str)
      .def("__repr__", [](const Surd& s) { return "Surd(" + s.str() + ")"; })
      .def("__add__", [](const Surd& a, const py::object& b) { return a + surd_from_object(b); })
      .def("__sub__", [](const Surd& a, const py::object& b) { return a - surd_from_object(b); })
      .def("__mul__", [](const Surd& a, const py::object& b) { return a * surd_from_object(b); })
      .def("__truediv__",
           [](const Surd& a, const py::object& b) { return a / surd_from_object(b); })
      .def("__neg__", [](const Surd& a) { return -a; })
      .def("__eq__", [](const Surd& a, const py::object& b) { return a == surd_from_object(b); })
      .def("__lt__", [](const Surd& a, const py::object& b) { return a < surd_from_object(b); })
      .def("floor", [](const Surd& s) { return s.floor().convert_to<long long>(); })
      .def("mod1", &Surd::mod1)
      .def("sign", &Surd::sign);

  py::enum_<Pole>(m, "Pole").value("north", Pole::north).value("south", Pole::south);
  py::enum_<OrbitKind>(m, "OrbitKind")
      .value("elliptic", OrbitKind::elliptic)
      .value("positive_hyperbolic", OrbitKind::positive_hyperbolic)
      .value("negative_hyperbolic", OrbitKind::negative_hyperbolic);
  py::enum_<LPositivity>(m, "LPositivity")
      .value("positive", LPositivity::positive)
      .value("not_positive", LPositivity::not_positive)
      .value("not_applicable", LPositivity::not_applicable);
  py::enum_<OrbitClass>(m, "OrbitClass")
      .value("elliptic", OrbitClass::elliptic)
      .value("positive_hyperbolic", OrbitClass::positive_hyperbolic)
      .value("negative_hyperbolic", OrbitClass::negative_hyperbolic)
      .value("degenerate_shear", OrbitClass::degenerate_shear);
  py::enum_<CertStatus>(m, "CertStatus")
      .value("granted", CertStatus::granted)
      .value("not_granted", CertStatus::not_granted)
      .value("not_applicable", CertStatus::not_applicable);

  py::class_<FormProfile>(m, "FormProfile")
      .def_static("taubes", &FormProfile::taubes)
      .def_static("modified",
                  [](const py::object& eps, const py::object& c) {
                    return FormProfile(taubes_modifier(surd_from_object(eps), surd_from_object(c)));
                  },
                  py::arg("eps"), py::arg("c") = py::int_(0))
      .def_static("from_json",
                  [](const std::string& text) { return profile_from_json(Json::parse(text)); })
      .def("to_json", [](const FormProfile& p) { return profile_to_json(p).dump(); })
      .def("a1", &FormProfile::a1)
      .def("a2", &FormProfile::a2)
      .def("evaluate", [](const FormProfile& p, double theta) { return evaluate_profile(p, theta); })
      .def("sigma_symmetric", &FormProfile::sigma_symmetric);

  py::class_<ContactCertificate>(m, "ContactCertificate")
      .def_readonly("pass_", &ContactCertificate::pass)
      .def_readonly("worst_margin", &ContactCertificate::worst_margin)
      .def_readonly("worst_theta", &ContactCertificate::worst_theta);
  m.def("contact_certificate", &contact_certificate, py::arg("profile"),
        py::arg("grid_size") = 4096);

  py::class_<MorseBottFamily>(m, "MorseBottFamily")
      .def_readonly("theta0", &MorseBottFamily::theta0)
      .def_readonly("winding_t", &MorseBottFamily::winding_t)
      .def_readonly("winding_phi", &MorseBottFamily::winding_phi)
      .def_readonly("action", &MorseBottFamily::action)
      .def_readonly("homology_class", &MorseBottFamily::homology_class)
      .def_readonly("contractible", &MorseBottFamily::contractible);
  py::class_<MorseBottCatalog>(m, "MorseBottCatalog")
      .def_readonly("families", &MorseBottCatalog::families)
      .def_readonly("winding_bound", &MorseBottCatalog::winding_bound)
      .def_readonly("cutoff", &MorseBottCatalog::cutoff);
  m.def("morse_bott_catalog", &morse_bott_catalog, py::arg("profile"), py::arg("cutoff"),
        py::arg("grid_size") = 10000);

  py::class_<ExceptionalOrbitData>(m, "ExceptionalOrbitData")
      .def_readonly("pole", &ExceptionalOrbitData::pole)
      .def_readonly("action", &ExceptionalOrbitData::action)
      .def_readonly("rotation", &ExceptionalOrbitData::rotation);
  m.def("exceptional_rotation", &exceptional_rotation);
  m.def("reeb_field", [](const FormProfile& p, double theta) {
    const auto v = reeb_field(p, theta);
    return std::make_pair(v.dt, v.dphi);
  });
  m.def("reeb_at_pole", &reeb_at_pole);

  m.def("measure_period", &measure_period, py::arg("profile"), py::arg("family"),
        py::arg("steps_per_period") = (1 << 14));
  m.def("measure_pole_period", &measure_pole_period, py::arg("profile"), py::arg("pole"),
        py::arg("steps_per_period") = (1 << 14));
  py::class_<ReturnMapReport>(m, "ReturnMapReport")
      .def_readonly("period", &ReturnMapReport::period)
      .def_readonly("classification", &ReturnMapReport::classification)
      .def_readonly("rotation", &ReturnMapReport::rotation)
      .def_readonly("shear", &ReturnMapReport::shear)
      .def_readonly("det_error", &ReturnMapReport::det_error)
      .def_property_readonly("monodromy", [](const ReturnMapReport& r) {
        return std::vector<std::vector<double>>{{r.monodromy[0][0], r.monodromy[0][1]},
                                                {r.monodromy[1][0], r.monodromy[1][1]}};
      });
  m.def("linearized_return", &linearized_return, py::arg("profile"), py::arg("family"),
        py::arg("steps_per_period") = (1 << 14));
  m.def("linearized_return_pole", &linearized_return_pole, py::arg("profile"), py::arg("pole"),
        py::arg("steps_per_period") = (1 << 14));

  py::class_<ReebOrbit>(m, "ReebOrbit")
      .def_readonly("name", &ReebOrbit::name)
      .def_readonly("kind", &ReebOrbit::kind)
      .def_property_readonly("rotation",
                             [](const ReebOrbit& o) -> py::object {
                               if (!o.rotation) return py::none();
                               return py::cast(*o.rotation);
                             })
      .def_readonly("action", &ReebOrbit::action)
      .def_readonly("action_lo", &ReebOrbit::action_lo)
      .def_readonly("action_hi", &ReebOrbit::action_hi)
      .def_readonly("homology_class", &ReebOrbit::homology_class)
      .def_readonly("l_flat", &ReebOrbit::l_flat)
      .def_readonly("l_positive", &ReebOrbit::l_positive)
      .def_readonly("exceptional", &ReebOrbit::exceptional);
  py::class_<OrbitCatalog>(m, "OrbitCatalog")
      .def_readonly("cutoff", &OrbitCatalog::cutoff)
      .def_readonly("delta", &OrbitCatalog::delta)
      .def_readonly("orbits", &OrbitCatalog::orbits)
      .def("to_json", [](const OrbitCatalog& c) { return catalog_to_json(c).dump(2); })
      .def_static("from_json",
                  [](const std::string& text) { return catalog_from_json(Json::parse(text)); });
  m.def("bourgeois_split", &bourgeois_split, py::arg("profile"), py::arg("cutoff"),
        py::arg("delta"), py::arg("grid_size") = 10000);
  m.def("twisted_catalog", &twisted_catalog, py::arg("profile"), py::arg("cutoff"),
        py::arg("delta"), py::arg("grid_size") = 10000);
  m.def("l_positive_check", &l_positive_check);

  py::class_<NeighborhoodSpec>(m, "NeighborhoodSpec")
      .def_readonly("epsilon", &NeighborhoodSpec::epsilon)
      .def_readonly("c", &NeighborhoodSpec::c)
      .def_readonly("kappa", &NeighborhoodSpec::kappa)
      .def_readonly("max_exponent", &NeighborhoodSpec::max_f)
      .def_readonly("inf_exponent", &NeighborhoodSpec::inf_f);
  py::class_<LambdaAResult>(m, "LambdaAResult")
      .def_readonly("profile", &LambdaAResult::profile)
      .def_readonly("catalog", &LambdaAResult::catalog)
      .def_readonly("neighborhood", &LambdaAResult::neighborhood);
  m.def("build_lambda_A",
        [](double rho, const py::object& eps, const py::object& c, double delta, double L) {
          return build_lambda_A(rho, surd_from_object(eps), surd_from_object(c), delta, L);
        },
        py::arg("rho"), py::arg("eps"), py::arg("c"), py::arg("delta"), py::arg("cutoff"));

  py::class_<OrbitRef>(m, "OrbitRef")
      .def_readonly("name", &OrbitRef::name)
      .def_readonly("kind", &OrbitRef::kind)
      .def_readonly("rotation", &OrbitRef::rotation)
      .def_readonly("action", &OrbitRef::action);
  m.def("elliptic_orbit",
        [](const std::string& name, const py::object& rotation, double action) {
          return elliptic_orbit(name, surd_from_object(rotation), action);
        },
        py::arg("name"), py::arg("rotation"), py::arg("action") = 1.0);
  m.def("positive_hyperbolic_orbit", &positive_hyperbolic_orbit, py::arg("name"),
        py::arg("action") = 1.0);
  m.def("negative_hyperbolic_orbit", &negative_hyperbolic_orbit, py::arg("name"),
        py::arg("action") = 1.0);
  m.def("orbit_ref", &orbit_ref);

  py::class_<FormalCurveComponent>(m, "FormalCurveComponent")
      .def_readonly("id", &FormalCurveComponent::id)
      .def_readonly("genus", &FormalCurveComponent::genus)
      .def_readonly("c_tau", &FormalCurveComponent::c_tau)
      .def_readonly("q_tau", &FormalCurveComponent::q_tau);
  m.def("special_plane", &make_special_plane, py::arg("orbit"), py::arg("id") = "plane");
  m.def("special_torus", &make_special_torus, py::arg("id") = "torus");
  m.def("exceptional_sphere", &make_exceptional_sphere, py::arg("id") = "sphere");
  m.def("negative_hyperbolic_plane", &make_negative_hyperbolic_plane, py::arg("orbit"),
        py::arg("id") = "nh-plane");

  m.def("cz", &cz);
  m.def("cz_total", &cz_total);
  m.def("ech_index", &ech_index, py::arg("curve"), py::arg("multiplicity") = 1);
  m.def("fredholm_index", &fredholm_index);
  m.def("cz_one_window", &cz_one_window);
  m.def("rho_positive", &rho_positive);

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("status", &Certificate::status)
      .def_readonly("margin", &Certificate::margin)
      .def_readonly("reason", &Certificate::reason);
  m.def("auto_transversality", &auto_transversality);
  m.def("partition_check", &partition_check, py::arg("orbit"), py::arg("total_multiplicity"),
        py::arg("end_multiplicities"), py::arg("positive_side"));

  py::class_<CoverData>(m, "CoverData")
      .def_readonly("degree", &CoverData::degree)
      .def_readonly("branch_points", &CoverData::branch_points)
      .def_readonly("cover_genus", &CoverData::cover_genus);
  m.def("plane_cover", &plane_cover, py::arg("base"), py::arg("degree"), py::arg("cover_genus"),
        py::arg("end_multiplicities"));
  m.def("identity_cover", &identity_cover);
  py::class_<CoverIndexResult>(m, "CoverIndexResult")
      .def_readonly("index", &CoverIndexResult::index)
      .def_readonly("pullback_index", &CoverIndexResult::pullback_index)
      .def_readonly("hypothesis_ok", &CoverIndexResult::hypothesis_ok)
      .def_readonly("index_ge_branch_points", &CoverIndexResult::index_ge_branch_points);
  m.def("cover_index", &cover_index);
  m.def("pullback_operator_index", &pullback_operator_index);
  m.def("super_rigidity_certificate", &super_rigidity_certificate);
  py::class_<InequalityCheck>(m, "InequalityCheck")
      .def_readonly("pass_", &InequalityCheck::pass)
      .def_readonly("slack", &InequalityCheck::slack);
  m.def("index_inequality_check", &index_inequality_check);
  py::class_<Rational>(m, "Rational")
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("__float__", &Rational::value);
  m.def("self_intersection", &self_intersection);

  py::class_<GeneratorEntry>(m, "GeneratorEntry")
      .def_readonly("orbit", &GeneratorEntry::orbit)
      .def_readonly("multiplicity", &GeneratorEntry::multiplicity);
  py::class_<OrbitSetGenerator>(m, "OrbitSetGenerator")
      .def_readonly("pairs", &OrbitSetGenerator::pairs)
      .def_readonly("action_lo", &OrbitSetGenerator::action_lo)
      .def_readonly("action_hi", &OrbitSetGenerator::action_hi)
      .def_readonly("total_class", &OrbitSetGenerator::total_class)
      .def_readonly("parity", &OrbitSetGenerator::parity);
  py::class_<EnumeratedGenerators>(m, "EnumeratedGenerators")
      .def_readonly("generators", &EnumeratedGenerators::generators)
      .def_readonly("borderline", &EnumeratedGenerators::borderline);
  m.def("enumerate_generators",
        [](const OrbitCatalog& cat, long long gamma, double L, py::object rho) {
          EnumerationOptions opts;
          if (!rho.is_none()) opts.rho = rho.cast<double>();
          return enumerate_generators(cat, gamma, L, opts);
        },
        py::arg("catalog"), py::arg("total_class"), py::arg("cutoff"), py::arg("rho") = py::none());
  m.def("grading_parity", &grading_parity);
  py::class_<FilteredDimensions>(m, "FilteredDimensions")
      .def_readonly("even_count", &FilteredDimensions::even_count)
      .def_readonly("odd_count", &FilteredDimensions::odd_count);
  m.def("filtered_dimensions",
        [](const OrbitCatalog& cat, long long gamma, double L) {
          return filtered_dimensions(cat, gamma, L);
        },
        py::arg("catalog"), py::arg("total_class"), py::arg("cutoff"));

  m.def("spin_c_dimension", &spin_c_dimension);
  m.def("closed_case_index", &closed_case_index);
  py::enum_<GateResult>(m, "GateResult")
      .value("proceed", GateResult::proceed)
      .value("vanish", GateResult::vanish);
  m.def("gate_check", &gate_check);
  m.def("tensor_ordering_sign", &tensor_ordering_sign);

  m.def("run_acceptance", [](double rotation_shift) {
    AcceptanceOptions opts;
    opts.rotation_shift = rotation_shift;
    const auto results = run_acceptance(opts);
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["number"] = r.number;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["details"] = r.details;
      d["seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  }, py::arg("rotation_shift") = 0.0);

  m.attr("PI") = kPi;
  m.attr("CONTACT_STRUCTURE_EULER_NUMBER") = kContactStructureEulerNumber;
#ifdef ECHREEB_VERSION
  m.attr("__version__") = ECHREEB_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
