#include <pybind11/pybind11.h>

#include "knotconc/json_io.hpp"

namespace py = pybind11;
using kc::Json;

namespace {

Json to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    Json j = Json::object();
    for (auto item : obj.cast<py::dict>())
      j[item.first.cast<std::string>()] = to_json(item.second);
    return j;
  }
  if (py::isinstance<py::sequence>(obj)) {
    Json j = Json::array();
    for (auto item : obj.cast<py::sequence>()) j.push_back(to_json(item));
    return j;
  }
  throw py::type_error("cannot convert value to JSON");
}

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (auto& e : j) out.append(to_py(e));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default:
      throw py::value_error("unsupported JSON value");
  }
}

kc::Submodule submodule_from_json(const kc::LambdaModule& m, const Json& j) {
  std::vector<kc::ModuleElement> gens;
  for (auto& e : j) gens.push_back(kc::element_from_json(m, e));
  if (gens.empty()) return kc::zero_submodule(m);
  return kc::Submodule(m, std::move(gens));
}

py::object py_alexander(const py::object& knot) {
  kc::SeifertMatrix v = kc::knot_from_json(to_json(knot));
  kc::LaurentPoly d = kc::alexander_polynomial(v);
  return to_py(Json{{"alexander", kc::poly_to_json(d)},
                    {"alexander_str", d.str()}});
}

int py_arf(const py::object& knot) {
  return kc::arf_invariant(kc::knot_from_json(to_json(knot)));
}

py::object py_signature(const py::object& knot, long precision) {
  kc::SeifertMatrix v = kc::knot_from_json(to_json(knot));
  Json j = kc::signature_function_to_json(kc::signature_function(v, precision));
  j["sigma_at_minus_one"] =
      kc::levine_tristram_at(v, kc::UnitCirclePoint::minus_one());
  return to_py(j);
}

py::object py_rho(const py::object& knot, long precision) {
  kc::SeifertMatrix v = kc::knot_from_json(to_json(knot));
  return to_py(kc::rho_integral_to_json(kc::rho_integral(v, precision)));
}

py::object py_blanchfield(const py::object& input) {
  Json in = to_json(input);
  kc::BlanchfieldForm form = in.contains("form")
                                 ? kc::form_from_json(in.at("form"))
                                 : kc::form_from_json(in);
  Json j{{"module", kc::module_to_json(form.ambient)},
         {"nonsingular", kc::is_nonsingular(form)},
         {"convention", form.convention}};
  if (in.contains("p")) {
    kc::Submodule p = submodule_from_json(form.ambient, in.at("p"));
    kc::SelfAnnihilationReport rep = kc::self_annihilation_report(form, p);
    j["self_annihilating"] = rep.holds;
    j["p_in_perp"] = rep.p_in_perp;
    j["perp_in_p"] = rep.perp_in_p;
    j["complement"] = kc::submodule_to_json(rep.complement);
  }
  return to_py(j);
}

py::object py_split(const py::object& input) {
  Json in = to_json(input);
  kc::BlanchfieldForm b1 = kc::form_from_json(in.at("form1"));
  kc::BlanchfieldForm b2 = kc::form_from_json(in.at("form2"));
  kc::LambdaModule m = kc::direct_sum(b1.ambient, b2.ambient);
  kc::Submodule p = submodule_from_json(m, in.at("p"));
  return to_py(kc::splitting_result_to_json(kc::split_submodule(b1, b2, p)));
}

py::object py_certify(const py::object& input, long precision, bool family) {
  kc::LinearCombination l = kc::combination_from_json(to_json(input));
  kc::CertificateReport rep = family
                                  ? kc::family_independence(l)
                                  : kc::independence_certificate(l, precision);
  return to_py(kc::certificate_to_json(rep));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact knot concordance toolkit";

  m.def("alexander", &py_alexander, py::arg("knot"),
        "Alexander polynomial of a knot descriptor.");
  m.def("arf", &py_arf, py::arg("knot"), "Arf invariant of a knot.");
  m.def("signature", &py_signature, py::arg("knot"), py::arg("precision") = 50,
        "Levine-Tristram signature function with jump data.");
  m.def("rho", &py_rho, py::arg("knot"), py::arg("precision") = 50,
        "Integral of the signature function over the unit circle.");
  m.def("blanchfield", &py_blanchfield, py::arg("input"),
        "Blanchfield form report, optionally with a submodule check.");
  m.def("split", &py_split, py::arg("input"),
        "Coprime splitting of a submodule of a direct sum of forms.");
  m.def("certify", &py_certify, py::arg("input"), py::arg("precision") = 50,
        py::arg("family") = false,
        "Linear-independence certificate for a combination of satellites.");
}
