#include "knotconc/json_io.hpp"

namespace kc {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational literal must be an integer or string");
}

}  // namespace

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument("polynomial literal must be an array");
  LaurentPoly p;
  for (auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw std::invalid_argument(
          "polynomial term must be an [exponent, coefficient] pair");
    long e = term[0].get<long>();
    p += LaurentPoly::term(rational_from_json(term[1]), e);
  }
  return p;
}

Json poly_to_json(const LaurentPoly& p) {
  Json j = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    j.push_back(Json::array({it->first, rational_str(it->second)}));
  return j;
}

Json ratfunc_to_json(const RationalFunction& r) {
  return Json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

Json gamma_to_json(const GammaElement& g) {
  return Json{{"coset", ratfunc_to_json(g.coset.rep())},
              {"exponent", g.exponent}};
}

SeifertMatrix seifert_from_json(const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument("seifert matrix must be an array of rows");
  std::vector<std::vector<long>> rows;
  for (auto& r : j) rows.push_back(r.get<std::vector<long>>());
  return SeifertMatrix(std::move(rows));
}

SeifertMatrix knot_from_json(const Json& j) {
  std::string name;
  if (j.is_string())
    name = j.get<std::string>();
  else if (j.is_object() && j.contains("seifert"))
    return seifert_from_json(j.at("seifert"));
  else if (j.is_object() && j.contains("name"))
    name = j.at("name").get<std::string>();
  else if (j.is_array())
    return seifert_from_json(j);
  else
    throw std::invalid_argument("knot descriptor needs a name or a matrix");

  if (name == "trefoil") return SeifertMatrix::trefoil();
  if (name == "figure8") return SeifertMatrix::figure_eight();
  if (name == "J")
    return connected_sum(SeifertMatrix::trefoil(), SeifertMatrix::trefoil());
  if (name == "unknot") return SeifertMatrix::unknot();
  throw std::invalid_argument("unknown knot preset: " + name);
}

Json seifert_to_json(const SeifertMatrix& v) {
  Json j = Json::array();
  for (auto& row : v.entries()) j.push_back(row);
  return j;
}

LambdaModule module_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cyclic_factors"))
    throw std::invalid_argument("module literal needs cyclic_factors");
  std::vector<LaurentPoly> factors;
  for (auto& f : j.at("cyclic_factors")) factors.push_back(poly_from_json(f));
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j.at("labels").get<std::vector<std::string>>();
  return LambdaModule(std::move(factors), std::move(labels));
}

Json module_to_json(const LambdaModule& m) {
  Json factors = Json::array();
  for (auto& d : m.blocks) factors.push_back(poly_to_json(d));
  Json j{{"cyclic_factors", factors}};
  if (!m.labels.empty()) j["labels"] = m.labels;
  return j;
}

ModuleElement element_from_json(const LambdaModule& m, const Json& j) {
  if (!j.is_array() || j.size() != m.rank())
    throw std::invalid_argument(
        "element literal needs one coordinate per cyclic factor");
  std::vector<LaurentPoly> coords;
  for (auto& c : j) coords.push_back(poly_from_json(c));
  ModuleElement x = make_element(m, coords);
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != x.coords[i])
      throw std::invalid_argument(
          "element coordinate " + std::to_string(i) +
          " is not reduced modulo its cyclic factor");
  return x;
}

Json element_to_json(const ModuleElement& x) {
  Json j = Json::array();
  for (auto& c : x.coords) j.push_back(poly_to_json(c));
  return j;
}

Json submodule_to_json(const Submodule& s) {
  Json j = Json::array();
  for (auto& g : s.generators) j.push_back(element_to_json(g));
  return j;
}

BlanchfieldForm form_from_json(const Json& j) {
  if (j.is_object() && j.contains("diagonal")) {
    std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs;
    for (auto& e : j.at("diagonal"))
      pairs.emplace_back(poly_from_json(e.at("d")),
                         e.contains("c") ? poly_from_json(e.at("c"))
                                         : LaurentPoly::one());
    return diagonal_form(pairs);
  }
  if (j.is_object() && j.contains("seifert"))
    return seifert_form(seifert_from_json(j.at("seifert"))).form;
  throw std::invalid_argument("form literal needs diagonal or seifert data");
}

Json signature_function_to_json(const SignatureFunction& s) {
  Json jumps = Json::array();
  for (auto& jump : s.jumps) {
    Json e{{"lo", rational_str(jump.u.lo)}, {"hi", rational_str(jump.u.hi)}};
    if (jump.exact_u) e["exact_u"] = rational_str(*jump.exact_u);
    jumps.push_back(e);
  }
  return Json{{"jumps", jumps},
              {"arc_values", s.arc_values},
              {"cyclotomic", s.cyclotomic_flag}};
}

Json rho_integral_to_json(const RhoIntegral& r) {
  Json j{{"lo", rational_str(r.lo)},
         {"hi", rational_str(r.hi)},
         {"width", rational_str(r.width())}};
  if (r.exact) j["exact"] = rational_str(*r.exact);
  return j;
}

Json rho_value_to_json(const RhoValue& r) {
  Json j{{"string", r.str()}};
  if (r.exact_known) j["exact"] = rational_str(r.exact);
  if (r.enclosure)
    j["enclosure"] = Json::array({rational_str(r.enclosure->first),
                                  rational_str(r.enclosure->second)});
  if (!r.symbols.empty()) {
    Json s = Json::object();
    for (auto& [name, c] : r.symbols) s[name] = c;
    j["symbols"] = s;
  }
  return j;
}

Json splitting_result_to_json(const SplittingResult& r) {
  return Json{{"f", poly_to_json(r.f)},
              {"g", poly_to_json(r.g)},
              {"p1", submodule_to_json(r.p1)},
              {"p2", submodule_to_json(r.p2)},
              {"checks",
               {{"bezout_identity", r.checks.bezout_identity},
                {"sum_in_p", r.checks.sum_in_p},
                {"p_in_sum", r.checks.p_in_sum},
                {"p_self_annihilating", r.checks.p_self_annihilating},
                {"transfer_verified", r.checks.transfer_verified}}}};
}

LinearCombination combination_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw std::invalid_argument("combination literal needs terms");
  LinearCombination l;
  for (auto& t : j.at("terms")) {
    long a = t.at("a").get<long>();
    unsigned k = t.at("k").get<unsigned>();
    const Json& comp = t.at("companion");
    Companion c;
    if (comp.is_object() && comp.contains("symbol"))
      c = comp.at("symbol").get<std::string>();
    else if (comp.is_object() && comp.contains("seifert"))
      c = seifert_from_json(comp.at("seifert"));
    else
      c = knot_from_json(comp);
    std::string name;
    if (t.contains("name")) name = t.at("name").get<std::string>();
    l.terms.emplace_back(a, SatelliteKnot(k, std::move(c), std::move(name)));
  }
  return l;
}

Json certificate_to_json(const CertificateReport& r) {
  Json j{{"verdict", verdict_str(r.verdict)}, {"trace", r.trace}};
  if (r.witness)
    j["witness"] = Json{{"element", element_to_json(r.witness->element)},
                        {"rho", rho_value_to_json(r.witness->rho)}};
  return j;
}

}  // namespace kc
