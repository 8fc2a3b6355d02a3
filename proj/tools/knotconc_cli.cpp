#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "knotconc/json_io.hpp"

namespace {

using kc::Json;

Json read_input(const std::string& path) {
  if (path.empty() || path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return Json::parse(in);
}

struct Output {
  bool pretty = false;

  void emit(const Json& j) const {
    if (pretty)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << j.dump() << "\n";
  }
};

kc::Submodule submodule_from_json(const kc::LambdaModule& m, const Json& j) {
  std::vector<kc::ModuleElement> gens;
  for (auto& e : j) gens.push_back(kc::element_from_json(m, e));
  if (gens.empty()) return kc::zero_submodule(m);
  return kc::Submodule(m, std::move(gens));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact knot concordance toolkit"};
  app.require_subcommand(1);

  long precision = 50;
  bool pretty = false;
  bool json_out = true;
  app.add_option("--precision", precision,
                 "enclosure width exponent (width <= 2^-precision)")
      ->capture_default_str();
  app.add_flag("--json,!--no-json", json_out, "JSON output (default)");
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string in_alex, in_arf, in_sig, in_rho, in_bl, in_split, in_cert;
  std::string expect;
  bool family = false;

  auto* alex = app.add_subcommand("alex", "Alexander polynomial of a knot");
  alex->add_option("input", in_alex, "knot descriptor JSON (- for stdin)");

  auto* arf = app.add_subcommand("arf", "Arf invariant of a knot");
  arf->add_option("input", in_arf, "knot descriptor JSON (- for stdin)");

  auto* sig = app.add_subcommand(
      "signature", "Levine-Tristram signature function of a knot");
  sig->add_option("input", in_sig, "knot descriptor JSON (- for stdin)");

  auto* rho = app.add_subcommand(
      "rho", "integral of the signature function over the circle");
  rho->add_option("input", in_rho, "knot descriptor JSON (- for stdin)");

  auto* bl = app.add_subcommand(
      "blanchfield", "Blanchfield form report, optionally on a submodule");
  bl->add_option("input", in_bl,
                 "{form literal, optional \"p\": [element,...]} JSON");

  auto* split = app.add_subcommand(
      "split", "coprime splitting of a submodule of a direct sum");
  split->add_option("input", in_split,
                    "{\"form1\", \"form2\", \"p\"} scenario JSON");

  auto* cert = app.add_subcommand(
      "certify", "linear-independence certificate for a combination");
  cert->add_option("input", in_cert, "{\"terms\": [...]} JSON");
  cert->add_option("--expect", expect,
                   "expected verdict; exit 0 iff the verdict matches");
  cert->add_flag("--family", family,
                 "use the shared-k family certificate (Prop 4.4 style)");

  CLI11_PARSE(app, argc, argv);
  Output out{pretty};

  try {
    if (*alex) {
      kc::SeifertMatrix v = kc::knot_from_json(read_input(in_alex));
      out.emit(Json{{"alexander", kc::poly_to_json(
                                      kc::alexander_polynomial(v))},
                    {"alexander_str", kc::alexander_polynomial(v).str()}});
    } else if (*arf) {
      kc::SeifertMatrix v = kc::knot_from_json(read_input(in_arf));
      out.emit(Json{{"arf", kc::arf_invariant(v)}});
    } else if (*sig) {
      kc::SeifertMatrix v = kc::knot_from_json(read_input(in_sig));
      kc::SignatureFunction s = kc::signature_function(v, precision);
      Json j = kc::signature_function_to_json(s);
      j["sigma_at_minus_one"] =
          kc::levine_tristram_at(v, kc::UnitCirclePoint::minus_one());
      out.emit(j);
    } else if (*rho) {
      kc::SeifertMatrix v = kc::knot_from_json(read_input(in_rho));
      out.emit(kc::rho_integral_to_json(kc::rho_integral(v, precision)));
    } else if (*bl) {
      Json in = read_input(in_bl);
      kc::BlanchfieldForm form =
          in.contains("form") ? kc::form_from_json(in.at("form"))
                              : kc::form_from_json(in);
      Json j{{"module", kc::module_to_json(form.ambient)},
             {"nonsingular", kc::is_nonsingular(form)},
             {"convention", form.convention}};
      if (in.contains("p")) {
        kc::Submodule p = submodule_from_json(form.ambient, in.at("p"));
        kc::SelfAnnihilationReport rep =
            kc::self_annihilation_report(form, p);
        j["self_annihilating"] = rep.holds;
        j["p_in_perp"] = rep.p_in_perp;
        j["perp_in_p"] = rep.perp_in_p;
        j["complement"] = kc::submodule_to_json(rep.complement);
      }
      out.emit(j);
    } else if (*split) {
      Json in = read_input(in_split);
      kc::BlanchfieldForm b1 = kc::form_from_json(in.at("form1"));
      kc::BlanchfieldForm b2 = kc::form_from_json(in.at("form2"));
      kc::LambdaModule m = kc::direct_sum(b1.ambient, b2.ambient);
      kc::Submodule p = submodule_from_json(m, in.at("p"));
      kc::SplittingResult res = kc::split_submodule(b1, b2, p);
      out.emit(kc::splitting_result_to_json(res));
      bool ok = res.checks.bezout_identity && res.checks.sum_in_p &&
                res.checks.p_in_sum && res.checks.p_self_annihilating &&
                res.checks.transfer_verified;
      return ok ? 0 : 1;
    } else if (*cert) {
      kc::LinearCombination l =
          kc::combination_from_json(read_input(in_cert));
      kc::CertificateReport rep =
          family ? kc::family_independence(l)
                 : kc::independence_certificate(l, precision);
      out.emit(kc::certificate_to_json(rep));
      if (!expect.empty() && kc::verdict_str(rep.verdict) != expect) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
