#pragma once

#include <json.hpp>

#include "knotconc/obstruction.hpp"
#include "knotconc/signature.hpp"
#include "knotconc/splitting.hpp"

namespace kc {

using Json = nlohmann::json;

// Polynomial literal: sparse list of [exponent, "num/den"] pairs.
LaurentPoly poly_from_json(const Json& j);
Json poly_to_json(const LaurentPoly& p);

Json ratfunc_to_json(const RationalFunction& r);
Json gamma_to_json(const GammaElement& g);

// Knot descriptor {"name": ..., "seifert": [[..],..]}; a bare preset name
// ("trefoil", "figure8", "J", "unknot") may stand alone.
SeifertMatrix seifert_from_json(const Json& j);
SeifertMatrix knot_from_json(const Json& j);
Json seifert_to_json(const SeifertMatrix& v);

// Module literal {"cyclic_factors": [poly,...]}; element literal is a list
// of poly literals, validated as reduced coordinates.
LambdaModule module_from_json(const Json& j);
Json module_to_json(const LambdaModule& m);
ModuleElement element_from_json(const LambdaModule& m, const Json& j);
Json element_to_json(const ModuleElement& x);
Json submodule_to_json(const Submodule& s);

// Form literal {"diagonal": [{"d": poly, "c": poly},...]} or
// {"seifert": matrix}.
BlanchfieldForm form_from_json(const Json& j);

Json signature_function_to_json(const SignatureFunction& s);
Json rho_integral_to_json(const RhoIntegral& r);
Json rho_value_to_json(const RhoValue& r);

Json splitting_result_to_json(const SplittingResult& r);

// Certify input {"terms": [{"a": int, "k": int, "companion":
// "preset"|{"symbol":...}|{"seifert": matrix}}]}.
LinearCombination combination_from_json(const Json& j);
Json certificate_to_json(const CertificateReport& r);

}  // namespace kc
