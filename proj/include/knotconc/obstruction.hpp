#pragma once

#include <variant>

#include "knotconc/signature.hpp"
#include "knotconc/splitting.hpp"

namespace kc {

// Companion data of a satellite knot: a Seifert matrix (numeric rho) or a
// formal symbol declared rho-independent over Z.
using Companion = std::variant<SeifertMatrix, std::string>;

std::string companion_label(const Companion& c);

// Invariant-level satellite descriptor K'_k(eta_k, J): pattern module
// Lambda/(Phi_k^2) with the axis class generating it.
struct SatelliteKnot {
  unsigned k = 0;
  LambdaModule pattern_module;
  ModuleElement axis_class;
  Companion companion;
  std::string name;

  SatelliteKnot(unsigned k_, Companion companion_, std::string name_ = "");
};

// rho(companion): exact or enclosed for Seifert matrices, a unit symbol
// coefficient for formal companions.
RhoValue companion_rho(const Companion& c, long prec = 50);

// rho(M_K, phi_x) = eps * rho(J) for x in the reduced submodule (Phi_k);
// eps = 1 iff x != 0. Throws "element outside reduced case; apply
// phi-multiplication first" when some coordinate is outside (Phi_k).
RhoValue rho_of_element(const SatelliteKnot& k, const ModuleElement& x,
                        long prec = 50);

// For nonzero x in (+)^a Lambda/(Phi_k^2): x itself when every coordinate
// lies in (Phi_k), otherwise Phi_k * x, which is again nonzero.
ModuleElement reduce_to_phi_block(const LambdaModule& m, unsigned k,
                                  const ModuleElement& x);

struct LinearCombination {
  std::vector<std::pair<long, SatelliteKnot>> terms;
};

enum class Verdict { Obstructed, NotApplicable, Vanishes };

std::string verdict_str(Verdict v);

struct CertificateWitness {
  ModuleElement element;  // reduced class in the isolated Phi_k block
  RhoValue rho;           // nonzero for Obstructed verdicts
};

struct CertificateReport {
  Verdict verdict = Verdict::Vanishes;
  std::optional<CertificateWitness> witness;
  std::vector<std::string> trace;
};

// Proposition 4.3-style linear-independence certificate for a combination
// a_1 K_{k_1} # ... # a_l K_{k_l} with pairwise distinct k and one
// companion per knot. Throws "coprimality hypothesis violated" when two
// nonzero terms share k with different companions.
CertificateReport independence_certificate(const LinearCombination& l,
                                           long prec = 50);

// Proposition 4.4: combinations of K^i_k with symbolic companions J_i;
// terms with equal (k, companion) labels merge, distinct companions may
// share k.
CertificateReport family_independence(const LinearCombination& l);

}  // namespace kc
