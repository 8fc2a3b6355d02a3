#pragma once

#include "knotconc/gamma.hpp"
#include "knotconc/module.hpp"
#include "knotconc/seifert.hpp"

namespace kc {

// Blanchfield linking form on a torsion Lambda-module, represented by its
// gram matrix over the block generators: Bl(x, y) = sum x_i * gram[i][j] *
// involution(y_j) mod Lambda. Nonsingular and Hermitian by construction.
struct BlanchfieldForm {
  enum class Variant { Diagonal, SeifertDerived };

  Variant variant = Variant::Diagonal;
  LambdaModule ambient;
  std::vector<std::vector<RationalFunction>> gram;
  // Convention tag recorded in reports; pairing values depend on it but
  // self-annihilation verdicts do not.
  std::string convention = "Bl(x,y) = x^T (1-t) (tV - V^T)^{-1} inv(y)";
};

// Diagonal form Bl(e_i, e_j) = delta_ij * c_i / d_i on (+) Lambda/(d_i).
// Each c_i must be a unit times a palindromic polynomial coprime to d_i.
BlanchfieldForm diagonal_form(
    const std::vector<std::pair<LaurentPoly, LaurentPoly>>& pairs);

// The form of the knot with Seifert matrix V on its Alexander module.
// Also returns the presentation coordinates via the PresentedModule.
struct SeifertForm {
  BlanchfieldForm form;
  PresentedModule presentation;
};
SeifertForm seifert_form(const SeifertMatrix& v);

QtModLambda pairing(const BlanchfieldForm& b, const ModuleElement& x,
                    const ModuleElement& y);

// Adjoint kernel triviality, checked on generators.
bool is_nonsingular(const BlanchfieldForm& b);

BlanchfieldForm direct_sum_form(const BlanchfieldForm& b1,
                                const BlanchfieldForm& b2);

// P^perp = { y : Bl(x, y) = 0 for all x in P }.
Submodule orthogonal_complement(const BlanchfieldForm& b, const Submodule& p);

struct SelfAnnihilationReport {
  bool holds = false;
  bool p_in_perp = false;  // all generator pairings vanish
  bool perp_in_p = false;  // complement generators certified members of P
  Submodule complement;
};

SelfAnnihilationReport self_annihilation_report(const BlanchfieldForm& b,
                                                const Submodule& p);
bool is_self_annihilating(const BlanchfieldForm& b, const Submodule& p);

// All self-annihilating submodules for modules built from primary cyclic
// blocks Lambda/(p^e), e <= 2, one block per prime. Squarefree blocks admit
// none; Lambda/(p^2) admits exactly (p). Throws for shapes (such as repeated
// primes across blocks) where enumeration is a moduli problem:
// "enumeration unsupported; use is_self_annihilating on candidate".
std::vector<Submodule> enumerate_self_annihilating(const BlanchfieldForm& b);

// The data (x, Bl) determining the metabelian representation phi_x.
struct MetabelianRepDescriptor {
  const BlanchfieldForm* form = nullptr;
  ModuleElement base;  // x
};

// phi_x evaluated on homology-level input: y must be supplied as the class
// of y*mu^{-eps(y)}; returns (Bl(x, y), eps_y).
GammaElement phi_image_on_homology(const MetabelianRepDescriptor& desc,
                                   const ModuleElement& y, long eps_y);

}  // namespace kc
