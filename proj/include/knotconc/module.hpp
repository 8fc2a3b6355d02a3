#pragma once

#include <string>
#include <vector>

#include "knotconc/snf.hpp"

namespace kc {

// Finitely generated torsion Lambda-module, a direct sum of cyclic pieces
// Lambda/(d_i). Factors are monic ordinary nonunit polynomials with nonzero
// constant term. The stored order is the working ("block") coordinate
// system; the canonical divisibility chain is available via
// invariant_factors() / chain_view().
struct LambdaModule {
  std::vector<LaurentPoly> blocks;
  std::vector<std::string> labels;

  LambdaModule() = default;
  explicit LambdaModule(std::vector<LaurentPoly> factors,
                        std::vector<std::string> names = {});

  size_t rank() const { return blocks.size(); }
  bool is_trivial() const { return blocks.empty(); }
  bool operator==(const LambdaModule& o) const { return blocks == o.blocks; }

  // lcm of the block factors; annihilates every element.
  LaurentPoly annihilator() const;

  // Invariant factors d_1 | d_2 | ... (unit factors dropped).
  std::vector<LaurentPoly> invariant_factors() const;
};

struct ModuleElement {
  std::vector<LaurentPoly> coords;  // one per block, reduced mod the block

  bool is_zero() const;
  bool operator==(const ModuleElement& o) const { return coords == o.coords; }
  bool operator!=(const ModuleElement& o) const { return !(*this == o); }
};

ModuleElement zero_element(const LambdaModule& m);
ModuleElement generator(const LambdaModule& m, size_t i);
// Reduces raw coordinates to canonical representatives.
ModuleElement make_element(const LambdaModule& m,
                           std::vector<LaurentPoly> raw);
ModuleElement add(const LambdaModule& m, const ModuleElement& x,
                  const ModuleElement& y);
ModuleElement negate(const LambdaModule& m, const ModuleElement& x);
ModuleElement scalar_action(const LambdaModule& m, const LaurentPoly& p,
                            const ModuleElement& x);
LaurentPoly element_annihilator(const LambdaModule& m, const ModuleElement& x);

// Projection of x onto the p-primary part of the module (identity on blocks
// whose annihilator is a power of p, zero on blocks coprime to p).
ModuleElement primary_component(const LambdaModule& m, const ModuleElement& x,
                                const LaurentPoly& p);

// Presentation cokernel Lambda^m / A*Lambda^n (columns of A are relations).
struct PresentedModule {
  LambdaModule module;
  // Change of coordinates between presentation space Lambda^m and the
  // canonical cyclic decomposition; kept[i] is the SNF diagonal index of
  // block i.
  PolyMatrix to_canonical, from_canonical;
  std::vector<size_t> kept;

  ModuleElement project(const std::vector<LaurentPoly>& v) const;
  std::vector<LaurentPoly> lift(const ModuleElement& x) const;
};

PresentedModule module_from_presentation(const PolyMatrix& a);

// Direct sum in block coordinates, with the obvious embeddings.
LambdaModule direct_sum(const LambdaModule& m1, const LambdaModule& m2);
ModuleElement embed_first(const LambdaModule& m1, const LambdaModule& m2,
                          const ModuleElement& x);
ModuleElement embed_second(const LambdaModule& m1, const LambdaModule& m2,
                           const ModuleElement& y);
ModuleElement project_first(const LambdaModule& m1, const LambdaModule& m2,
                            const ModuleElement& z);
ModuleElement project_second(const LambdaModule& m1, const LambdaModule& m2,
                             const ModuleElement& z);

// Canonical chain decomposition with element transport both ways.
struct ChainView {
  LambdaModule chain;
  PolyMatrix to_chain, from_chain;
  std::vector<size_t> kept;

  ModuleElement transport(const LambdaModule& source,
                          const ModuleElement& x) const;
  ModuleElement transport_back(const LambdaModule& source,
                               const ModuleElement& c) const;
};

ChainView chain_view(const LambdaModule& m);

struct Submodule {
  LambdaModule ambient;
  std::vector<ModuleElement> generators;

  Submodule() = default;
  Submodule(LambdaModule amb, std::vector<ModuleElement> gens);
  bool is_zero() const;
};

Submodule zero_submodule(const LambdaModule& m);
Submodule full_submodule(const LambdaModule& m);

// Membership with coefficient certificate: x = sum c_i * gen_i (mod the
// block relations). Throws on ambient rank mismatch.
std::optional<std::vector<LaurentPoly>> submodule_membership(
    const ModuleElement& x, const Submodule& s);
bool submodule_contains(const Submodule& s, const ModuleElement& x);
bool submodule_includes(const Submodule& big, const Submodule& small);
bool submodule_equal(const Submodule& a, const Submodule& b);

}  // namespace kc
