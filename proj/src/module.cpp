#include "knotconc/module.hpp"

#include <algorithm>

namespace kc {

namespace {

LaurentPoly canonical_factor(const LaurentPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("zero cyclic factor");
  LaurentPoly n = normalize_unit(d);
  n = n.scaled(1 / n.leading());
  if (n.span() == 0)
    throw std::invalid_argument("unit cyclic factor defines trivial block");
  return n;
}

}  // namespace

LambdaModule::LambdaModule(std::vector<LaurentPoly> factors,
                           std::vector<std::string> names) {
  for (auto& f : factors) blocks.push_back(canonical_factor(f));
  if (!names.empty() && names.size() != blocks.size())
    throw std::invalid_argument("label count mismatch");
  labels = std::move(names);
  if (labels.empty())
    for (size_t i = 0; i < blocks.size(); ++i)
      labels.push_back("e" + std::to_string(i + 1));
}

LaurentPoly LambdaModule::annihilator() const {
  LaurentPoly a = LaurentPoly::one();
  for (auto& d : blocks) a = poly_lcm(a, d);
  return a;
}

std::vector<LaurentPoly> LambdaModule::invariant_factors() const {
  return chain_view(*this).chain.blocks;
}

bool ModuleElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const LaurentPoly& c) { return c.is_zero(); });
}

ModuleElement zero_element(const LambdaModule& m) {
  return ModuleElement{std::vector<LaurentPoly>(m.rank())};
}

ModuleElement generator(const LambdaModule& m, size_t i) {
  if (i >= m.rank()) throw std::out_of_range("generator index");
  ModuleElement x = zero_element(m);
  x.coords[i] = LaurentPoly::one();
  return x;
}

ModuleElement make_element(const LambdaModule& m,
                           std::vector<LaurentPoly> raw) {
  if (raw.size() != m.rank())
    throw std::invalid_argument("coordinate count mismatch");
  ModuleElement x;
  x.coords.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i)
    x.coords.push_back(reduce_in_quotient(raw[i], m.blocks[i]));
  return x;
}

ModuleElement add(const LambdaModule& m, const ModuleElement& x,
                  const ModuleElement& y) {
  std::vector<LaurentPoly> raw(m.rank());
  for (size_t i = 0; i < m.rank(); ++i) raw[i] = x.coords[i] + y.coords[i];
  return make_element(m, std::move(raw));
}

ModuleElement negate(const LambdaModule& m, const ModuleElement& x) {
  std::vector<LaurentPoly> raw(m.rank());
  for (size_t i = 0; i < m.rank(); ++i) raw[i] = -x.coords[i];
  return make_element(m, std::move(raw));
}

ModuleElement scalar_action(const LambdaModule& m, const LaurentPoly& p,
                            const ModuleElement& x) {
  std::vector<LaurentPoly> raw(m.rank());
  for (size_t i = 0; i < m.rank(); ++i) raw[i] = p * x.coords[i];
  return make_element(m, std::move(raw));
}

LaurentPoly element_annihilator(const LambdaModule& m,
                                const ModuleElement& x) {
  LaurentPoly a = LaurentPoly::one();
  for (size_t i = 0; i < m.rank(); ++i) {
    if (x.coords[i].is_zero()) continue;
    LaurentPoly g = poly_gcd(m.blocks[i], x.coords[i]);
    a = poly_lcm(a, exact_div(m.blocks[i], g));
  }
  return a;
}

ModuleElement primary_component(const LambdaModule& m, const ModuleElement& x,
                                const LaurentPoly& p) {
  if (p.is_zero() || p.is_unit())
    throw std::invalid_argument("primary part requires a nonunit prime");
  LaurentPoly rest = m.annihilator();
  LaurentPoly ppart = LaurentPoly::one();
  while (divides(p, rest)) {
    rest = exact_div(rest, p);
    ppart *= p;
  }
  Bezout bz = gcd_bezout(ppart, rest);
  if (bz.g != LaurentPoly::one())
    throw std::invalid_argument("annihilator does not split coprimely at p");
  return scalar_action(m, bz.h * rest, x);
}

ModuleElement PresentedModule::project(
    const std::vector<LaurentPoly>& v) const {
  std::vector<LaurentPoly> c = to_canonical.apply(v);
  std::vector<LaurentPoly> raw;
  raw.reserve(kept.size());
  for (size_t i : kept) raw.push_back(c[i]);
  return make_element(module, std::move(raw));
}

std::vector<LaurentPoly> PresentedModule::lift(const ModuleElement& x) const {
  std::vector<LaurentPoly> c(from_canonical.cols());
  for (size_t i = 0; i < kept.size(); ++i) c[kept[i]] = x.coords[i];
  return from_canonical.apply(c);
}

PresentedModule module_from_presentation(const PolyMatrix& a) {
  SnfResult s = smith_normal_form(a);
  if (s.rank < a.rows())
    throw std::domain_error("module not torsion");
  PresentedModule pm;
  std::vector<LaurentPoly> factors;
  for (size_t i = 0; i < a.rows(); ++i) {
    const LaurentPoly& d = s.D.at(i, i);
    if (d.span() > 0) {
      pm.kept.push_back(i);
      factors.push_back(d);
    }
  }
  pm.module = LambdaModule(std::move(factors));
  pm.to_canonical = std::move(s.U);
  pm.from_canonical = std::move(s.Uinv);
  return pm;
}

LambdaModule direct_sum(const LambdaModule& m1, const LambdaModule& m2) {
  LambdaModule m;
  m.blocks = m1.blocks;
  m.blocks.insert(m.blocks.end(), m2.blocks.begin(), m2.blocks.end());
  for (auto& l : m1.labels) m.labels.push_back("L." + l);
  for (auto& l : m2.labels) m.labels.push_back("R." + l);
  return m;
}

ModuleElement embed_first(const LambdaModule& m1, const LambdaModule& m2,
                          const ModuleElement& x) {
  ModuleElement z{x.coords};
  z.coords.resize(m1.rank() + m2.rank());
  return z;
}

ModuleElement embed_second(const LambdaModule& m1, const LambdaModule& m2,
                           const ModuleElement& y) {
  ModuleElement z;
  z.coords.assign(m1.rank(), LaurentPoly());
  z.coords.insert(z.coords.end(), y.coords.begin(), y.coords.end());
  return z;
}

ModuleElement project_first(const LambdaModule& m1, const LambdaModule&,
                            const ModuleElement& z) {
  return ModuleElement{{z.coords.begin(), z.coords.begin() + m1.rank()}};
}

ModuleElement project_second(const LambdaModule& m1, const LambdaModule&,
                             const ModuleElement& z) {
  return ModuleElement{{z.coords.begin() + m1.rank(), z.coords.end()}};
}

ChainView chain_view(const LambdaModule& m) {
  PolyMatrix diag(m.rank(), m.rank());
  for (size_t i = 0; i < m.rank(); ++i) diag.at(i, i) = m.blocks[i];
  SnfResult s = smith_normal_form(diag);
  ChainView cv;
  std::vector<LaurentPoly> factors;
  for (size_t i = 0; i < m.rank(); ++i) {
    if (s.D.at(i, i).span() > 0) {
      cv.kept.push_back(i);
      factors.push_back(s.D.at(i, i));
    }
  }
  cv.chain = LambdaModule(std::move(factors));
  cv.to_chain = std::move(s.U);
  cv.from_chain = std::move(s.Uinv);
  return cv;
}

ModuleElement ChainView::transport(const LambdaModule& source,
                                   const ModuleElement& x) const {
  std::vector<LaurentPoly> c = to_chain.apply(x.coords);
  std::vector<LaurentPoly> raw;
  for (size_t i : kept) raw.push_back(c[i]);
  return make_element(chain, std::move(raw));
}

ModuleElement ChainView::transport_back(const LambdaModule& source,
                                        const ModuleElement& c) const {
  std::vector<LaurentPoly> full(from_chain.cols());
  for (size_t i = 0; i < kept.size(); ++i) full[kept[i]] = c.coords[i];
  return make_element(source, from_chain.apply(full));
}

Submodule::Submodule(LambdaModule amb, std::vector<ModuleElement> gens)
    : ambient(std::move(amb)), generators(std::move(gens)) {
  for (auto& g : generators)
    if (g.coords.size() != ambient.rank())
      throw std::invalid_argument("generator outside ambient module");
}

bool Submodule::is_zero() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const ModuleElement& g) { return g.is_zero(); });
}

Submodule zero_submodule(const LambdaModule& m) {
  return Submodule(m, {zero_element(m)});
}

Submodule full_submodule(const LambdaModule& m) {
  std::vector<ModuleElement> gens;
  for (size_t i = 0; i < m.rank(); ++i) gens.push_back(generator(m, i));
  return Submodule(m, std::move(gens));
}

std::optional<std::vector<LaurentPoly>> submodule_membership(
    const ModuleElement& x, const Submodule& s) {
  const LambdaModule& m = s.ambient;
  if (x.coords.size() != m.rank())
    throw std::invalid_argument("element outside ambient module");
  const size_t ng = s.generators.size();
  PolyMatrix b(m.rank(), ng + m.rank());
  for (size_t j = 0; j < ng; ++j)
    for (size_t i = 0; i < m.rank(); ++i)
      b.at(i, j) = s.generators[j].coords[i];
  for (size_t i = 0; i < m.rank(); ++i) b.at(i, ng + i) = m.blocks[i];
  auto sol = solve_linear(b, x.coords);
  if (!sol) return std::nullopt;
  sol->resize(ng);
  return sol;
}

bool submodule_contains(const Submodule& s, const ModuleElement& x) {
  return submodule_membership(x, s).has_value();
}

bool submodule_includes(const Submodule& big, const Submodule& small) {
  return std::all_of(
      small.generators.begin(), small.generators.end(),
      [&](const ModuleElement& g) { return submodule_contains(big, g); });
}

bool submodule_equal(const Submodule& a, const Submodule& b) {
  return submodule_includes(a, b) && submodule_includes(b, a);
}

}  // namespace kc
