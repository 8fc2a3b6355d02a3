#include "knotconc/blanchfield.hpp"

#include <algorithm>

namespace kc {

namespace {

// Inverse of a square matrix over Q(t) by Gaussian elimination.
std::vector<std::vector<RationalFunction>> invert_over_qt(
    const PolyMatrix& a) {
  const size_t n = a.rows();
  std::vector<std::vector<RationalFunction>> m(
      n, std::vector<RationalFunction>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = RationalFunction(a.at(i, j));
    m[i][n + i] = RationalFunction(LaurentPoly::one());
  }
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) throw std::domain_error("singular presentation");
    std::swap(m[p], m[k]);
    RationalFunction piv = m[k][k];
    for (size_t j = 0; j < 2 * n; ++j) m[k][j] = m[k][j] / piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k].is_zero()) continue;
      RationalFunction f = m[i][k];
      for (size_t j = 0; j < 2 * n; ++j) m[i][j] = m[i][j] - f * m[k][j];
    }
  }
  std::vector<std::vector<RationalFunction>> inv(
      n, std::vector<RationalFunction>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

// Row of pairing coefficients c_j(t) = sum_i g_i * gram[i][j] for a fixed
// first argument g; Bl(g, y) = sum_j c_j * involution(y_j).
std::vector<RationalFunction> pairing_row(const BlanchfieldForm& b,
                                          const ModuleElement& g) {
  const size_t m = b.ambient.rank();
  std::vector<RationalFunction> row(m);
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < m; ++i)
      row[j] = row[j] + RationalFunction(g.coords[i]) * b.gram[i][j];
  return row;
}

}  // namespace

BlanchfieldForm diagonal_form(
    const std::vector<std::pair<LaurentPoly, LaurentPoly>>& pairs) {
  std::vector<LaurentPoly> blocks;
  std::vector<LaurentPoly> coeffs;
  for (auto& [d, c] : pairs) {
    if (d.is_zero() || d.is_unit())
      throw std::invalid_argument("diagonal form needs nonunit block factors");
    LaurentPoly dn = normalize_unit(d);
    if (!dn.is_palindromic())
      throw std::invalid_argument(
          "diagonal form blocks must be palindromic up to a unit");
    if (c.is_zero() || !normalize_unit(c).is_palindromic())
      throw std::invalid_argument(
          "diagonal form coefficient must be a unit times a palindromic "
          "polynomial");
    if (gcd_bezout(c, d).g != LaurentPoly::one())
      throw std::invalid_argument(
          "diagonal form coefficient must be coprime to its block factor");
    // Fix the t-power unit on c so that c/d is Hermitian-symmetric mod
    // Lambda: with d, c0 palindromic, involution(t^k c0)/involution(d) is
    // t^k c0 / d exactly when 2k = deg d - deg c0.
    LaurentPoly c0 = normalize_unit(c);
    long shift = dn.degree() - c0.degree();
    if (shift % 2 != 0)
      throw std::invalid_argument(
          "diagonal form entry admits no Hermitian unit adjustment");
    blocks.push_back(dn);
    coeffs.push_back(c0.shifted(shift / 2));
  }
  BlanchfieldForm b;
  b.variant = BlanchfieldForm::Variant::Diagonal;
  b.ambient = LambdaModule(blocks);
  b.convention = "diagonal Bl(e_i, e_i) = c_i / d_i, unit-adjusted Hermitian";
  const size_t m = pairs.size();
  b.gram.assign(m, std::vector<RationalFunction>(m));
  for (size_t i = 0; i < m; ++i)
    b.gram[i][i] = RationalFunction(coeffs[i], b.ambient.blocks[i]);
  return b;
}

SeifertForm seifert_form(const SeifertMatrix& v) {
  PolyMatrix a = alexander_presentation(v);
  SeifertForm sf;
  sf.presentation = module_from_presentation(a);
  BlanchfieldForm& b = sf.form;
  b.variant = BlanchfieldForm::Variant::SeifertDerived;
  b.ambient = sf.presentation.module;
  const size_t m = b.ambient.rank();
  b.gram.assign(m, std::vector<RationalFunction>(m));
  if (m == 0) return sf;

  auto inv = invert_over_qt(a);
  RationalFunction one_minus_t(LaurentPoly::one() - LaurentPoly::t());
  std::vector<std::vector<LaurentPoly>> lifts(m);
  for (size_t i = 0; i < m; ++i)
    lifts[i] = sf.presentation.lift(generator(b.ambient, i));
  const size_t n = v.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      RationalFunction acc;
      for (size_t s = 0; s < n; ++s) {
        if (lifts[i][s].is_zero()) continue;
        for (size_t r = 0; r < n; ++r) {
          if (lifts[j][r].is_zero()) continue;
          acc = acc + RationalFunction(lifts[i][s]) * inv[s][r] *
                          RationalFunction(lifts[j][r].involution());
        }
      }
      b.gram[i][j] = one_minus_t * acc;
    }
  return sf;
}

QtModLambda pairing(const BlanchfieldForm& b, const ModuleElement& x,
                    const ModuleElement& y) {
  const size_t m = b.ambient.rank();
  if (x.coords.size() != m || y.coords.size() != m)
    throw std::invalid_argument("element does not live in the form's module");
  RationalFunction val;
  for (size_t i = 0; i < m; ++i) {
    if (x.coords[i].is_zero()) continue;
    for (size_t j = 0; j < m; ++j) {
      if (y.coords[j].is_zero() || b.gram[i][j].is_zero()) continue;
      val = val + RationalFunction(x.coords[i]) * b.gram[i][j] *
                      RationalFunction(y.coords[j].involution());
    }
  }
  return reduce_mod_lambda(val);
}

bool is_nonsingular(const BlanchfieldForm& b) {
  if (b.ambient.is_trivial()) return true;
  return orthogonal_complement(b, full_submodule(b.ambient)).is_zero();
}

BlanchfieldForm direct_sum_form(const BlanchfieldForm& b1,
                                const BlanchfieldForm& b2) {
  BlanchfieldForm b;
  b.variant = b1.variant == b2.variant ? b1.variant
                                       : BlanchfieldForm::Variant::Diagonal;
  b.ambient = direct_sum(b1.ambient, b2.ambient);
  b.convention = b1.convention == b2.convention
                     ? b1.convention
                     : b1.convention + " (+) " + b2.convention;
  const size_t m1 = b1.ambient.rank(), m2 = b2.ambient.rank();
  b.gram.assign(m1 + m2, std::vector<RationalFunction>(m1 + m2));
  for (size_t i = 0; i < m1; ++i)
    for (size_t j = 0; j < m1; ++j) b.gram[i][j] = b1.gram[i][j];
  for (size_t i = 0; i < m2; ++i)
    for (size_t j = 0; j < m2; ++j) b.gram[m1 + i][m1 + j] = b2.gram[i][j];
  return b;
}

Submodule orthogonal_complement(const BlanchfieldForm& b, const Submodule& p) {
  if (!(p.ambient == b.ambient))
    throw std::invalid_argument("submodule is not in the form's module");
  const size_t m = b.ambient.rank();
  const size_t r = p.generators.size();
  if (r == 0 || m == 0) return full_submodule(b.ambient);

  // Each condition Bl(g, y) = 0 becomes, after clearing the row's common
  // denominator L, a Lambda-linear congruence sum_j n_j w_j = 0 mod L in the
  // involuted coordinates w_j = involution(y_j).
  PolyMatrix k(r, m + r);
  for (size_t row = 0; row < r; ++row) {
    auto c = pairing_row(b, p.generators[row]);
    LaurentPoly l = LaurentPoly::one();
    for (auto& cj : c) l = poly_lcm(l, cj.den());
    for (size_t j = 0; j < m; ++j)
      if (!c[j].is_zero())
        k.at(row, j) = c[j].num() * exact_div(l, c[j].den());
    k.at(row, m + row) = l;
  }

  std::vector<ModuleElement> gens;
  for (auto& w : kernel_basis(k)) {
    std::vector<LaurentPoly> coords(m);
    for (size_t j = 0; j < m; ++j) coords[j] = w[j].involution();
    ModuleElement y = make_element(b.ambient, std::move(coords));
    if (!y.is_zero()) gens.push_back(std::move(y));
  }
  if (gens.empty()) return zero_submodule(b.ambient);
  return Submodule(b.ambient, std::move(gens));
}

SelfAnnihilationReport self_annihilation_report(const BlanchfieldForm& b,
                                                const Submodule& p) {
  SelfAnnihilationReport rep;
  rep.p_in_perp = true;
  for (auto& x : p.generators)
    for (auto& y : p.generators)
      if (!pairing(b, x, y).is_zero()) rep.p_in_perp = false;
  rep.complement = orthogonal_complement(b, p);
  rep.perp_in_p = submodule_includes(p, rep.complement);
  rep.holds = rep.p_in_perp && rep.perp_in_p;
  return rep;
}

bool is_self_annihilating(const BlanchfieldForm& b, const Submodule& p) {
  // Cheap gate first: P (subset) P^perp needs only pairings, no complement.
  for (auto& x : p.generators)
    for (auto& y : p.generators)
      if (!pairing(b, x, y).is_zero()) return false;
  return self_annihilation_report(b, p).holds;
}

std::vector<Submodule> enumerate_self_annihilating(const BlanchfieldForm& b) {
  const LambdaModule& m = b.ambient;
  if (m.is_trivial()) return {zero_submodule(m)};

  // Radical and exponent of each block; supported blocks are p or p^2.
  std::vector<LaurentPoly> radicals;
  std::vector<int> exps;
  for (auto& d : m.blocks) {
    // Blocks are stored monic, so the radical and its square are comparable
    // directly.
    LaurentPoly rad = exact_div(d, poly_gcd(d, d.derivative()));
    rad = rad.scaled(1 / rad.leading());
    if (rad == d)
      exps.push_back(1);
    else if (rad * rad == d)
      exps.push_back(2);
    else
      throw std::invalid_argument(
          "enumeration unsupported; use is_self_annihilating on candidate");
    radicals.push_back(rad);
  }
  for (size_t i = 0; i < radicals.size(); ++i)
    for (size_t j = i + 1; j < radicals.size(); ++j)
      if (gcd_bezout(radicals[i], radicals[j]).g != LaurentPoly::one())
        throw std::invalid_argument(
            "enumeration unsupported; use is_self_annihilating on candidate");

  // A squarefree block admits no self-annihilating submodule at all.
  for (int e : exps)
    if (e == 1) return {};

  std::vector<ModuleElement> gens;
  for (size_t i = 0; i < m.rank(); ++i)
    gens.push_back(scalar_action(m, radicals[i], generator(m, i)));
  return {Submodule(m, std::move(gens))};
}

GammaElement phi_image_on_homology(const MetabelianRepDescriptor& desc,
                                   const ModuleElement& y, long eps_y) {
  if (!desc.form) throw std::invalid_argument("descriptor has no form");
  return {pairing(*desc.form, desc.base, y), eps_y};
}

}  // namespace kc
