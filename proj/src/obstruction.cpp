#include "knotconc/obstruction.hpp"

#include <sstream>

namespace kc {

namespace {

std::string seifert_label(const SeifertMatrix& v) {
  std::ostringstream out;
  out << "seifert[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ";";
    for (size_t j = 0; j < v.size(); ++j) {
      if (j) out << ",";
      out << v.at(i, j);
    }
  }
  out << "]";
  return out.str();
}

// Merges terms with equal (k, companion) labels, dropping cancellations.
std::vector<std::pair<long, SatelliteKnot>> merge_terms(
    const LinearCombination& l) {
  std::vector<std::pair<long, SatelliteKnot>> merged;
  std::vector<std::string> keys;
  for (auto& [a, knot] : l.terms) {
    std::string key =
        std::to_string(knot.k) + "|" + companion_label(knot.companion);
    size_t idx = 0;
    while (idx < keys.size() && keys[idx] != key) ++idx;
    if (idx == keys.size()) {
      keys.push_back(key);
      merged.emplace_back(a, knot);
    } else {
      merged[idx].first += a;
    }
  }
  std::vector<std::pair<long, SatelliteKnot>> out;
  for (size_t i = 0; i < merged.size(); ++i)
    if (merged[i].first != 0) out.push_back(merged[i]);
  return out;
}

// Companion eligibility: Arf = 0 and rho != 0. Symbolic companions carry
// these as declared assumptions.
bool companion_eligible(const Companion& c, long prec, std::string& reason,
                        std::vector<std::string>& assumptions) {
  if (auto* v = std::get_if<SeifertMatrix>(&c)) {
    if (arf_invariant(*v) != 0) {
      reason = "companion has Arf invariant 1";
      return false;
    }
    if (!companion_rho(c, prec).provably_nonzero()) {
      reason = "companion rho-invariant is zero (or not provably nonzero)";
      return false;
    }
    return true;
  }
  assumptions.push_back("symbolic companion " + companion_label(c) +
                        ": Arf = 0 and rho != 0 assumed; symbols declared "
                        "Z-linearly independent");
  return true;
}

}  // namespace

std::string companion_label(const Companion& c) {
  if (auto* v = std::get_if<SeifertMatrix>(&c)) return seifert_label(*v);
  return std::get<std::string>(c);
}

SatelliteKnot::SatelliteKnot(unsigned k_, Companion companion_,
                             std::string name_)
    : k(k_), companion(std::move(companion_)), name(std::move(name_)) {
  if (!is_in_T(k))
    throw std::invalid_argument(
        "satellite index must have at least three distinct prime factors");
  LaurentPoly phi = cyclotomic(k);
  pattern_module = LambdaModule({phi * phi});
  axis_class = generator(pattern_module, 0);
  if (name.empty())
    name = "K_" + std::to_string(k) + "(" + companion_label(companion) + ")";
}

RhoValue companion_rho(const Companion& c, long prec) {
  if (auto* v = std::get_if<SeifertMatrix>(&c)) {
    RhoIntegral r = rho_integral(*v, prec);
    if (r.exact) return RhoValue::rational(*r.exact);
    return RhoValue::enclosed(r.lo, r.hi);
  }
  return RhoValue::symbol(std::get<std::string>(c));
}

RhoValue rho_of_element(const SatelliteKnot& k, const ModuleElement& x,
                        long prec) {
  LaurentPoly phi = cyclotomic(k.k);
  for (auto& c : x.coords)
    if (!c.is_zero() && !divides(phi, c))
      throw std::invalid_argument(
          "element outside reduced case; apply phi-multiplication first");
  if (x.is_zero()) return RhoValue::zero();
  return companion_rho(k.companion, prec);
}

ModuleElement reduce_to_phi_block(const LambdaModule& m, unsigned k,
                                  const ModuleElement& x) {
  if (x.is_zero())
    throw std::invalid_argument("cannot reduce the zero element");
  LaurentPoly phi = cyclotomic(k);
  bool reduced = true;
  for (auto& c : x.coords)
    if (!c.is_zero() && !divides(phi, c)) reduced = false;
  if (reduced) return x;
  ModuleElement y = scalar_action(m, phi, x);
  if (y.is_zero())
    throw std::logic_error("phi-multiplication unexpectedly vanished");
  return y;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Obstructed:
      return "Obstructed";
    case Verdict::NotApplicable:
      return "NotApplicable";
    default:
      return "Vanishes";
  }
}

CertificateReport independence_certificate(const LinearCombination& l,
                                           long prec) {
  CertificateReport rep;
  auto merged = merge_terms(l);
  rep.trace.push_back("merged combination has " +
                      std::to_string(merged.size()) + " nonzero term(s)");
  if (merged.empty()) {
    rep.verdict = Verdict::Vanishes;
    rep.trace.push_back("all coefficients vanish: trivial combination");
    return rep;
  }
  for (size_t i = 0; i < merged.size(); ++i)
    for (size_t j = i + 1; j < merged.size(); ++j)
      if (merged[i].second.k == merged[j].second.k)
        throw std::invalid_argument("coprimality hypothesis violated");

  long a1 = merged[0].first;
  const SatelliteKnot& knot = merged[0].second;
  if (a1 < 0) {
    a1 = -a1;
    rep.trace.push_back("sign normalization: replaced " + knot.name +
                        " by its mirror so that a_1 > 0");
  }

  std::string reason;
  std::vector<std::string> assumptions;
  if (!companion_eligible(knot.companion, prec, reason, assumptions)) {
    rep.verdict = Verdict::NotApplicable;
    rep.trace.push_back(reason);
    return rep;
  }
  rep.trace.insert(rep.trace.end(), assumptions.begin(), assumptions.end());
  rep.trace.push_back(
      "each K_k is (1)-solvable by assumption (recorded, not verified)");

  // Splitting reduction: distinct k give pairwise coprime Phi_k, so any
  // self-annihilating submodule splits blockwise and it suffices to obstruct
  // inside the (+)^{a_1} Lambda/(Phi_{k_1}^2) block.
  rep.trace.push_back("splitting reduction isolates the (+)^" +
                      std::to_string(a1) + " Lambda/(Phi_" +
                      std::to_string(knot.k) + "^2) block");

  std::vector<LaurentPoly> blocks(
      (size_t)a1, knot.pattern_module.blocks[0]);
  LambdaModule block_module(blocks);
  std::vector<LaurentPoly> coords((size_t)a1);
  coords[0] = LaurentPoly::one();
  ModuleElement x = make_element(block_module, coords);
  ModuleElement reduced = reduce_to_phi_block(block_module, knot.k, x);
  rep.trace.push_back(
      "universal argument, per the independence proposition: any nonzero "
      "self-annihilating submodule contains a nonzero element with all "
      "coordinates in (Phi_k); witness built from a representative class");

  long tally = 0;
  for (auto& c : reduced.coords)
    if (!c.is_zero()) ++tally;
  rep.trace.push_back("epsilon tally: " + std::to_string(tally) +
                      " nonzero coordinate(s), all contributions share one "
                      "sign, epsilon_1 = 1");

  RhoValue rho = companion_rho(knot.companion, prec).scaled(tally);
  rep.verdict = Verdict::Obstructed;
  rep.witness = CertificateWitness{reduced, rho};
  rep.trace.push_back("witness rho = " + rho.str() + " != 0");
  return rep;
}

CertificateReport family_independence(const LinearCombination& l) {
  CertificateReport rep;
  auto merged = merge_terms(l);
  rep.trace.push_back("merged combination has " +
                      std::to_string(merged.size()) + " nonzero term(s)");
  if (merged.empty()) {
    rep.verdict = Verdict::Vanishes;
    rep.trace.push_back("all coefficients vanish: trivial combination");
    return rep;
  }

  // Group by k: blocks for distinct k split off by coprimality.
  unsigned k1 = merged[0].second.k;
  std::vector<std::pair<long, SatelliteKnot>> group;
  for (auto& t : merged)
    if (t.second.k == k1) group.push_back(t);
  rep.trace.push_back("coprime splitting isolates the k = " +
                      std::to_string(k1) + " block with " +
                      std::to_string(group.size()) + " companion(s)");

  long a1 = group[0].first;
  const SatelliteKnot& knot = group[0].second;
  if (a1 < 0) {
    a1 = -a1;
    rep.trace.push_back("sign normalization: replaced " + knot.name +
                        " by its mirror so that a_1 > 0");
  }
  std::string reason;
  std::vector<std::string> assumptions;
  if (!companion_eligible(knot.companion, 50, reason, assumptions)) {
    rep.verdict = Verdict::NotApplicable;
    rep.trace.push_back(reason);
    return rep;
  }
  rep.trace.insert(rep.trace.end(), assumptions.begin(), assumptions.end());

  std::vector<LaurentPoly> blocks(
      (size_t)a1, knot.pattern_module.blocks[0]);
  LambdaModule block_module(blocks);
  std::vector<LaurentPoly> coords((size_t)a1);
  coords[0] = LaurentPoly::one();
  ModuleElement reduced =
      reduce_to_phi_block(block_module, k1, make_element(block_module, coords));
  rep.trace.push_back(
      "universal argument: reduced witness has a nonzero coordinate in the "
      "sub-block of " + knot.name);

  RhoValue rho = companion_rho(knot.companion);
  rep.verdict = Verdict::Obstructed;
  rep.witness = CertificateWitness{reduced, rho};
  rep.trace.push_back("witness rho = " + rho.str() +
                      " != 0 under the declared Z-independence");
  return rep;
}

}  // namespace kc
