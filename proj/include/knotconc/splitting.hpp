#pragma once

#include <map>
#include <optional>

#include "knotconc/blanchfield.hpp"

namespace kc {

// A rho-invariant value: exact rational part (or a rigorous enclosure when
// the signature integral is not exactly computable) plus a formal Z-linear
// combination of companion symbols, declared linearly independent over Z.
struct RhoValue {
  Rational exact = 0;
  bool exact_known = true;
  std::optional<std::pair<Rational, Rational>> enclosure;
  std::map<std::string, long> symbols;

  static RhoValue zero() { return {}; }
  static RhoValue rational(const Rational& r);
  static RhoValue symbol(const std::string& name, long coeff = 1);
  static RhoValue enclosed(const Rational& lo, const Rational& hi);

  bool is_zero() const;
  // Nonzero beyond doubt: exact nonzero rational, enclosure excluding 0, or
  // a nonzero symbol combination (under the declared Z-independence).
  bool provably_nonzero() const;

  RhoValue operator+(const RhoValue& o) const;
  RhoValue scaled(long c) const;
  bool operator==(const RhoValue& o) const;

  std::string str() const;
};

enum class Side { First, Second };

// rho of a connected sum under a representation supported on one factor:
// the other factor carries the zero representation and contributes 0.
RhoValue rho_additivity(const RhoValue& rho1, const RhoValue& rho2,
                        Side x_side);

struct SplittingChecks {
  bool bezout_identity = false;        // f*D1 + g*D2 = 1 exactly
  bool sum_in_p = false;               // P1 (+) P2 contained in P
  bool p_in_sum = false;               // P contained in P1 (+) P2
  bool p_self_annihilating = false;    // hypothesis status of the input
  bool transfer_verified = false;      // both factors self-annihilating
};

struct SplittingResult {
  LaurentPoly f, g;  // f*annihilator(M1) + g*annihilator(M2) = 1
  Submodule p1, p2;
  SplittingChecks checks;
};

// Constructive content of the coprime splitting theorem: P1 = image of P
// under z -> g*D2*z in the first block, P2 likewise via f*D1.
// Throws "hypothesis of Theorem 3.2 violated" for non-coprime annihilators.
SplittingResult split_submodule(const BlanchfieldForm& b1,
                                const BlanchfieldForm& b2,
                                const Submodule& p);

struct TheoremReport {
  bool verified = false;
  std::vector<std::string> failed_hypotheses;
  std::vector<std::string> assumptions;
  SplittingResult splitting;
  std::vector<RhoValue> rho_on_p1, rho_on_p2;
};

// Machine-checked instantiation of the splitting theorem: hypothesis gates
// (coprimality, self-annihilation of P, rho vanishing on the listed
// generators), then the conclusion data with rho transported by additivity.
// rho_table lists one value per generator of P.
TheoremReport verify_splitting_theorem(const BlanchfieldForm& b1,
                                       const BlanchfieldForm& b2,
                                       const Submodule& p,
                                       const std::vector<RhoValue>& rho_table);

}  // namespace kc
