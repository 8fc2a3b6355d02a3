#pragma once

#include "knotconc/ratfunc.hpp"

namespace kc {

// Element of Gamma = Q(t)/Lambda x| Z, the first rationally universal group.
// The Z-component is generated by t acting on Q(t)/Lambda by multiplication.
struct GammaElement {
  QtModLambda coset;
  long exponent = 0;

  bool operator==(const GammaElement& o) const {
    return exponent == o.exponent && coset == o.coset;
  }
  bool operator!=(const GammaElement& o) const { return !(*this == o); }
  bool is_identity() const { return exponent == 0 && coset.is_zero(); }
};

GammaElement gamma_multiply(const GammaElement& a, const GammaElement& b);
GammaElement gamma_inverse(const GammaElement& a);
GammaElement gamma_commutator(const GammaElement& a, const GammaElement& b);

}  // namespace kc
