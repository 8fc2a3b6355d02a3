#include "knotconc/gamma.hpp"

namespace kc {

GammaElement gamma_multiply(const GammaElement& a, const GammaElement& b) {
  // Semidirect product law: (c, m)(d, n) = (c + t^m d, m + n).
  GammaElement r;
  r.coset = a.coset + b.coset.scaled(LaurentPoly::t(a.exponent));
  r.exponent = a.exponent + b.exponent;
  return r;
}

GammaElement gamma_inverse(const GammaElement& a) {
  GammaElement r;
  r.coset = -a.coset.scaled(LaurentPoly::t(-a.exponent));
  r.exponent = -a.exponent;
  return r;
}

GammaElement gamma_commutator(const GammaElement& a, const GammaElement& b) {
  return gamma_multiply(gamma_multiply(a, b),
                        gamma_multiply(gamma_inverse(a), gamma_inverse(b)));
}

}  // namespace kc
