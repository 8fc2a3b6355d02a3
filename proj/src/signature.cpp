#include "knotconc/signature.hpp"

#include <algorithm>
#include <numeric>

namespace kc {

LaurentPoly squarefree_part(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of zero");
  LaurentPoly q = normalize_unit(p);
  q = q.scaled(1 / q.leading());
  if (q.degree() == 0) return LaurentPoly::one();
  LaurentPoly g = poly_gcd(q, q.derivative());
  return exact_div(q, g);
}

namespace {

std::vector<LaurentPoly> sturm_sequence(const LaurentPoly& p) {
  std::vector<LaurentPoly> seq;
  seq.push_back(p);
  if (p.degree() == 0) return seq;
  seq.push_back(p.derivative());
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    LaurentPoly r = divmod_ordinary(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_variations(const std::vector<LaurentPoly>& seq, const Rational& x) {
  int var = 0, prev = 0;
  for (auto& p : seq) {
    Rational v = p.eval(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

int sturm_count(const LaurentPoly& p, const Rational& a, const Rational& b) {
  if (p.eval(a) == 0 || p.eval(b) == 0)
    throw std::invalid_argument("Sturm endpoints must not be roots");
  if (a >= b) return 0;
  auto seq = sturm_sequence(p);
  return sign_variations(seq, a) - sign_variations(seq, b);
}

LaurentPoly symmetrize_to_x(const LaurentPoly& delta) {
  LaurentPoly d = normalize_unit(delta);
  long deg = d.is_zero() ? 0 : d.degree();
  if (deg % 2 != 0 || d.involution() != d.shifted(-deg))
    throw std::domain_error("polynomial is not palindromic of even degree");
  long half = deg / 2;
  // Chebyshev-like basis: V_k(x) = t^k + t^-k with V_{k+1} = x V_k - V_{k-1}.
  LaurentPoly q = LaurentPoly(d.coeff(half));
  LaurentPoly vkm1 = LaurentPoly(2), vk = LaurentPoly::t();
  for (long k = 1; k <= half; ++k) {
    q += d.coeff(half + k) * vk;
    LaurentPoly vnext = LaurentPoly::t() * vk - vkm1;
    vkm1 = vk;
    vk = vnext;
  }
  return q;
}

namespace {

struct IsolatedRoot {
  Rational xlo, xhi;                // open isolating interval in x = 2cos
  std::optional<Rational> exact_u;  // theta/(2pi) when root of unity
  Interval u;                       // enclosure of theta/(2pi), theta in (0,pi)
};

// Picks a non-root point near mid for bisection.
Rational safe_point(const LaurentPoly& p, const Rational& a,
                    const Rational& b) {
  Rational mid = (a + b) / 2;
  Rational step = (b - a) / 64;
  while (p.eval(mid) == 0) mid += step / 7, step /= 7;
  return mid;
}

void bisect_once(const LaurentPoly& p, Rational& a, Rational& b) {
  Rational mid = safe_point(p, a, b);
  if (sturm_count(p, a, mid) == 1)
    b = mid;
  else
    a = mid;
}

// Isolating intervals for all roots of squarefree p in (a, b), ascending.
std::vector<std::pair<Rational, Rational>> isolate_roots(
    const LaurentPoly& p, const Rational& a, const Rational& b) {
  std::vector<std::pair<Rational, Rational>> done;
  std::vector<std::pair<Rational, Rational>> stack{{a, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int c = sturm_count(p, lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      done.emplace_back(lo, hi);
      continue;
    }
    Rational mid = safe_point(p, lo, hi);
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(done.begin(), done.end());
  return done;
}

struct CircleAnalysis {
  std::vector<IsolatedRoot> roots;  // ascending theta (descending x)
  bool cyclotomic_flag = true;
  std::vector<UnitCirclePoint> samples;  // one per arc on (0, pi)
  std::vector<int> arc_values;
  Rational first_gap_xlo = -2, first_gap_xhi = 2;  // arc adjacent to theta=0
};

// Rational circle point with x(s) = 2(1-s^2)/(1+s^2) strictly inside
// (xa, xb); x(s) is a decreasing bijection of s in (0,inf) onto (-2,2).
UnitCirclePoint sample_in_gap(const Rational& xa, const Rational& xb) {
  auto xval = [](const Rational& s) -> Rational {
    return 2 * (1 - s * s) / (1 + s * s);
  };
  if (xa <= -2) {
    // Gap reaches the theta = pi end; any large enough s works.
    Rational s = 1;
    while (xval(s) >= xb) s *= 2;
    return UnitCirclePoint::from_tangent(s);
  }
  Rational slo = 0, shi = 1;
  while (xval(shi) > xa) shi *= 2;
  for (;;) {
    Rational sm = (slo + shi) / 2;
    Rational x = xval(sm);
    if (x >= xb)
      slo = sm;
    else if (x <= xa)
      shi = sm;
    else
      return UnitCirclePoint::from_tangent(sm);
  }
}

CircleAnalysis analyze_circle(const SeifertMatrix& v, long prec) {
  CircleAnalysis an;
  LaurentPoly delta = alexander_polynomial(v);
  if (delta.eval(1) == 0 || delta.eval(-1) == 0)
    throw std::domain_error("Alexander polynomial vanishes at t = +-1");
  if (delta.span() == 0) {
    an.samples.push_back(sample_in_gap(-2, 2));
    an.arc_values.push_back(levine_tristram_at(v, an.samples[0]));
    return an;
  }
  delta = normalize_unit(delta);

  LaurentPoly q = symmetrize_to_x(delta);
  LaurentPoly qsf = squarefree_part(q);
  if (qsf.degree() == 0) {
    an.samples.push_back(sample_in_gap(-2, 2));
    an.arc_values.push_back(levine_tristram_at(v, an.samples[0]));
    return an;
  }

  // Isolate unit-circle roots (as roots of q in x = 2cos(theta)).
  auto intervals = isolate_roots(qsf, -2, 2);

  // Cyclotomic factors of Delta: the exact jump positions they induce.
  struct CycFactor {
    unsigned k;
    LaurentPoly qk;             // symmetrized Phi_k
    std::vector<Rational> us;   // ascending j/k, j coprime to k, j < k/2
  };
  std::vector<CycFactor> cyc;
  {
    LaurentPoly rem = delta;
    long degd = delta.degree();
    for (unsigned k = 3; (long)k <= 2 * degd * degd + 8; ++k) {
      if ((long)euler_phi(k) > degd) continue;
      LaurentPoly phi = cyclotomic(k);
      if (!divides(phi, rem)) continue;
      while (divides(phi, rem)) rem = exact_div(rem, phi);
      CycFactor f;
      f.k = k;
      f.qk = symmetrize_to_x(phi);
      for (unsigned j = 1; 2 * j < k; ++j)
        if (std::gcd(j, k) == 1) f.us.push_back(Rational(j) / Rational(k));
      cyc.push_back(std::move(f));
    }
  }

  // Refine until intervals are pairwise disjoint and inside (-2, 2).
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i + 1 < intervals.size(); ++i)
      if (intervals[i].second > intervals[i + 1].first) {
        bisect_once(qsf, intervals[i].first, intervals[i].second);
        bisect_once(qsf, intervals[i + 1].first, intervals[i + 1].second);
        again = true;
      }
  }

  Rational width_target = pow2(-prec);
  for (auto& [lo, hi] : intervals)
    while (hi - lo > width_target) bisect_once(qsf, lo, hi);

  // Build roots in ascending theta = descending x.
  for (size_t idx = intervals.size(); idx-- > 0;) {
    auto& [lo, hi] = intervals[idx];
    IsolatedRoot r;
    r.xlo = lo;
    r.xhi = hi;
    for (auto& f : cyc) {
      while (f.qk.eval(lo) == 0 || f.qk.eval(hi) == 0) {
        // Interval endpoint hits a root of the factor; refine and retry.
        bisect_once(qsf, lo, hi);
        r.xlo = lo;
        r.xhi = hi;
      }
      if (sturm_count(f.qk, lo, hi) == 1) {
        int rank = hi < 2 ? sturm_count(f.qk, hi, 2) : 0;
        r.exact_u = f.us.at(rank);
        break;
      }
    }
    if (r.exact_u) {
      r.u = Interval(*r.exact_u);
    } else {
      an.cyclotomic_flag = false;
      Rational eps = pow2(-prec - 4);
      Interval a_hi = acos_over_2pi(hi / 2, eps);  // smaller u
      Interval a_lo = acos_over_2pi(lo / 2, eps);  // larger u
      r.u = Interval(a_hi.lo, a_lo.hi);
    }
    an.roots.push_back(std::move(r));
  }

  // Exactly tagged jumps must come out strictly increasing.
  for (size_t i = 0; i + 1 < an.roots.size(); ++i)
    if (an.roots[i].exact_u && an.roots[i + 1].exact_u &&
        !(*an.roots[i].exact_u < *an.roots[i + 1].exact_u))
      throw std::logic_error("cyclotomic jump tags out of order");

  // Arc samples: gaps between consecutive intervals in x, plus the two
  // boundary gaps at x = 2 (theta near 0) and x = -2 (theta near pi).
  std::vector<std::pair<Rational, Rational>> gaps;
  if (an.roots.empty()) {
    an.samples.push_back(sample_in_gap(-2, 2));
    an.arc_values.push_back(levine_tristram_at(v, an.samples[0]));
    return an;
  }
  gaps.emplace_back(an.roots.front().xhi, 2);  // first arc
  for (size_t i = 0; i + 1 < an.roots.size(); ++i)
    gaps.emplace_back(an.roots[i + 1].xhi, an.roots[i].xlo);
  gaps.emplace_back(-2, an.roots.back().xlo);
  an.first_gap_xlo = gaps[0].first;
  an.first_gap_xhi = gaps[0].second;
  for (auto& [xa, xb] : gaps) {
    UnitCirclePoint w = sample_in_gap(xa, xb);
    an.samples.push_back(w);
    an.arc_values.push_back(levine_tristram_at(v, w));
  }
  return an;
}

}  // namespace

SignatureFunction signature_function(const SeifertMatrix& v, long prec) {
  CircleAnalysis an = analyze_circle(v, prec);
  SignatureFunction sf;
  sf.cyclotomic_flag = an.cyclotomic_flag;
  const size_t m = an.roots.size();
  for (size_t i = 0; i < m; ++i) {
    JumpInterval j;
    j.u = an.roots[i].u;
    j.exact_u = an.roots[i].exact_u;
    sf.jumps.push_back(j);
  }
  for (size_t i = m; i-- > 0;) {
    JumpInterval j;
    j.u = Interval(1 - an.roots[i].u.hi, 1 - an.roots[i].u.lo);
    if (an.roots[i].exact_u) j.exact_u = 1 - *an.roots[i].exact_u;
    sf.jumps.push_back(j);
  }
  // Values mirror: v_0 ... v_m around pi, then back down to v_0.
  sf.arc_values = an.arc_values;
  for (size_t i = m; i-- > 0;) sf.arc_values.push_back(an.arc_values[i]);
  return sf;
}

RhoIntegral rho_integral(const SeifertMatrix& v, long prec) {
  for (long attempt_prec = prec + 8;; attempt_prec += 16) {
    CircleAnalysis an = analyze_circle(v, attempt_prec);
    const size_t m = an.roots.size();
    // rho = 2 * sum_i v_i (u_{i+1} - u_i) + v_m (1 - 2 u_m), u_0 = 0.
    Interval acc;
    Interval prev_u(Rational(0));
    for (size_t i = 0; i < m; ++i) {
      Interval len = an.roots[i].u - prev_u;
      acc = acc + len.scaled(2 * an.arc_values[i]);
      prev_u = an.roots[i].u;
    }
    if (m > 0) {
      Interval mid = Interval(Rational(1)) - prev_u.scaled(2);
      acc = acc + mid.scaled(an.arc_values[m]);
    }
    RhoIntegral rho;
    // Enclosures are outward-rounded, so lo/hi may come out inverted by
    // interval subtraction; normalize.
    rho.lo = std::min(acc.lo, acc.hi);
    rho.hi = std::max(acc.lo, acc.hi);
    if (an.cyclotomic_flag) {
      Rational exact = 0;
      Rational pu = 0;
      for (size_t i = 0; i < m; ++i) {
        exact += Rational(2 * an.arc_values[i]) * (*an.roots[i].exact_u - pu);
        pu = *an.roots[i].exact_u;
      }
      if (m > 0) exact += Rational(an.arc_values[m]) * (1 - 2 * pu);
      rho.exact = exact;
      rho.lo = std::min(rho.lo, exact);
      rho.hi = std::max(rho.hi, exact);
      return rho;
    }
    if (rho.width() <= pow2(-prec)) return rho;
  }
}

RhoIntegral rho_sum(const RhoIntegral& a, const RhoIntegral& b) {
  RhoIntegral r;
  r.lo = a.lo + b.lo;
  r.hi = a.hi + b.hi;
  if (a.exact && b.exact) r.exact = *a.exact + *b.exact;
  return r;
}

UnitCirclePoint near_one_sample(const SeifertMatrix& v, long prec) {
  CircleAnalysis an = analyze_circle(v, prec);
  return an.samples.front();
}

}  // namespace kc
