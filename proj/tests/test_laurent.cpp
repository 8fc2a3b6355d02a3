#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotconc/laurent.hpp"
#include "knotconc/ratfunc.hpp"

using namespace kc;

namespace {

LaurentPoly P(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms) p += LaurentPoly::term(c, e);
  return p;
}

LaurentPoly random_poly(std::mt19937& rng, int max_deg, int min_exp = -3) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> shift(min_exp, 3);
  LaurentPoly p;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) p += LaurentPoly::term(coef(rng), i);
  return p.shifted(shift(rng));
}

// Independent route to Phi_n: the Moebius product prod (t^{n/d}-1)^{mu(d)}.
LaurentPoly cyclotomic_oracle(unsigned n) {
  auto mu = [](unsigned m) {
    int r = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        r = -r;
      }
    }
    if (m > 1) r = -r;
    return r;
  };
  LaurentPoly num = LaurentPoly::one(), den = LaurentPoly::one();
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    LaurentPoly f = LaurentPoly::t(n / d) - LaurentPoly::one();
    int m = mu(d);
    if (m == 1) num *= f;
    if (m == -1) den *= f;
  }
  return exact_div(num, den);
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  CHECK((P({{1, 1}, {0, -1}}) * LaurentPoly::t(-1)) ==
        P({{0, 1}, {-1, -1}}));  // (t-1) * t^-1 = 1 - t^-1
  CHECK(P({{2, 1}, {1, -1}, {0, 1}}).involution() ==
        P({{-2, 1}, {-1, -1}, {0, 1}}));
  CHECK((P({{2, 1}, {1, -1}, {0, 1}}) + P({{2, -1}, {1, 1}, {0, -1}}))
            .is_zero());
}

TEST_CASE("involution is a ring automorphism") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
    CHECK((a * b).involution() == a.involution() * b.involution());
    CHECK((a + b).involution() == a.involution() + b.involution());
    CHECK(a.involution().involution() == a);
  }
}

TEST_CASE("normalize_unit") {
  CHECK(normalize_unit(P({{-1, -1}, {0, 1}, {1, -1}})) ==
        P({{2, 1}, {1, -1}, {0, 1}}));
  CHECK(normalize_unit(LaurentPoly(5)) == LaurentPoly(5));
  CHECK(normalize_unit(P({{5, 1}, {4, -3}, {3, 1}})) ==
        P({{2, 1}, {1, -3}, {0, 1}}));
  CHECK_THROWS_AS(normalize_unit(LaurentPoly()), std::domain_error);

  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = random_poly(rng, 5);
    if (p.is_zero()) continue;
    std::uniform_int_distribution<int> sh(-4, 4);
    LaurentPoly u = LaurentPoly::t(sh(rng));
    if (sh(rng) % 2) u = -u;
    CHECK(normalize_unit(u * p) == normalize_unit(p));
  }
}

TEST_CASE("gcd_bezout examples") {
  LaurentPoly phi6 = cyclotomic(6), phi10 = cyclotomic(10);
  SUBCASE("coprime cyclotomics") {
    Bezout b = gcd_bezout(phi6, phi10);
    CHECK(b.g == LaurentPoly::one());
    CHECK(b.f * phi6 + b.h * phi10 == LaurentPoly::one());
  }
  SUBCASE("equal inputs") {
    LaurentPoly p = P({{1, 2}, {0, 4}});
    Bezout b = gcd_bezout(p, p);
    CHECK(b.g == P({{1, 1}, {0, 2}}));  // monic normalized
    CHECK(b.f * p + b.h * p == b.g);
  }
  SUBCASE("two quadratics") {
    LaurentPoly q = P({{2, 1}, {1, -3}, {0, 1}});
    Bezout b = gcd_bezout(phi6, q);
    CHECK(b.g == LaurentPoly::one());
    CHECK(b.f * phi6 + b.h * q == LaurentPoly::one());
  }
  SUBCASE("one zero input") {
    Bezout b = gcd_bezout(LaurentPoly(), phi6);
    CHECK(b.g == phi6);
    CHECK(b.f * LaurentPoly() + b.h * phi6 == b.g);
    CHECK_THROWS_AS(gcd_bezout(LaurentPoly(), LaurentPoly()),
                    std::domain_error);
  }
}

TEST_CASE("gcd_bezout identity on random coprime pairs") {
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    LaurentPoly p = random_poly(rng, 4), q = random_poly(rng, 4);
    if (p.is_zero() && q.is_zero()) continue;
    Bezout b = gcd_bezout(p, q);
    CHECK(b.f * p + b.h * q == b.g);
    if (!p.is_zero()) CHECK(divides(b.g, p));
    if (!q.is_zero()) CHECK(divides(b.g, q));
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == P({{1, 1}, {0, -1}}));
  CHECK(cyclotomic(6) == P({{2, 1}, {1, -1}, {0, 1}}));
  CHECK(cyclotomic(10) == P({{4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}}));
  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);

  LaurentPoly phi30 = cyclotomic(30);
  CHECK(phi30.degree() == 8);
  CHECK(phi30.eval(1) == 1);
  CHECK(phi30 == cyclotomic_oracle(30));

  for (unsigned k : {2u, 6u, 12u, 15u, 20u, 60u}) {
    CHECK(cyclotomic(k) == cyclotomic_oracle(k));
    CHECK(cyclotomic(k).degree() == (long)euler_phi(k));
  }

  // Palindromicity: involution(Phi_k) = t^{-phi(k)} Phi_k for k >= 3.
  for (unsigned k = 3; k <= 40; ++k) {
    CHECK(cyclotomic(k).involution() ==
          cyclotomic(k).shifted(-cyclotomic(k).degree()));
  }

  // prod_{d | n} Phi_d = t^n - 1 up to n = 60.
  for (unsigned n = 1; n <= 60; ++n) {
    LaurentPoly prod = LaurentPoly::one();
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d);
    CHECK(prod == LaurentPoly::t(n) - LaurentPoly::one());
  }
}

TEST_CASE("is_in_T") {
  CHECK(is_in_T(30));
  CHECK_FALSE(is_in_T(12));
  CHECK(is_in_T(60));
  CHECK_FALSE(is_in_T(1));
  CHECK(is_in_T(105));
}

TEST_CASE("reduce_mod_lambda examples") {
  // (t^2+1)/(t-2) -> 5/(t-2): long division leaves remainder 5.
  QtModLambda a = reduce_mod_lambda(
      RationalFunction(P({{2, 1}, {0, 1}}), P({{1, 1}, {0, -2}})));
  CHECK(a.num() == LaurentPoly(5));
  CHECK(a.den() == P({{1, 1}, {0, -2}}));

  // (t^3-1)/(t-1) is in Lambda.
  CHECK(reduce_mod_lambda(RationalFunction(P({{3, 1}, {0, -1}}),
                                           P({{1, 1}, {0, -1}})))
            .is_zero());

  // Phi6 * involution(Phi6) / Phi6^2 = t^-2, a unit of Lambda.
  LaurentPoly phi6 = cyclotomic(6);
  CHECK(reduce_mod_lambda(RationalFunction(phi6 * phi6.involution(),
                                           phi6 * phi6))
            .is_zero());
}

TEST_CASE("reduce_mod_lambda separates cosets") {
  std::mt19937 rng(17);
  LaurentPoly d = cyclotomic(6) * cyclotomic(5);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly n = random_poly(rng, 6);
    RationalFunction a(n, d);
    RationalFunction b = a + RationalFunction(random_poly(rng, 3));
    CHECK(reduce_mod_lambda(a) == reduce_mod_lambda(b));
    RationalFunction c = a + RationalFunction(LaurentPoly::one(), d);
    CHECK(reduce_mod_lambda(a) != reduce_mod_lambda(c));
  }
}

TEST_CASE("quotient reduction handles negative exponents") {
  LaurentPoly d = cyclotomic(6);
  std::mt19937 rng(23);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly c = random_poly(rng, 5, -5);
    LaurentPoly r = reduce_in_quotient(c, d);
    CHECK((r.is_zero() || (r.is_ordinary() && r.degree() < d.degree())));
    CHECK(divides(d, c - r));
  }
}
