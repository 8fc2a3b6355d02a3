#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotconc/signature.hpp"

using namespace kc;

namespace {

LaurentPoly P(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms) p += LaurentPoly::term(c, e);
  return p;
}

// Random valid Seifert matrix: start from the standard symplectic block
// pairing (det(V - V^T) = 1) and perturb symmetrically.
SeifertMatrix random_seifert(std::mt19937& rng, size_t genus) {
  std::uniform_int_distribution<long> ent(-2, 2);
  size_t n = 2 * genus;
  std::vector<std::vector<long>> v(n, std::vector<long>(n, 0));
  for (size_t g = 0; g < genus; ++g) v[2 * g][2 * g + 1] = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      long d = ent(rng);
      v[i][j] += d;
      v[j][i] += d;
    }
  return SeifertMatrix(std::move(v));
}

}  // namespace

TEST_CASE("Seifert matrix validation") {
  CHECK_NOTHROW(SeifertMatrix::trefoil());
  CHECK_NOTHROW(SeifertMatrix::figure_eight());
  CHECK(SeifertMatrix::unknot().size() == 0);
  CHECK_THROWS_AS(SeifertMatrix({{1, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SeifertMatrix({{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("alexander_polynomial") {
  CHECK(alexander_polynomial(SeifertMatrix::trefoil()) ==
        P({{2, 1}, {1, -1}, {0, 1}}));
  CHECK(alexander_polynomial(SeifertMatrix::figure_eight()) ==
        P({{2, 1}, {1, -3}, {0, 1}}));
  CHECK(alexander_polynomial(SeifertMatrix::unknot()) == LaurentPoly::one());

  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    SeifertMatrix v = random_seifert(rng, 1 + i % 3);
    Rational at1 = alexander_polynomial(v).eval(1);
    CHECK((at1 == 1 || at1 == -1));
  }
}

TEST_CASE("connected_sum multiplies Alexander polynomials") {
  SeifertMatrix t = SeifertMatrix::trefoil(), f = SeifertMatrix::figure_eight();
  CHECK(alexander_polynomial(connected_sum(t, t)) ==
        normalize_unit(cyclotomic(6) * cyclotomic(6)));
  CHECK(alexander_polynomial(connected_sum(t, f)) ==
        normalize_unit(alexander_polynomial(t) * alexander_polynomial(f)));
  CHECK(connected_sum(t, SeifertMatrix::unknot()).size() == t.size());
}

TEST_CASE("arf_invariant") {
  CHECK(arf_invariant(SeifertMatrix::trefoil()) == 1);
  CHECK(arf_invariant(connected_sum(SeifertMatrix::trefoil(),
                                    SeifertMatrix::trefoil())) == 0);
  CHECK(arf_invariant(SeifertMatrix::unknot()) == 0);
  CHECK(arf_invariant(SeifertMatrix::figure_eight()) == 1);
}

TEST_CASE("levine_tristram_at") {
  SeifertMatrix t = SeifertMatrix::trefoil();
  CHECK(levine_tristram_at(t, UnitCirclePoint::minus_one()) == -2);
  CHECK(levine_tristram_at(t, UnitCirclePoint::one()) == 0);
  // angle atan2(4/5, 3/5) ~ 0.927 < pi/3: still on the first arc.
  CHECK(levine_tristram_at(t, UnitCirclePoint(Rational(3) / 5,
                                              Rational(4) / 5)) == 0);

  SUBCASE("conjugation symmetry") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> sn(1, 9), sd(1, 9);
    for (int i = 0; i < 30; ++i) {
      SeifertMatrix v = random_seifert(rng, 1 + i % 2);
      UnitCirclePoint w =
          UnitCirclePoint::from_tangent(Rational(sn(rng)) / sd(rng));
      UnitCirclePoint wbar(w.re, -w.im);
      CHECK(levine_tristram_at(v, w) == levine_tristram_at(v, wbar));
    }
  }
}

TEST_CASE("signature_function goldens") {
  SUBCASE("trefoil jumps at the primitive 6th-root angles") {
    SignatureFunction sf = signature_function(SeifertMatrix::trefoil());
    REQUIRE(sf.jumps.size() == 2);
    CHECK(sf.cyclotomic_flag);
    REQUIRE(sf.jumps[0].exact_u.has_value());
    REQUIRE(sf.jumps[1].exact_u.has_value());
    CHECK(*sf.jumps[0].exact_u == Rational(1) / 6);
    CHECK(*sf.jumps[1].exact_u == Rational(5) / 6);
    CHECK(sf.arc_values == std::vector<int>{0, -2, 0});
  }
  SUBCASE("unknot is constant zero") {
    SignatureFunction sf = signature_function(SeifertMatrix::unknot());
    CHECK(sf.jumps.empty());
    CHECK(sf.arc_values == std::vector<int>{0});
  }
  SUBCASE("figure-eight has no unit-circle roots") {
    SignatureFunction sf = signature_function(SeifertMatrix::figure_eight());
    CHECK(sf.jumps.empty());
    CHECK(sf.arc_values == std::vector<int>{0});
    CHECK(sf.cyclotomic_flag);
  }
  SUBCASE("structural invariants on random matrices") {
    std::mt19937 rng(11);
    for (int i = 0; i < 12; ++i) {
      SeifertMatrix v = random_seifert(rng, 1 + i % 2);
      LaurentPoly delta = alexander_polynomial(v);
      if (delta.eval(-1) == 0) continue;
      SignatureFunction sf = signature_function(v);
      REQUIRE(sf.arc_values.size() == sf.jumps.size() + 1);
      CHECK(sf.arc_values.front() == 0);
      CHECK(sf.arc_values.back() == 0);
      // Symmetry under theta -> 2pi - theta.
      size_t m = sf.arc_values.size();
      for (size_t j = 0; j < m; ++j)
        CHECK(sf.arc_values[j] == sf.arc_values[m - 1 - j]);
      for (size_t j = 0; j + 1 < m; ++j)
        CHECK((sf.arc_values[j + 1] - sf.arc_values[j]) % 2 == 0);
    }
  }
}

TEST_CASE("rho_integral goldens") {
  RhoIntegral tr = rho_integral(SeifertMatrix::trefoil());
  REQUIRE(tr.exact.has_value());
  CHECK(*tr.exact == Rational(-4) / 3);
  CHECK(tr.lo <= *tr.exact);
  CHECK(tr.hi >= *tr.exact);

  SeifertMatrix j =
      connected_sum(SeifertMatrix::trefoil(), SeifertMatrix::trefoil());
  RhoIntegral rj = rho_integral(j);
  REQUIRE(rj.exact.has_value());
  CHECK(*rj.exact == Rational(-8) / 3);
  CHECK(rj.excludes_zero());

  RhoIntegral ru = rho_integral(SeifertMatrix::unknot());
  REQUIRE(ru.exact.has_value());
  CHECK(*ru.exact == 0);

  // No unit-circle roots: exactly zero.
  RhoIntegral rf = rho_integral(SeifertMatrix::figure_eight());
  REQUIRE(rf.exact.has_value());
  CHECK(*rf.exact == 0);
}

TEST_CASE("rho additivity over connected sums") {
  std::mt19937 rng(13);
  int done = 0;
  while (done < 10) {
    SeifertMatrix a = random_seifert(rng, 1), b = random_seifert(rng, 1);
    LaurentPoly da = alexander_polynomial(a), db = alexander_polynomial(b);
    if (da.eval(-1) == 0 || db.eval(-1) == 0) continue;
    RhoIntegral ra = rho_integral(a, 44), rb = rho_integral(b, 44);
    RhoIntegral rab = rho_integral(connected_sum(a, b), 44);
    RhoIntegral sum = rho_sum(ra, rb);
    if (rab.exact && sum.exact) {
      CHECK(*rab.exact == *sum.exact);
    } else {
      // Enclosures must overlap and be tight.
      CHECK(rab.lo <= sum.hi);
      CHECK(sum.lo <= rab.hi);
      CHECK(rab.width() <= pow2(-40));
      CHECK(sum.width() <= pow2(-39));
    }
    ++done;
  }
}

TEST_CASE("signature vanishes between angle 0 and the first jump") {
  std::mt19937 rng(17);
  int done = 0;
  while (done < 15) {
    SeifertMatrix v = random_seifert(rng, 1 + done % 2);
    if (alexander_polynomial(v).eval(-1) == 0) continue;
    UnitCirclePoint w = near_one_sample(v);
    CHECK(levine_tristram_at(v, w) == 0);
    ++done;
  }
}

TEST_CASE("irrational jump angles get rigorous enclosures") {
  // V = [[2,1],[0,1]]: delta = 2t^2 - 3t + 2, roots on the unit circle at
  // x = 2cos(theta) = 3/2, not a root of unity.
  SeifertMatrix v({{2, 1}, {0, 1}});
  CHECK(alexander_polynomial(v) == P({{2, 2}, {1, -3}, {0, 2}}));
  SignatureFunction sf = signature_function(v);
  CHECK_FALSE(sf.cyclotomic_flag);
  REQUIRE(sf.jumps.size() == 2);
  CHECK_FALSE(sf.jumps[0].exact_u.has_value());
  // cos(2 pi u) = 3/4 puts u just below 1/8.
  CHECK(sf.jumps[0].u.lo > Rational(1) / 10);
  CHECK(sf.jumps[0].u.hi < Rational(1) / 8);

  RhoIntegral r = rho_integral(v, 60);
  CHECK_FALSE(r.exact.has_value());
  CHECK(r.width() <= pow2(-60));
}
