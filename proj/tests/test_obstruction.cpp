#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotconc/obstruction.hpp"

using namespace kc;

namespace {

SeifertMatrix two_trefoils() {
  return connected_sum(SeifertMatrix::trefoil(), SeifertMatrix::trefoil());
}

}  // namespace

TEST_CASE("SatelliteKnot construction") {
  SatelliteKnot k(30, two_trefoils());
  CHECK(k.pattern_module.rank() == 1);
  CHECK(k.pattern_module.blocks[0] ==
        normalize_unit(cyclotomic(30) * cyclotomic(30)));
  CHECK(k.axis_class == generator(k.pattern_module, 0));
  // 12 = 2^2 * 3 has only two distinct primes.
  CHECK_THROWS_AS(SatelliteKnot(12, std::string("J1")),
                  std::invalid_argument);
}

TEST_CASE("companion_rho") {
  RhoValue r = companion_rho(two_trefoils());
  CHECK(r.exact_known);
  CHECK(r.exact == Rational(-8) / 3);
  RhoValue s = companion_rho(std::string("J2"));
  CHECK(s.symbols == std::map<std::string, long>{{"J2", 1}});
}

TEST_CASE("rho_of_element") {
  SatelliteKnot k(30, two_trefoils());
  const LambdaModule& m = k.pattern_module;
  LaurentPoly phi30 = cyclotomic(30);
  ModuleElement x = scalar_action(m, phi30, generator(m, 0));

  CHECK(rho_of_element(k, zero_element(m)).is_zero());
  RhoValue r = rho_of_element(k, x);
  CHECK(r.exact == Rational(-8) / 3);
  CHECK_THROWS_WITH(rho_of_element(k, generator(m, 0)),
                    "element outside reduced case; apply phi-multiplication "
                    "first");

  SatelliteKnot sym(30, std::string("J2"));
  RhoValue rs = rho_of_element(sym, x);
  CHECK(rs.symbols == std::map<std::string, long>{{"J2", 1}});
}

TEST_CASE("reduce_to_phi_block") {
  LaurentPoly phi6 = cyclotomic(6);
  LambdaModule m({phi6 * phi6, phi6 * phi6});
  ModuleElement g0 = generator(m, 0), g1 = generator(m, 1);
  ModuleElement pg0 = scalar_action(m, phi6, g0);
  ModuleElement pg1 = scalar_action(m, phi6, g1);

  CHECK(reduce_to_phi_block(m, 6, pg0) == pg0);
  CHECK(reduce_to_phi_block(m, 6, g0) == pg0);
  CHECK(reduce_to_phi_block(m, 6, add(m, g0, pg1)) == pg0);
  CHECK_THROWS_AS(reduce_to_phi_block(m, 6, zero_element(m)),
                  std::invalid_argument);

  // Output is nonzero with every coordinate in (Phi_6).
  std::vector<ModuleElement> samples{
      g0, g1, add(m, g0, g1), add(m, pg0, g1),
      make_element(m, {LaurentPoly::t(), phi6})};
  for (auto& x : samples) {
    ModuleElement r = reduce_to_phi_block(m, 6, x);
    CHECK_FALSE(r.is_zero());
    for (auto& c : r.coords) CHECK((c.is_zero() || divides(phi6, c)));
  }
}

TEST_CASE("independence_certificate") {
  SatelliteKnot k30(30, two_trefoils());
  SatelliteKnot k60(60, two_trefoils());

  SUBCASE("single knot is obstructed (Prop 4.3 for l = 1)") {
    CertificateReport rep =
        independence_certificate({{{1, k30}}});
    CHECK(rep.verdict == Verdict::Obstructed);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->rho.exact == Rational(-8) / 3);
    CHECK(rep.witness->rho.provably_nonzero());
    CHECK_FALSE(rep.witness->element.is_zero());
  }
  SUBCASE("zero combination vanishes") {
    CertificateReport rep =
        independence_certificate({{{0, k30}, {0, k60}}});
    CHECK(rep.verdict == Verdict::Vanishes);
    CHECK_FALSE(rep.witness.has_value());
  }
  SUBCASE("cancelling terms vanish") {
    CertificateReport rep =
        independence_certificate({{{2, k30}, {-2, k30}}});
    CHECK(rep.verdict == Verdict::Vanishes);
  }
  SUBCASE("shared k with distinct companions violates coprimality") {
    SatelliteKnot other(30, std::string("J1"));
    CHECK_THROWS_WITH(independence_certificate({{{1, k30}, {1, other}}}),
                      "coprimality hypothesis violated");
  }
  SUBCASE("mixed-sign combination over a shared companion") {
    CertificateReport rep =
        independence_certificate({{{2, k30}, {-1, k60}}});
    CHECK(rep.verdict == Verdict::Obstructed);
    REQUIRE(rep.witness.has_value());
    // Tally m * rho(J) with 1 <= m <= 2, same-signed contributions.
    Rational w = rep.witness->rho.exact;
    CHECK((w == Rational(-8) / 3 || w == Rational(-16) / 3));
  }
  SUBCASE("Arf = 1 companion is not applicable") {
    SatelliteKnot bad(30, SeifertMatrix::trefoil());
    CertificateReport rep = independence_certificate({{{1, bad}}});
    CHECK(rep.verdict == Verdict::NotApplicable);
  }
  SUBCASE("rho = 0 companion is not applicable") {
    SatelliteKnot bad(30, SeifertMatrix::unknot());
    CertificateReport rep = independence_certificate({{{1, bad}}});
    CHECK(rep.verdict == Verdict::NotApplicable);
  }
  SUBCASE("verdict invariant under reordering and global sign flip") {
    CertificateReport a =
        independence_certificate({{{2, k30}, {-1, k60}}});
    CertificateReport b =
        independence_certificate({{{-1, k60}, {2, k30}}});
    CertificateReport c =
        independence_certificate({{{-2, k30}, {1, k60}}});
    CHECK(a.verdict == Verdict::Obstructed);
    CHECK(b.verdict == a.verdict);
    CHECK(c.verdict == a.verdict);
  }
}

TEST_CASE("family_independence") {
  SatelliteKnot k1(30, std::string("J1"), "K^1_30");
  SatelliteKnot k2(30, std::string("J2"), "K^2_30");

  SUBCASE("two companions on the same k-block") {
    CertificateReport rep = family_independence({{{1, k1}, {1, k2}}});
    CHECK(rep.verdict == Verdict::Obstructed);
    REQUIRE(rep.witness.has_value());
    bool has_j1 = rep.witness->rho.symbols.count("J1") &&
                  rep.witness->rho.symbols.at("J1") >= 1;
    bool has_j2 = rep.witness->rho.symbols.count("J2") &&
                  rep.witness->rho.symbols.at("J2") >= 1;
    CHECK((has_j1 || has_j2));
  }
  SUBCASE("empty combination vanishes") {
    CHECK(family_independence({}).verdict == Verdict::Vanishes);
  }
  SUBCASE("formal cancellation vanishes") {
    CertificateReport rep = family_independence({{{1, k1}, {-1, k1}}});
    CHECK(rep.verdict == Verdict::Vanishes);
  }
  SUBCASE("distinct k blocks split off") {
    SatelliteKnot k3(60, std::string("J3"));
    CertificateReport rep = family_independence({{{-1, k3}, {1, k1}}});
    CHECK(rep.verdict == Verdict::Obstructed);
  }
}
