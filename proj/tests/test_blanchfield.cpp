#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotconc/blanchfield.hpp"

using namespace kc;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-3, 3);
  LaurentPoly p;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) p += LaurentPoly::term(coef(rng), i);
  return p;
}

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

BlanchfieldForm phi_square_form(unsigned k) {
  LaurentPoly phi = cyclotomic(k);
  return diagonal_form({{phi * phi, LaurentPoly::one()}});
}

}  // namespace

TEST_CASE("diagonal pairing examples") {
  BlanchfieldForm b = phi_square_form(6);
  const LambdaModule& m = b.ambient;
  LaurentPoly phi6 = cyclotomic(6);
  ModuleElement g = generator(m, 0);

  CHECK_FALSE(pairing(b, g, g).is_zero());
  ModuleElement pg = scalar_action(m, phi6, g);
  CHECK(pairing(b, pg, pg).is_zero());
  CHECK_FALSE(pairing(b, pg, g).is_zero());
}

TEST_CASE("diagonal form validation") {
  LaurentPoly phi6 = cyclotomic(6);
  CHECK_THROWS_AS(diagonal_form({{LaurentPoly::one(), LaurentPoly::one()}}),
                  std::invalid_argument);
  // Coefficient sharing a factor with the block is singular.
  CHECK_THROWS_AS(diagonal_form({{phi6 * phi6, phi6}}), std::invalid_argument);
  // t + 2 is not palindromic up to a unit.
  CHECK_THROWS_AS(
      diagonal_form({{phi6 * phi6, LaurentPoly::t() + LaurentPoly(2)}}),
      std::invalid_argument);
  // Odd-degree palindromic coefficient: no Hermitian unit adjustment exists.
  CHECK_THROWS_AS(
      diagonal_form({{phi6 * phi6, LaurentPoly::t() + LaurentPoly::one()}}),
      std::invalid_argument);
  // 1 + t + t^2 is palindromic, coprime to Phi_6, of compatible parity.
  CHECK_NOTHROW(diagonal_form(
      {{phi6 * phi6,
        LaurentPoly::t(2) + LaurentPoly::t() + LaurentPoly::one()}}));
  // Non-palindromic blocks are rejected.
  CHECK_THROWS_AS(
      diagonal_form({{LaurentPoly::t() + LaurentPoly(2), LaurentPoly::one()}}),
      std::invalid_argument);
}

TEST_CASE("Seifert-derived trefoil form") {
  SeifertForm sf = seifert_form(SeifertMatrix::trefoil());
  const LambdaModule& m = sf.form.ambient;
  REQUIRE(m.rank() == 1);
  CHECK(m.blocks[0] == cyclotomic(6));

  ModuleElement g = generator(m, 0);
  QtModLambda v = pairing(sf.form, g, g);
  CHECK_FALSE(v.is_zero());
  CHECK(normalize_unit(v.den()) == cyclotomic(6));
  CHECK(is_nonsingular(sf.form));
}

TEST_CASE("Hermitian symmetry and sesquilinearity") {
  std::mt19937 rng(5);
  LaurentPoly phi6 = cyclotomic(6), phi10 = cyclotomic(10);
  BlanchfieldForm b = diagonal_form(
      {{phi6 * phi6, LaurentPoly::one()}, {phi10 * phi10, phi6}});
  const LambdaModule& m = b.ambient;
  for (int i = 0; i < 20; ++i) {
    ModuleElement x =
        make_element(m, {random_poly(rng, 4), random_poly(rng, 4)});
    ModuleElement y =
        make_element(m, {random_poly(rng, 4), random_poly(rng, 4)});
    CHECK(pairing(b, x, y) == pairing(b, y, x).involution());
    LaurentPoly p = random_poly(rng, 3), q = random_poly(rng, 3);
    CHECK(pairing(b, scalar_action(m, p, x), y) ==
          pairing(b, x, y).scaled(p));
    CHECK(pairing(b, x, scalar_action(m, q, y)) ==
          pairing(b, x, y).scaled(q.involution()));
    // Additivity in each slot.
    CHECK(pairing(b, add(m, x, y), x) ==
          pairing(b, x, x) + pairing(b, y, x));
  }
}

TEST_CASE("Seifert-derived forms on random matrices") {
  std::mt19937 rng(9);
  int done = 0;
  while (done < 8) {
    SeifertMatrix v = random_seifert(rng, 1 + done % 2);
    SeifertForm sf = seifert_form(v);
    const LambdaModule& m = sf.form.ambient;
    CHECK(is_nonsingular(sf.form));
    std::vector<LaurentPoly> c1, c2;
    for (size_t i = 0; i < m.rank(); ++i) {
      c1.push_back(random_poly(rng, 3));
      c2.push_back(random_poly(rng, 3));
    }
    ModuleElement x = make_element(m, c1), y = make_element(m, c2);
    CHECK(pairing(sf.form, x, y) == pairing(sf.form, y, x).involution());
    ++done;
  }
}

TEST_CASE("direct_sum_form") {
  BlanchfieldForm b1 = phi_square_form(6), b2 = phi_square_form(10);
  BlanchfieldForm b = direct_sum_form(b1, b2);
  const LambdaModule &m1 = b1.ambient, &m2 = b2.ambient;

  std::mt19937 rng(13);
  for (int i = 0; i < 15; ++i) {
    ModuleElement x = make_element(m1, {random_poly(rng, 4)});
    ModuleElement y = make_element(m2, {random_poly(rng, 4)});
    ModuleElement ex = embed_first(m1, m2, x), ey = embed_second(m1, m2, y);
    CHECK(pairing(b, ex, ey).is_zero());
    ModuleElement x2 = make_element(m1, {random_poly(rng, 4)});
    CHECK(pairing(b, ex, embed_first(m1, m2, x2)) == pairing(b1, x, x2));
  }
  CHECK(is_nonsingular(b));
}

TEST_CASE("orthogonal_complement") {
  BlanchfieldForm b = phi_square_form(6);
  const LambdaModule& m = b.ambient;
  LaurentPoly phi6 = cyclotomic(6);
  ModuleElement g = generator(m, 0);
  ModuleElement pg = scalar_action(m, phi6, g);

  SUBCASE("zero submodule has full complement") {
    Submodule perp = orthogonal_complement(b, zero_submodule(m));
    CHECK(submodule_equal(perp, full_submodule(m)));
  }
  SUBCASE("(Phi_6) is its own complement") {
    Submodule perp = orthogonal_complement(b, Submodule(m, {pg}));
    CHECK(submodule_equal(perp, Submodule(m, {pg})));
  }
  SUBCASE("full module has zero complement") {
    Submodule perp = orthogonal_complement(b, full_submodule(m));
    CHECK(perp.is_zero());
  }
  SUBCASE("double complement closure") {
    Submodule p(m, {pg});
    Submodule perp = orthogonal_complement(b, p);
    CHECK(submodule_equal(orthogonal_complement(b, perp), p));
  }
}

TEST_CASE("is_self_annihilating") {
  for (unsigned k : {6u, 10u, 12u, 30u}) {
    BlanchfieldForm b = phi_square_form(k);
    const LambdaModule& m = b.ambient;
    ModuleElement pg = scalar_action(m, cyclotomic(k), generator(m, 0));
    CHECK(is_self_annihilating(b, Submodule(m, {pg})));
    CHECK_FALSE(is_self_annihilating(b, zero_submodule(m)));
    CHECK_FALSE(is_self_annihilating(b, full_submodule(m)));
  }

  SUBCASE("blockwise submodule of a coprime sum") {
    BlanchfieldForm b = direct_sum_form(phi_square_form(6),
                                        phi_square_form(10));
    const LambdaModule& m = b.ambient;
    ModuleElement g1 = scalar_action(m, cyclotomic(6), generator(m, 0));
    ModuleElement g2 = scalar_action(m, cyclotomic(10), generator(m, 1));
    SelfAnnihilationReport rep =
        self_annihilation_report(b, Submodule(m, {g1, g2}));
    CHECK(rep.holds);
    CHECK(rep.p_in_perp);
    CHECK(rep.perp_in_p);
    // Dropping one generator breaks maximality.
    CHECK_FALSE(is_self_annihilating(b, Submodule(m, {g1})));
  }
}

TEST_CASE("enumerate_self_annihilating") {
  LaurentPoly phi6 = cyclotomic(6), phi10 = cyclotomic(10);

  SUBCASE("single squared block") {
    BlanchfieldForm b = phi_square_form(6);
    auto subs = enumerate_self_annihilating(b);
    REQUIRE(subs.size() == 1);
    ModuleElement pg =
        scalar_action(b.ambient, phi6, generator(b.ambient, 0));
    CHECK(submodule_equal(subs[0], Submodule(b.ambient, {pg})));
    CHECK(is_self_annihilating(b, subs[0]));
  }
  SUBCASE("coprime squared blocks") {
    BlanchfieldForm b = direct_sum_form(phi_square_form(6),
                                        phi_square_form(10));
    auto subs = enumerate_self_annihilating(b);
    REQUIRE(subs.size() == 1);
    CHECK(is_self_annihilating(b, subs[0]));
  }
  SUBCASE("squarefree block admits none") {
    BlanchfieldForm b = diagonal_form({{phi6, LaurentPoly::one()}});
    CHECK(enumerate_self_annihilating(b).empty());
  }
  SUBCASE("repeated prime is a moduli problem") {
    BlanchfieldForm b = direct_sum_form(phi_square_form(6),
                                        phi_square_form(6));
    CHECK_THROWS_WITH(enumerate_self_annihilating(b),
                      "enumeration unsupported; use is_self_annihilating on "
                      "candidate");
  }
}

TEST_CASE("phi_image_on_homology") {
  BlanchfieldForm b = phi_square_form(6);
  const LambdaModule& m = b.ambient;
  LaurentPoly phi6 = cyclotomic(6);
  ModuleElement g = generator(m, 0);
  ModuleElement pg = scalar_action(m, phi6, g);

  MetabelianRepDescriptor zero{&b, zero_element(m)};
  CHECK(phi_image_on_homology(zero, g, 3) == GammaElement{{}, 3});

  MetabelianRepDescriptor phi_pg{&b, pg};
  CHECK(phi_image_on_homology(phi_pg, pg, 1).coset.is_zero());
  CHECK(phi_image_on_homology(phi_pg, pg, 1).exponent == 1);

  MetabelianRepDescriptor phi_g{&b, g};
  GammaElement img = phi_image_on_homology(phi_g, g, 0);
  CHECK_FALSE(img.coset.is_zero());
  // The Hermitian-adjusted unit makes Bl(g, g) = t^2 / Phi_6^2.
  CHECK(img.coset ==
        reduce_mod_lambda(RationalFunction(LaurentPoly::t(2), phi6 * phi6)));

  // Additive in y at exponent zero.
  std::mt19937 rng(17);
  for (int i = 0; i < 15; ++i) {
    ModuleElement y1 = make_element(m, {random_poly(rng, 4)});
    ModuleElement y2 = make_element(m, {random_poly(rng, 4)});
    CHECK(phi_image_on_homology(phi_g, add(m, y1, y2), 0).coset ==
          phi_image_on_homology(phi_g, y1, 0).coset +
              phi_image_on_homology(phi_g, y2, 0).coset);
  }
}
