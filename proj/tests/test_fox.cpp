#include <doctest.h>

#include "vkg/braid.hpp"
#include "vkg/fox.hpp"
#include "vkg/rng.hpp"

using namespace vkg;

namespace {

const std::vector<std::string> XY = {"x", "y"};

LaurentPoly mono(Int ex, Int ey, Rat c = 1) {
  return LaurentPoly::monomial(XY, {std::move(ex), std::move(ey)}, c);
}

EndoParams identity_params() { return EndoParams{1, 0, 0, 0, 1, 0}; }
EndoParams swap_params() { return EndoParams{0, 1, 0, 1, 0, 0}; }

}  // namespace

TEST_SUITE_BEGIN("fox");

TEST_CASE("fox derivative product rule values") {
  Alphabet a({"x", "y"});
  Word xy = Word::parse(a, "x*y");
  CHECK(fox_derivative(xy, 0) == LaurentPoly::constant(XY, 1));
  CHECK(fox_derivative(xy, 1) == mono(1, 0));
  CHECK(fox_derivative(Word::parse(a, "x^-1"), 0) == -mono(-1, 0));
  CHECK(fox_derivative(Word::parse(a, "y"), 0).is_zero());
}

TEST_CASE("fox fundamental identity on random words") {
  Alphabet a({"x", "y", "z"});
  const std::vector<std::string> vars = {"x", "y", "z"};
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    Word w = rng.word(a, 20);
    LaurentPoly lhs(vars);
    LaurentPoly::Exponents total(3, 0);
    for (int g = 0; g < 3; ++g) total[static_cast<std::size_t>(g)] = w.exponent_sum(g);
    lhs += LaurentPoly::monomial(vars, total, 1);
    lhs -= LaurentPoly::constant(vars, 1);

    LaurentPoly rhs(vars);
    for (int g = 0; g < 3; ++g) {
      LaurentPoly::Exponents e(3, 0);
      e[static_cast<std::size_t>(g)] = 1;
      rhs += fox_derivative(w, g) * (LaurentPoly::monomial(vars, e, 1) - LaurentPoly::constant(vars, 1));
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("magnus image basics") {
  Alphabet a({"x", "y"});
  std::map<int, MagnusMatrix> assign{
      {0, MagnusMatrix::generator(XY, 0, "t1")},
      {1, MagnusMatrix::generator(XY, 1, "t2")},
  };
  // Empty word: identity matrix.
  MagnusMatrix id = magnus_image(Word(a), assign);
  CHECK(id.scale() == LaurentPoly::constant(XY, 1));
  CHECK(id.translation().is_zero());

  // Generator goes to (s1, t1; 0, 1).
  MagnusMatrix gx = magnus_image(Word::parse(a, "x"), assign);
  CHECK(gx.scale() == mono(1, 0));
  CHECK(gx.translation().coefficient("t1") == LaurentPoly::constant(XY, 1));
  CHECK(gx.translation().coefficient("t2").is_zero());

  // Commutator [x, y]: unit scale; translation computed by the 2x2 product
  // oracle is x^-1 y^-1 ((1 - y) t1 + (x - 1) t2).
  MagnusMatrix z = magnus_image(commutator(Word::parse(a, "x"), Word::parse(a, "y")), assign);
  CHECK(z.scale() == LaurentPoly::constant(XY, 1));
  LaurentPoly u = mono(-1, -1);
  CHECK(z.translation().coefficient("t1") == u * (LaurentPoly::constant(XY, 1) - mono(0, 1)));
  CHECK(z.translation().coefficient("t2") == u * (mono(1, 0) - LaurentPoly::constant(XY, 1)));
}

TEST_CASE("magnus image is a homomorphism") {
  Alphabet a({"x", "y"});
  std::map<int, MagnusMatrix> assign{
      {0, MagnusMatrix::generator(XY, 0, "t1")},
      {1, MagnusMatrix::generator(XY, 1, "t2")},
  };
  Rng rng(73);
  for (int i = 0; i < 100; ++i) {
    Word u = rng.word(a, 12), v = rng.word(a, 12);
    CHECK(magnus_image(u * v, assign) == magnus_image(u, assign) * magnus_image(v, assign));
  }
  // Inverses.
  for (int i = 0; i < 20; ++i) {
    Word u = rng.word(a, 12);
    MagnusMatrix m = magnus_image(u, assign) * magnus_image(u.inverse(), assign);
    CHECK(m.scale() == LaurentPoly::constant(XY, 1));
    CHECK(m.translation().is_zero());
  }
}

TEST_CASE("module coefficients of the standard commutator identities") {
  Alphabet a({"x", "y"});
  Word x = Word::parse(a, "x"), y = Word::parse(a, "y");
  Word z = commutator(x, y);
  CHECK(module_coefficient(z) == LaurentPoly::constant(XY, 1));

  for (int p = -3; p <= 3; ++p)
    for (int q = -3; q <= 3; ++q) {
      // [x^p, y^q] = z * S_p(x) S_q(y)
      LaurentPoly expected = geometric_sum(XY, 0, p) * geometric_sum(XY, 1, q);
      CHECK(module_coefficient(commutator(x.pow(p), y.pow(q))) == expected);
      // [x^p, z^q] = z * q(1 - x^p)
      LaurentPoly expected2 =
          (LaurentPoly::constant(XY, 1) - mono(p, 0)).scaled(q);
      CHECK(module_coefficient(commutator(x.pow(p), z.pow(q))) == expected2);
      // [y^q, z^p] = z * p(1 - y^q) by the symmetric argument
      LaurentPoly expected3 =
          (LaurentPoly::constant(XY, 1) - mono(0, q)).scaled(p);
      CHECK(module_coefficient(commutator(y.pow(q), z.pow(p))) == expected3);
    }

  CHECK_THROWS_AS(module_coefficient(x), ArithmeticError);
}

TEST_CASE("commutator coefficient closed form") {
  CHECK(commutator_coefficient(identity_params()) == LaurentPoly::constant(XY, 1));
  CHECK(commutator_coefficient(swap_params()) == LaurentPoly::constant(XY, -1));
}

TEST_CASE("closed form matches the word-level Magnus extraction") {
  Rng rng(79);
  for (int i = 0; i < 100; ++i) {
    EndoParams p = rng.any_params(3);
    CHECK(commutator_coefficient(p) == commutator_coefficient_from_words(p));
  }
  // Augmentation equals the determinant.
  for (int i = 0; i < 100; ++i) {
    EndoParams p = rng.any_params(5);
    CHECK(commutator_coefficient(p).augment() == Rat(p.det()));
  }
}

TEST_CASE("relator annihilators of the fixtures") {
  // 2(1 + y) for the second trefoil group.
  LaurentPoly expected_g2 = (LaurentPoly::constant(XY, 1) + mono(0, 1)).scaled(2);
  LaurentPoly got_g2 = relator_annihilator(fixture("trefoil-g2"));
  CHECK(equal_up_to_unit_monomial(got_g2, expected_g2));

  // (1 - x^-r)(y - x^r) for the twisted family.
  for (int r = 1; r <= 3; ++r) {
    LaurentPoly got = relator_annihilator(fixture("trefoil-g1", r));
    CHECK(equal_up_to_unit_monomial(got, g1_annihilator_polynomial(r)));
  }
}

TEST_CASE("annihilator transport augmentations") {
  auto [l1, r1] = annihilator_transport_augmentations(1, identity_params());
  CHECK(l1 == 4);
  CHECK(r1 == 0);
  auto [l2, r2] = annihilator_transport_augmentations(2, swap_params());
  CHECK(l2 == -4);
  CHECK(r2 == 0);

  Rng rng(83);
  for (int i = 0; i < 100; ++i) {
    EndoParams p = rng.unimodular_params();
    int r = static_cast<int>(rng.uniform(1, 4));
    auto [lhs, rhs] = annihilator_transport_augmentations(r, p);
    CHECK((lhs == 4 || lhs == -4));
    CHECK(rhs == 0);
  }

  EndoParams bad = identity_params();
  bad.b = 2;
  CHECK_THROWS_AS(annihilator_transport_augmentations(1, bad), ArithmeticError);
}

TEST_CASE("kishino module relation") {
  KishinoModuleRelation rel = kishino_module_relation();
  REQUIRE(rel.division_exact);

  const std::vector<std::string> CD = {"C", "D"};
  LaurentPoly one = LaurentPoly::constant(CD, 1);
  LaurentPoly c = LaurentPoly::variable(CD, 0), d = LaurentPoly::variable(CD, 1);

  // Cleared relation (D + 1 - C) lambda + D(C - 1 - D) mu + (C - 1)(1 + D - C) nu.
  CHECK(rel.cleared.coefficient("lambda") == d + one - c);
  CHECK(rel.cleared.coefficient("mu") == d * (c - one - d));
  CHECK(rel.cleared.coefficient("nu") == (c - one) * (one + d - c));
  CHECK(rel.cleared.coefficient("gamma").is_zero());

  // Residual after dividing out (1 - C + D): lambda - D mu + (C - 1) nu.
  CHECK(rel.residual.coefficient("lambda") == one);
  CHECK(rel.residual.coefficient("mu") == -d);
  CHECK(rel.residual.coefficient("nu") == c - one);

  CHECK(rel.dc_bd_consistent);
}

TEST_CASE("kishino one-relator reduction") {
  KishinoReduction red = kishino_one_relator_reduction();
  CHECK(red.single_relator);
  CHECK(red.reduced.generators().rank() == 3);
  // The surviving relation is c^-1 c^(-2 d^-1) = a a^d a^-1 as a cyclic word.
  CHECK(red.matches_reduced_relation);
  // The certificate word arranges the same blocks in a different cyclic
  // order; the two are distinct cyclic words and the report says so.
  CHECK_FALSE(red.matches_certificate_word);
}

TEST_CASE("kishino first relation trivializes under the guided rewrite") {
  CHECK(kishino_relation1_trivializes(kishino_relation1_reconstructed()));
}

TEST_CASE("unimodularity certificate") {
  KishinoCertificate cert = unimodularity_certificate();
  const std::vector<std::string> ACD = {"a", "c", "d"};
  auto m3 = [&](Int ea, Int ec, Int ed, Rat coeff = 1) {
    return LaurentPoly::monomial(ACD, {std::move(ea), std::move(ec), std::move(ed)}, coeff);
  };

  // The three derivatives match the printed closed forms.
  // d_c w = 1 + cd + c^2 d
  CHECK(cert.fox_derivatives.at("c") == m3(0, 0, 0) + m3(0, 1, 1) + m3(0, 2, 1));
  // d_a w = c^3 (1 + d^-1 a - a)
  CHECK(cert.fox_derivatives.at("a") == m3(0, 3, 0) + m3(1, 3, -1) - m3(1, 3, 0));
  // d_d w = c - c^3 - c^3 a d^-1 + c^3 a^2 d^-1
  CHECK(cert.fox_derivatives.at("d") == m3(0, 1, 0) - m3(0, 3, 0) - m3(1, 3, -1) + m3(2, 3, -1));

  // Unit-cleared vector.
  REQUIRE(cert.cleared_vector.size() == 3);
  CHECK(cert.cleared_vector[0] == m3(1, 0, 0) + m3(0, 0, 1) - m3(1, 0, 1));
  CHECK(cert.cleared_vector[1] == m3(0, 0, 0) + m3(0, 1, 1) + m3(0, 2, 1));
  CHECK(cert.cleared_vector[2] == m3(0, 0, 1) - m3(0, 2, 1) - m3(1, 2, 0) + m3(2, 2, 0));

  // All three vanish exactly at the common zero, whose coordinates are
  // nonzero and invertible; the clearing monomials cannot vanish either.
  CHECK(cert.all_vanish);
  CHECK(cert.point_invertible);
  CHECK(cert.monomials_nonzero);
  CHECK(cert.verified());
  CHECK(cert.verdict == "NOT-UNIMODULAR");

  // d0 = -1/(c0^2 + c0), a0 = 1/(c0^2 + c0 + 1).
  CubicFieldElement c0 = cert.point.at("c");
  CHECK(cert.point.at("d") == -((c0 * c0 + c0).inverse()));
  CHECK(cert.point.at("a") == (c0 * c0 + c0 + CubicFieldElement::one()).inverse());
}

TEST_SUITE_END();
