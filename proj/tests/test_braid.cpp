#include <doctest.h>

#include "vkg/braid.hpp"
#include "vkg/presentation.hpp"

using namespace vkg;

namespace {

std::vector<WadaKind> all_kinds() {
  return {WadaKind::w1(1), WadaKind::w1(2), WadaKind::w1(3), WadaKind::w2(), WadaKind::w3()};
}

Endomorphism rep(const WadaKind& k, int strands, const char* braid) {
  return represent(k, VirtualBraidWord::parse(strands, braid));
}

}  // namespace

TEST_SUITE_BEGIN("braid");

TEST_CASE("generator actions match the defining tables") {
  Alphabet f = braid_target_alphabet(2);
  SUBCASE("w3 sigma") {
    Endomorphism e = generator_action(WadaKind::w3(), {VBKind::Classical, 1, 1}, 2);
    CHECK(e.image(*f.index_of("x1")) == Word::parse(f, "x1^2*x2"));
    CHECK(e.image(*f.index_of("x2")) == Word::parse(f, "x2^-1*x1^-1*x2"));
    CHECK(e.image(*f.index_of("y")) == Word::parse(f, "y"));
  }
  SUBCASE("w1 sigma with twist") {
    Endomorphism e = generator_action(WadaKind::w1(2), {VBKind::Classical, 1, 1}, 2);
    CHECK(e.image(*f.index_of("x1")) == Word::parse(f, "x1^2*x2*x1^-2"));
    CHECK(e.image(*f.index_of("x2")) == Word::parse(f, "x1"));
  }
  SUBCASE("w2 sigma") {
    Endomorphism e = generator_action(WadaKind::w2(), {VBKind::Classical, 1, 1}, 2);
    CHECK(e.image(*f.index_of("x1")) == Word::parse(f, "x1*x2^-1*x1"));
  }
  SUBCASE("rho for every kind") {
    for (const WadaKind& k : all_kinds()) {
      Endomorphism e = generator_action(k, {VBKind::Virtual, 1, 1}, 2);
      CHECK(e.image(*f.index_of("x1")) == Word::parse(f, "y*x2*y^-1"));
      CHECK(e.image(*f.index_of("x2")) == Word::parse(f, "y^-1*x1*y"));
      CHECK(e.image(*f.index_of("y")) == Word::parse(f, "y"));
    }
  }
}

TEST_CASE("sigma inverse actions compose to the identity") {
  for (const WadaKind& k : all_kinds())
    for (int n = 2; n <= 3; ++n)
      for (int i = 1; i < n; ++i) {
        Endomorphism pos = generator_action(k, {VBKind::Classical, i, 1}, n);
        Endomorphism neg = generator_action(k, {VBKind::Classical, i, -1}, n);
        Endomorphism id = Endomorphism::identity(braid_target_alphabet(n));
        CHECK(compose(pos, neg) == id);
        CHECK(compose(neg, pos) == id);
      }
}

TEST_CASE("rho is an involution") {
  for (const WadaKind& k : all_kinds()) {
    CHECK(rep(k, 2, "v1 v1") == Endomorphism::identity(braid_target_alphabet(2)));
    CHECK(rep(k, 3, "v2 v2") == Endomorphism::identity(braid_target_alphabet(3)));
  }
}

TEST_CASE("virtual braid group relations hold on three strands") {
  for (const WadaKind& k : all_kinds()) {
    // Braid relation.
    CHECK(rep(k, 3, "s1 s2 s1") == rep(k, 3, "s2 s1 s2"));
    // Virtual braid relation.
    CHECK(rep(k, 3, "v1 v2 v1") == rep(k, 3, "v2 v1 v2"));
    // Mixed relation.
    CHECK(rep(k, 3, "s1 v2 v1") == rep(k, 3, "v2 v1 s2"));
  }
}

TEST_CASE("representation never moves y and is a homomorphism") {
  for (const WadaKind& k : all_kinds()) {
    Endomorphism e = rep(k, 3, "s1 v1 S2 s2 v2 s1");
    Alphabet f = braid_target_alphabet(3);
    CHECK(e.image(*f.index_of("y")) == Word::parse(f, "y"));
    // Word concatenation maps to composition.
    Endomorphism u = rep(k, 3, "s1 v1");
    Endomorphism v = rep(k, 3, "S2 s2 v2 s1");
    CHECK(e == compose(u, v));
    // Inverse word gives the inverse endomorphism.
    Endomorphism w = rep(k, 3, "s1 v1 S1 v1");
    CHECK(compose(w, rep(k, 3, "v1 s1 v1 S1")) == Endomorphism::identity(f));
  }
}

TEST_CASE("empty braid represents the identity") {
  for (const WadaKind& k : all_kinds())
    CHECK(rep(k, 2, "") == Endomorphism::identity(braid_target_alphabet(2)));
}

TEST_CASE("link group construction") {
  // Trivial 1-strand braid: free of rank 2, no relators survive.
  GroupPresentation unknot = link_group(WadaKind::w3(), VirtualBraidWord::parse(1, ""));
  CHECK(unknot.generators().rank() == 2);
  CHECK(unknot.relators().empty());
  CHECK(abelianization(unknot).rank == 2);

  // A braid with nontrivial images yields one relator per strand.
  for (const WadaKind& k : all_kinds()) {
    GroupPresentation p = link_group(k, VirtualBraidWord::parse(2, "s1 s1 v1"));
    CHECK(p.relators().size() == 2);
    CHECK(p.generators().rank() == 3);
  }
}

TEST_CASE("virtual trefoil braid closure has matching abelianization") {
  // The group of the braid whose closure is the virtual trefoil must share
  // all computable invariants with the fixtures; the abelianization is Z^2
  // on both sides for every representation kind.
  VirtualBraidWord braid = VirtualBraidWord::parse(2, "s1 s1 v1");
  for (int r = 1; r <= 3; ++r) {
    AbelianStructure from_braid = abelianization(link_group(WadaKind::w1(r), braid));
    AbelianStructure from_fixture = abelianization(fixture("trefoil-g1", r));
    CHECK(from_braid == from_fixture);
  }
  CHECK(abelianization(link_group(WadaKind::w2(), braid)) == abelianization(fixture("trefoil-g2")));
  CHECK(abelianization(link_group(WadaKind::w3(), braid)) == abelianization(fixture("trefoil-g3")));
}

TEST_CASE("fixtures") {
  GroupPresentation g2 = fixture("trefoil-g2");
  Alphabet f = g2.generators();
  CHECK(g2.relations().size() == 1);
  CHECK(g2.relations()[0].lhs == Word::parse(f, "x*y^-1*x^-1*y*x"));
  CHECK(g2.relations()[0].rhs == Word::parse(f, "y^-2*x*y*x^-1*y^-1*x*y^2"));

  GroupPresentation g3 = fixture("trefoil-g3");
  Alphabet h = g3.generators();
  CHECK(g3.relations()[0].rhs == Word::parse(h, "y*x2^-1*x1^-1*x2^-1*x1^-1*x2*y^-1"));
  CHECK(g3.relations()[1].rhs == Word::parse(h, "y^-1*x1^2*x2*x1*x2*y"));

  CHECK(fixture("unknot-g3").relators().empty());
  CHECK(fixture("kishino-g3").generators().rank() == 4);
  CHECK_THROWS_AS(fixture("nope"), GroupError);
}

TEST_CASE("conjugated relation family rewrites to the fixture relators") {
  // Substituting x_i = y^-i x y^i turns the two-generator relators into the
  // infinite family indexed by conjugation; the family member at index 0
  // freely reduces to the original relator, and index i to its y^i
  // conjugate.
  Alphabet f({"x", "y"});
  Word x = Word::parse(f, "x"), y = Word::parse(f, "y");
  auto xi = [&](int i) { return x.conjugated_by(y.pow(i)); };

  SUBCASE("first family") {
    for (int r = 1; r <= 3; ++r) {
      Word relator = fixture("trefoil-g1", r).relators()[0];
      for (int i = -2; i <= 2; ++i) {
        Word lhs = xi(i).pow(-r) * xi(i + 1) * xi(i).pow(r);
        Word rhs = xi(i + 2).pow(r) * xi(i + 1) * xi(i + 2).pow(-r);
        CHECK(lhs * rhs.inverse() == relator.conjugated_by(y.pow(i)));
      }
    }
  }
  SUBCASE("second family") {
    Word relator = fixture("trefoil-g2").relators()[0];
    for (int i = -2; i <= 2; ++i) {
      Word lhs = xi(i) * xi(i + 1).inverse() * xi(i);
      Word rhs = xi(i + 2) * xi(i + 1).inverse() * xi(i + 2);
      CHECK(lhs * rhs.inverse() == relator.conjugated_by(y.pow(i)));
    }
  }
}

TEST_CASE("braid word grammar") {
  VirtualBraidWord b = VirtualBraidWord::parse(3, "s1 S2 v1");
  CHECK(b.letters.size() == 3);
  CHECK(b.str() == "s1 S2 v1");
  CHECK_THROWS_AS(VirtualBraidWord::parse(2, "s2"), GroupError);
  CHECK_THROWS_AS(VirtualBraidWord::parse(2, "x1"), GroupError);
}

TEST_SUITE_END();
