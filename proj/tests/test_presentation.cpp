#include <doctest.h>

#include <numeric>

#include "vkg/braid.hpp"
#include "vkg/json_io.hpp"
#include "vkg/presentation.hpp"
#include "vkg/rng.hpp"

using namespace vkg;

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t n, std::size_t m, int lo, int hi) {
  IntMatrix a(n, m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) a.at(r, c) = rng.uniform(lo, hi);
  return a;
}

// gcd of all k x k minors, the classical invariant-factor oracle.
Int minor_gcd(const IntMatrix& a, std::size_t k) {
  std::vector<std::size_t> ridx(a.rows()), cidx(a.cols());
  std::iota(ridx.begin(), ridx.end(), 0);
  std::iota(cidx.begin(), cidx.end(), 0);

  std::vector<std::vector<std::size_t>> rsets, csets;
  auto combos = [](const std::vector<std::size_t>& base, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
      if (depth == k) {
        out.push_back(pick);
        return;
      }
      for (std::size_t i = start; i < base.size(); ++i) {
        pick[depth] = base[i];
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
    return out;
  };
  Int g = 0;
  for (const auto& rs : combos(ridx, k))
    for (const auto& cs : combos(cidx, k)) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rs[i], cs[j]);
      g = int_gcd(g, sub.determinant());
    }
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("presentation");

TEST_CASE("smith normal form basics") {
  IntMatrix a(2, 2);
  a.at(0, 0) = 2;
  SnfResult s = smith_normal_form(a);
  CHECK(s.diagonal == std::vector<Int>{2, 0});

  // Single row (-r^2, r, 0): first elementary divisor is the content r.
  for (int r = 1; r <= 5; ++r) {
    IntMatrix m(1, 3);
    m.at(0, 0) = -r * r;
    m.at(0, 1) = r;
    SnfResult snf = smith_normal_form(m);
    CHECK(snf.diagonal[0] == r);
  }
}

TEST_CASE("smith normal form transforms and divisor chain") {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 4, -6, 6);
    SnfResult s = smith_normal_form(a);

    // U A V equals the diagonal, U and V unimodular.
    IntMatrix d = s.u * a * s.v;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(d.at(i, j) == (i == j ? s.diagonal[i] : Int(0)));
    CHECK(abs(s.u.determinant()) == 1);
    CHECK(abs(s.v.determinant()) == 1);

    // Divisibility chain.
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      if (s.diagonal[i + 1] == 0) continue;
      CHECK(s.diagonal[i] != 0);
      CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }

    // Products of elementary divisors match gcds of minors.
    Int prod = 1;
    for (std::size_t k = 1; k <= 4; ++k) {
      if (s.diagonal[k - 1] == 0) break;
      prod *= s.diagonal[k - 1];
      CHECK(prod == minor_gcd(a, k));
    }
  }
}

TEST_CASE("abelianization") {
  Alphabet a({"x"});
  GroupPresentation p(a, {Word::parse(a, "x^2")});
  AbelianStructure st = abelianization(p);
  CHECK(st.rank == 0);
  CHECK(st.torsion == std::vector<Int>{2});
  CHECK(st.str() == "Z/2");

  // Relators with zero exponent sums leave the free abelianization.
  for (int r = 1; r <= 3; ++r) {
    AbelianStructure g1 = abelianization(fixture("trefoil-g1", r));
    CHECK(g1.rank == 2);
    CHECK(g1.torsion.empty());
  }
  AbelianStructure g2 = abelianization(fixture("trefoil-g2"));
  CHECK(g2.rank == 2);
  CHECK(g2.torsion.empty());
  AbelianStructure g3 = abelianization(fixture("trefoil-g3"));
  CHECK(g3.rank == 2);
  CHECK(g3.torsion.empty());
}

TEST_CASE("kishino abelianized relations reduce to A = C^-3, B = C") {
  GroupPresentation ki = fixture("kishino-g3");
  IntMatrix m = relator_exponent_matrix(ki);
  // Columns a, b, c, d; second stored relation abelianizes to b = c and the
  // third to a c^3 = 1.
  REQUIRE(m.rows() == 2);
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(0, 2) == -1);
  CHECK(m.at(0, 3) == 0);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == 0);
  CHECK(m.at(1, 2) == 3);
  CHECK(m.at(1, 3) == 0);

  AbelianStructure st = abelianization(ki);
  CHECK(st.rank == 2);
  CHECK(st.torsion.empty());
}

TEST_CASE("tietze moves") {
  Alphabet a({"x", "y"});
  GroupPresentation p = fixture("trefoil-g2");

  // Add z = xy, then remove it: round trip.
  GroupPresentation q = tietze(p, TietzeAddGenerator{"z", Word::parse(a, "x*y")});
  CHECK(q.generators().rank() == 3);
  CHECK(q.relators().size() == 2);
  GroupPresentation back = tietze(q, TietzeRemoveGenerator{"z"});
  CHECK(back.generators() == p.generators());
  CHECK(back.relators() == p.relators());

  // add-relator-product appends r_i r_j.
  GroupPresentation rp = tietze(p, TietzeAddRelatorProduct{0, 0});
  CHECK(rp.relators().size() == 2);
  CHECK(rp.relators()[1] == p.relators()[0] * p.relators()[0]);
  GroupPresentation removed = tietze(rp, TietzeRemoveRedundantRelator{1});
  CHECK(removed.relators() == p.relators());

  CHECK_THROWS_AS(tietze(p, TietzeRemoveRedundantRelator{0}), GroupError);
  CHECK_THROWS_AS(tietze(p, TietzeRemoveGenerator{"x"}), GroupError);
}

TEST_CASE("abelianization is invariant under random tietze sequences") {
  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    GroupPresentation p = trial % 2 ? fixture("trefoil-g2") : fixture("trefoil-g3");
    AbelianStructure before = abelianization(p);
    int extra = 0;
    for (int step = 0; step < 6; ++step) {
      switch (rng.uniform(0, 2)) {
        case 0: {
          Word def = rng.word(p.generators(), 4);
          p = tietze(p, TietzeAddGenerator{"t" + std::to_string(extra++), def});
          break;
        }
        case 1: {
          std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.relators().size()) - 1));
          std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.relators().size()) - 1));
          p = tietze(p, TietzeAddRelatorProduct{i, j});
          break;
        }
        default: {
          // Remove the last added generator when possible.
          if (extra > 0) {
            try {
              p = tietze(p, TietzeRemoveGenerator{"t" + std::to_string(extra - 1)});
              --extra;
            } catch (const GroupError&) {
            }
          }
          break;
        }
      }
      CHECK(abelianization(p) == before);
    }
  }
}

TEST_CASE("substitute_generator") {
  Alphabet a({"x", "y", "z"});
  GroupPresentation p(a, {Word::parse(a, "z*y^-1*x^-1"), Word::parse(a, "z*x*z^-1*x^-1")});
  GroupPresentation q = substitute_generator(p, "z", Word::parse(a, "x*y"));
  CHECK(q.generators().rank() == 2);
  // First relator becomes trivial and is dropped; the second turns into the
  // commutator relation of x y with x.
  REQUIRE(q.relators().size() == 1);
  Alphabet b = q.generators();
  CHECK(q.relators()[0].cyclic_normal_form() ==
        commutator(Word::parse(b, "x"), Word::parse(b, "x*y")).cyclic_normal_form());

  // Substituting a generator by itself is the identity move.
  GroupPresentation same = substitute_generator(p, "z", Word::parse(a, "z"));
  CHECK(same.generators() == p.generators());
  CHECK(same.relators() == p.relators());
}

TEST_CASE("replace_subword rewrites both orientations") {
  Alphabet a({"x", "y"});
  Word w = Word::parse(a, "x*y*x^-1*y^-1*x");
  // Replace xy by y: w becomes y x^-1 y^-1 x.
  Word r = replace_subword(w, Word::parse(a, "x*y"), Word::parse(a, "y"));
  CHECK(r == Word::parse(a, "y*x^-1*y^-1*x"));
  // The inverse occurrence y^-1 x^-1 is rewritten to y^-1 as well.
  Word v = Word::parse(a, "y^-1*x^-1*y");
  CHECK(replace_subword(v, Word::parse(a, "x*y"), Word::parse(a, "y")) ==
        Word::parse(a, "y^-1*y") * Word::parse(a, "y").inverse() * Word::parse(a, "y"));
}

TEST_CASE("presentation json round trip") {
  GroupPresentation p = fixture("trefoil-g3");
  nlohmann::json j = presentation_to_json(p);
  GroupPresentation q = presentation_from_json(j);
  CHECK(q.generators() == p.generators());
  CHECK(q.relators() == p.relators());
}

TEST_SUITE_END();
