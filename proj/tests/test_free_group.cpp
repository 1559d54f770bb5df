#include <doctest.h>

#include "vkg/free_group.hpp"
#include "vkg/rng.hpp"

using namespace vkg;

namespace {

Alphabet xy() { return Alphabet({"x", "y"}); }

}  // namespace

TEST_SUITE_BEGIN("free_group");

TEST_CASE("free reduction") {
  Alphabet a = xy();
  CHECK(Word::reduce(a, std::vector<Syllable>{{0, 1}, {0, -1}}).is_identity());
  CHECK(Word::reduce(a, std::vector<Syllable>{{0, 2}, {0, -1}}) == Word::parse(a, "x"));
  CHECK(Word::reduce(a, std::vector<Syllable>{{0, 1}, {1, 1}, {1, -1}, {0, 1}}) ==
        Word::parse(a, "x^2"));

  // Idempotence: re-reducing the syllables of a reduced word changes nothing.
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Word w = rng.word(a, 30);
    std::vector<Syllable> syl(w.syllables().begin(), w.syllables().end());
    CHECK(Word::reduce(a, syl) == w);
  }
}

TEST_CASE("reduction is confluent over split points") {
  Alphabet a = xy();
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    std::vector<Syllable> raw;
    for (int j = 0; j < 24; ++j)
      raw.push_back({static_cast<int>(rng.uniform(0, 1)), rng.uniform(0, 1) ? 1 : -1});
    Word direct = Word::reduce(a, raw);
    auto cut = static_cast<std::size_t>(rng.uniform(0, 24));
    Word left = Word::reduce(a, std::span(raw.data(), cut));
    Word right = Word::reduce(a, std::span(raw.data() + cut, raw.size() - cut));
    CHECK(direct == left * right);
  }
}

TEST_CASE("multiply and invert") {
  Alphabet a = xy();
  Word x = Word::parse(a, "x"), y = Word::parse(a, "y");
  CHECK((x * x.inverse()).is_identity());
  CHECK((x * y).inverse() == Word::parse(a, "y^-1*x^-1"));

  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Word u = rng.word(a, 20);
    CHECK((u.inverse() * u).is_identity());
  }
  // Syllable-length subadditivity.
  for (int i = 0; i < 100; ++i) {
    Word u = rng.word(a, 20), v = rng.word(a, 20);
    CHECK((u * v).letter_length() <= u.letter_length() + v.letter_length());
  }
}

TEST_CASE("conjugation") {
  Alphabet a = xy();
  Word x = Word::parse(a, "x"), y = Word::parse(a, "y");
  CHECK(x.conjugated_by(y) == Word::parse(a, "y^-1*x*y"));
  CHECK(x.conjugated_by(y).conjugated_by(y.inverse()) == x);
  for (int i = -3; i <= 3; ++i) {
    Word expected = y.pow(-i) * x * y.pow(i);
    CHECK(x.conjugated_by(y.pow(i)) == expected);
  }
}

TEST_CASE("commutator identities") {
  Alphabet alph = xy();
  Word x = Word::parse(alph, "x");
  CHECK(commutator(x, x).is_identity());

  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    Word a = rng.word(alph, 12), b = rng.word(alph, 12), c = rng.word(alph, 12);
    // [ab, c] = [a, c]^b [b, c]
    CHECK(commutator(a * b, c) == commutator(a, c).conjugated_by(b) * commutator(b, c));
    // [a, b^-1] = [b, a]^(b^-1)
    CHECK(commutator(a, b.inverse()) == commutator(b, a).conjugated_by(b.inverse()));
  }

  // Left-normed iterates.
  Word y = Word::parse(alph, "y");
  std::vector<Word> args = {y, x, x};
  CHECK(left_commutator(args) == commutator(commutator(y, x), x));
}

TEST_CASE("endomorphism application") {
  Alphabet a = xy();
  Endomorphism id = Endomorphism::identity(a);
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    Word u = rng.word(a, 15);
    CHECK(id.apply(u) == u);
  }

  // x -> x y x^-1, y -> x is an endomorphism; homomorphic on commutators.
  Endomorphism e(a, a, {Word::parse(a, "x*y*x^-1"), Word::parse(a, "x")});
  for (int i = 0; i < 100; ++i) {
    Word u = rng.word(a, 10), v = rng.word(a, 10);
    CHECK(e.apply(commutator(u, v)) == commutator(e.apply(u), e.apply(v)));
    CHECK(e.apply(u * v) == e.apply(u) * e.apply(v));
  }
}

TEST_CASE("endomorphism composition") {
  Alphabet a = xy();
  Endomorphism id = Endomorphism::identity(a);
  Endomorphism e(a, a, {Word::parse(a, "x*y"), Word::parse(a, "y")});
  Endomorphism f(a, a, {Word::parse(a, "y^-1"), Word::parse(a, "x")});
  CHECK(compose(id, e) == e);
  CHECK(compose(e, id) == e);

  Rng rng(23);
  Endomorphism g(a, a, {Word::parse(a, "y*x"), Word::parse(a, "x^-1")});
  Word u = rng.word(a, 12);
  CHECK(compose(compose(e, f), g).apply(u) == compose(e, compose(f, g)).apply(u));
  CHECK(compose(compose(e, f), g) == compose(e, compose(f, g)));
}

TEST_CASE("missing image is an error") {
  Alphabet a = xy();
  Alphabet b({"x"});
  Endomorphism e = Endomorphism::identity(b);
  CHECK_THROWS_AS(e.apply(Word::parse(a, "x*y")), GroupError);
  CHECK_THROWS_AS(compose(e, Endomorphism::identity(a)), GroupError);
}

TEST_CASE("word grammar round trip") {
  Alphabet a({"x", "y", "x1"});
  for (const char* text : {"1", "x", "x^-2*y*x1^3", "y^-1*x*y", "x1^2*x^-1"}) {
    Word w = Word::parse(a, text);
    CHECK(w.str() == text);
    CHECK(Word::parse(a, w.str()) == w);
  }
  // '*' and '^1' are optional on input.
  CHECK(Word::parse(a, "xy") == Word::parse(a, "x*y"));
  CHECK(Word::parse(a, "x^1y^1") == Word::parse(a, "x*y"));
  CHECK(Word::parse(a, "x x1") == Word::parse(a, "x*x1"));
  CHECK(Word::parse(a, "x^2x^-2").is_identity());
  CHECK_THROWS_AS(Word::parse(a, "z"), GroupError);
  CHECK_THROWS_AS(Word::parse(a, "x^"), GroupError);
}

TEST_CASE("cyclic reduction and normal form") {
  Alphabet a = xy();
  Word w = Word::parse(a, "y^-1*x^-1*y*x*y");  // conjugate of [x^-1... ] forms
  Word c = w.cyclically_reduced();
  CHECK(c.letter_length() <= w.letter_length());
  // Conjugates share a cyclic normal form; inverses too.
  Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    Word u = rng.word(a, 10);
    Word h = rng.word(a, 6);
    CHECK(u.conjugated_by(h).cyclic_normal_form() == u.cyclic_normal_form());
    CHECK(u.inverse().cyclic_normal_form() == u.cyclic_normal_form());
  }
}

TEST_SUITE_END();
