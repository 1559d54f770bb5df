#include "vkg/braid.hpp"

#include <cctype>
#include <sstream>

namespace vkg {

VirtualBraidWord VirtualBraidWord::parse(int strands, std::string_view text) {
  if (strands < 1) throw GroupError("braid needs at least one strand");
  VirtualBraidWord b;
  b.strands = strands;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char c = text[i];
    if (c != 's' && c != 'S' && c != 'v')
      throw GroupError("braid token must start with s, S or v");
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw GroupError("braid token needs an index");
    int idx = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + (text[i] - '0');
      ++i;
    }
    if (idx < 1 || idx > strands - 1) throw GroupError("braid generator index out of range");
    VBLetter l;
    l.kind = c == 'v' ? VBKind::Virtual : VBKind::Classical;
    l.index = idx;
    l.sign = c == 'S' ? -1 : 1;
    b.letters.push_back(l);
  }
  return b;
}

std::string VirtualBraidWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    const VBLetter& l = letters[i];
    os << (l.kind == VBKind::Virtual ? 'v' : (l.sign < 0 ? 'S' : 's')) << l.index;
  }
  return os.str();
}

WadaKind WadaKind::w1(int r) {
  if (r <= 0) throw GroupError("W1 twist exponent must be positive");
  return {WadaFamily::W1, r};
}

std::string WadaKind::str() const {
  switch (family) {
    case WadaFamily::W1: {
      std::ostringstream os;
      os << "w1(" << r << ")";
      return os.str();
    }
    case WadaFamily::W2:
      return "w2";
    default:
      return "w3";
  }
}

Alphabet braid_target_alphabet(int strands) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(strands) + 1);
  labels.emplace_back("y");
  for (int i = 1; i <= strands; ++i) labels.push_back("x" + std::to_string(i));
  return Alphabet(std::move(labels));
}

Endomorphism generator_action(const WadaKind& kind, const VBLetter& letter, int strands) {
  if (letter.index < 1 || letter.index > strands - 1)
    throw GroupError("braid generator index out of range");
  Alphabet f = braid_target_alphabet(strands);
  const int y = 0;
  const int a = letter.index;      // x_i
  const int b = letter.index + 1;  // x_{i+1}

  auto gen = [&](int id, std::int64_t e = 1) { return Word::generator(f, id, e); };
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  for (int g = 0; g < f.rank(); ++g) images.push_back(gen(g));

  if (letter.kind == VBKind::Virtual) {
    // x_i -> y x_{i+1} y^-1, x_{i+1} -> y^-1 x_i y  (an involution)
    images[a] = gen(y) * gen(b) * gen(y, -1);
    images[b] = gen(y, -1) * gen(a) * gen(y);
    return Endomorphism(f, f, std::move(images));
  }

  const int r = kind.family == WadaFamily::W1 ? kind.r : 0;
  if (letter.sign > 0) {
    switch (kind.family) {
      case WadaFamily::W1:
        images[a] = gen(a, r) * gen(b) * gen(a, -r);
        images[b] = gen(a);
        break;
      case WadaFamily::W2:
        images[a] = gen(a) * gen(b, -1) * gen(a);
        images[b] = gen(a);
        break;
      case WadaFamily::W3:
        images[a] = gen(a, 2) * gen(b);
        images[b] = gen(b, -1) * gen(a, -1) * gen(b);
        break;
    }
  } else {
    // Closed-form inverses; each is unit-tested by composing to the identity.
    switch (kind.family) {
      case WadaFamily::W1:
        images[a] = gen(b);
        images[b] = gen(b, -r) * gen(a) * gen(b, r);
        break;
      case WadaFamily::W2:
        images[a] = gen(b);
        images[b] = gen(b) * gen(a, -1) * gen(b);
        break;
      case WadaFamily::W3:
        images[a] = gen(a) * gen(b, -1) * gen(a, -1);
        images[b] = gen(a) * gen(b, 2);
        break;
    }
  }
  return Endomorphism(f, f, std::move(images));
}

Endomorphism represent(const WadaKind& kind, const VirtualBraidWord& braid) {
  Endomorphism acc = Endomorphism::identity(braid_target_alphabet(braid.strands));
  for (const VBLetter& l : braid.letters) acc = compose(acc, generator_action(kind, l, braid.strands));
  return acc;
}

GroupPresentation link_group(const WadaKind& kind, const VirtualBraidWord& braid) {
  Endomorphism phi = represent(kind, braid);
  Alphabet f = phi.source();
  std::vector<Relation> relations;
  for (int i = 1; i < f.rank(); ++i) {
    Relation rel{Word::generator(f, i), phi.image(i)};
    if (!rel.relator().is_identity()) relations.push_back(std::move(rel));
  }
  return GroupPresentation::from_relations(f, std::move(relations));
}

namespace {

GroupPresentation trefoil_g1(int r) {
  Alphabet f({"x", "y"});
  auto w = [&](std::string_view s) { return Word::parse(f, s); };
  std::ostringstream lhs, rhs;
  lhs << "x^-" << r << "*y^-1*x*y*x^" << r;
  rhs << "y^-2*x^" << r << "*y*x*y^-1*x^-" << r << "*y^2";
  return GroupPresentation::from_relations(f, {{w(lhs.str()), w(rhs.str())}});
}

GroupPresentation trefoil_g2() {
  Alphabet f({"x", "y"});
  auto w = [&](std::string_view s) { return Word::parse(f, s); };
  return GroupPresentation::from_relations(
      f, {{w("x*y^-1*x^-1*y*x"), w("y^-2*x*y*x^-1*y^-1*x*y^2")}});
}

GroupPresentation trefoil_g3() {
  Alphabet f({"x1", "x2", "y"});
  auto w = [&](std::string_view s) { return Word::parse(f, s); };
  return GroupPresentation::from_relations(
      f, {{w("x1"), w("y*x2^-1*x1^-1*x2^-1*x1^-1*x2*y^-1")},
          {w("x2"), w("y^-1*x1^2*x2*x1*x2*y")}});
}

GroupPresentation kishino_g3() {
  // Generators a, b, c, d; g^h below means h^-1 g h. The first defining
  // relation of this group is not stored: the non-freeness pipeline only
  // needs the remaining two (see fox.hpp), and callers may supply their own
  // reading of it as extra input.
  Alphabet f({"a", "b", "c", "d"});
  auto w = [&](std::string_view s) { return Word::parse(f, s); };
  auto conj = [&](const Word& g, const Word& h) { return g.conjugated_by(h); };
  Word a = w("a"), b = w("b"), c = w("c"), d = w("d");

  // c^-1 b c = b^-d c^(d^-1) b^d
  Relation r2{c.inverse() * b * c,
              conj(b.inverse(), d) * conj(c, d.inverse()) * conj(b, d)};
  // c = b^-d c^(-2 d^-1) b^-d c^(-2 d^-1) a a^-d a^-1 c^(2 d^-1) b^(2d)
  Word cm2 = conj(c.pow(-2), d.inverse());
  Relation r3{c, conj(b.inverse(), d) * cm2 * conj(b.inverse(), d) * cm2 * a *
                     conj(a.inverse(), d) * a.inverse() * cm2.inverse() * conj(b.pow(2), d)};
  return GroupPresentation::from_relations(f, {r2, r3});
}

GroupPresentation unknot_g3() {
  return GroupPresentation(braid_target_alphabet(1), {});
}

}  // namespace

GroupPresentation fixture(std::string_view name, int r) {
  if (name == "trefoil-g1") return trefoil_g1(r);
  if (name == "trefoil-g2") return trefoil_g2();
  if (name == "trefoil-g3") return trefoil_g3();
  if (name == "kishino-g3") return kishino_g3();
  if (name == "unknot-g3") return unknot_g3();
  throw GroupError("unknown fixture: " + std::string(name));
}

std::vector<std::string> fixture_names() {
  return {"trefoil-g1", "trefoil-g2", "trefoil-g3", "kishino-g3", "unknot-g3"};
}

}  // namespace vkg
