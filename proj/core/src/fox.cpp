#include "vkg/fox.hpp"

#include <algorithm>
#include <sstream>

#include "vkg/braid.hpp"

namespace vkg {

const char* fox_convention() { return "left: d(uv) = d(u) + abel(u)*d(v)"; }

LaurentPoly fox_derivative(const Word& w, int gen) {
  std::vector<std::string> vars;
  for (int g = 0; g < w.alphabet().rank(); ++g) vars.push_back(w.alphabet().label(g));
  LaurentPoly out(vars);
  LaurentPoly::Exponents prefix(vars.size(), 0);
  for (const Syllable& s : w.syllables()) {
    if (s.gen == gen) {
      // d(g^k) = 1 + g + ... + g^(k-1), resp. -(g^-1 + ... + g^k) for k < 0.
      LaurentPoly geo = geometric_sum(vars, static_cast<std::size_t>(s.gen), Int(s.exp));
      out += geo * LaurentPoly::monomial(vars, prefix, 1);
    }
    prefix[static_cast<std::size_t>(s.gen)] += s.exp;
  }
  return out;
}

// -- ModuleElement -----------------------------------------------------------

LaurentPoly ModuleElement::coefficient(const std::string& symbol) const {
  auto it = coeffs_.find(symbol);
  if (it != coeffs_.end()) return it->second;
  return LaurentPoly(vars_);
}

bool ModuleElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

ModuleElement& ModuleElement::add(const std::string& symbol, const LaurentPoly& coeff) {
  auto it = coeffs_.find(symbol);
  if (it == coeffs_.end()) {
    if (!coeff.is_zero()) coeffs_.emplace(symbol, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
  return *this;
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement out = a;
  for (const auto& [s, c] : b.coeffs_) out.add(s, c);
  return out;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement out(vars_);
  for (const auto& [s, c] : coeffs_) out.coeffs_.emplace(s, -c);
  return out;
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) { return a + (-b); }

ModuleElement operator*(const LaurentPoly& s, const ModuleElement& m) {
  ModuleElement out(m.vars_);
  for (const auto& [sym, c] : m.coeffs_) out.add(sym, s * c);
  return out;
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  return (a - b).is_zero();
}

std::string ModuleElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : coeffs_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*" << s;
    first = false;
  }
  return os.str();
}

// -- MagnusMatrix ------------------------------------------------------------

MagnusMatrix::MagnusMatrix(LaurentPoly scale, ModuleElement translation)
    : scale_(std::move(scale)), translation_(std::move(translation)) {
  if (!scale_.is_unit_monomial()) throw ArithmeticError("magnus scale must be a unit monomial");
}

MagnusMatrix MagnusMatrix::identity(std::vector<std::string> ring_vars) {
  ModuleElement t(ring_vars);
  return MagnusMatrix(LaurentPoly::constant(std::move(ring_vars), 1), std::move(t));
}

MagnusMatrix MagnusMatrix::generator(std::vector<std::string> ring_vars, std::size_t var_index,
                                     const std::string& symbol) {
  return with_scale(LaurentPoly::variable(ring_vars, var_index), symbol);
}

MagnusMatrix MagnusMatrix::with_scale(LaurentPoly scale, const std::string& symbol) {
  ModuleElement t(scale.variables());
  t.add(symbol, LaurentPoly::constant(scale.variables(), 1));
  return MagnusMatrix(std::move(scale), std::move(t));
}

MagnusMatrix operator*(const MagnusMatrix& a, const MagnusMatrix& b) {
  return MagnusMatrix(a.scale_ * b.scale_, a.scale_ * b.translation_ + a.translation_);
}

MagnusMatrix MagnusMatrix::inverse() const {
  const auto& term = *scale_.terms().begin();
  LaurentPoly::Exponents neg(term.first.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -term.first[i];
  LaurentPoly inv = LaurentPoly::monomial(scale_.variables(), neg, term.second);  // coeff +-1
  return MagnusMatrix(inv, -(inv * translation_));
}

MagnusMatrix MagnusMatrix::pow(std::int64_t e) const {
  MagnusMatrix base = e >= 0 ? *this : inverse();
  std::int64_t n = e >= 0 ? e : -e;
  MagnusMatrix acc = identity(scale_.variables());
  for (std::int64_t i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

bool operator==(const MagnusMatrix& a, const MagnusMatrix& b) {
  return a.scale_ == b.scale_ && a.translation_ == b.translation_;
}

MagnusMatrix magnus_image(const Word& w, const std::map<int, MagnusMatrix>& assignment) {
  if (assignment.empty()) throw ArithmeticError("magnus_image: empty assignment");
  MagnusMatrix acc = MagnusMatrix::identity(assignment.begin()->second.scale().variables());
  for (const Syllable& s : w.syllables()) {
    auto it = assignment.find(s.gen);
    if (it == assignment.end())
      throw ArithmeticError("magnus_image: unassigned generator " + w.alphabet().label(s.gen));
    acc = acc * it->second.pow(s.exp);
  }
  return acc;
}

// -- module coefficient ------------------------------------------------------

namespace {

std::vector<std::string> two_generator_vars(const Alphabet& a) {
  if (a.rank() != 2) throw ArithmeticError("module_coefficient needs a rank-2 alphabet");
  return {a.label(0), a.label(1)};
}

}  // namespace

LaurentPoly module_coefficient(const Word& w) {
  const Alphabet& alph = w.alphabet();
  auto vars = two_generator_vars(alph);
  if (w.exponent_sum(0) != 0 || w.exponent_sum(1) != 0)
    throw ArithmeticError("word is not in the commutator subgroup");

  // With u^h = h^-1 u h, conjugation by a generator multiplies the Magnus
  // translation by the inverse scale; assigning inverse-monomial scales makes
  // the module variable x act as x, matching the ring action used downstream.
  std::map<int, MagnusMatrix> assign{
      {0, MagnusMatrix::with_scale(LaurentPoly::monomial(vars, {-1, 0}, 1), "t1")},
      {1, MagnusMatrix::with_scale(LaurentPoly::monomial(vars, {0, -1}, 1), "t2")},
  };
  MagnusMatrix img = magnus_image(w, assign);

  // translation([g0,g1]) = x(y - 1) t1 + y(1 - x) t2 under these scales;
  // dividing the image translation by it componentwise yields the module
  // coordinate.
  LaurentPoly xinv = LaurentPoly::monomial(vars, {-1, 0}, 1);
  LaurentPoly yinv = LaurentPoly::monomial(vars, {0, -1}, 1);
  LaurentPoly q1 = img.translation().coefficient("t1");
  LaurentPoly q2 = img.translation().coefficient("t2");

  // p = -(x^-1 q1) / (1 - y) and p = (y^-1 q2) / (1 - x) must agree.
  LaurentPoly p1 = -divide_one_minus(xinv * q1, 1);
  LaurentPoly p2 = divide_one_minus(yinv * q2, 0);
  // Zero coefficients carry no information; a word like g0^p g1^q g0^-p g1^-q
  // with p or q = 0 has one vanishing side.
  if (!q1.is_zero() && !q2.is_zero() && p1 != p2)
    throw ArithmeticError("module coordinate mismatch between the two basis columns");
  return q1.is_zero() ? p2 : p1;
}

// -- commutator coefficient (closed form and word oracle) --------------------

static const std::vector<std::string> kXYVars = {"x", "y"};

LaurentPoly commutator_coefficient(const EndoParams& p) {
  auto mono = [&](Int ex, Int ey, int coeff = 1) {
    return LaurentPoly::monomial(kXYVars, {std::move(ex), std::move(ey)}, coeff);
  };
  LaurentPoly one = LaurentPoly::constant(kXYVars, 1);
  // S_e(v) = (1 - v^e)/(1 - v), exact in the Laurent ring.
  auto sx = [&](std::int64_t e) { return geometric_sum(kXYVars, 0, Int(e)); };
  auto sy = [&](std::int64_t e) { return geometric_sum(kXYVars, 1, Int(e)); };

  LaurentPoly out = (one - mono(p.alpha, p.beta)).scaled(p.c);
  out -= (one - mono(p.a, p.b)).scaled(p.gamma);
  out += mono(0, p.beta) * sx(p.alpha) * sy(p.b);
  out -= mono(0, p.b) * sx(p.a) * sy(p.beta);
  return out;
}

LaurentPoly commutator_coefficient_from_words(const EndoParams& p) {
  Alphabet f({"x", "y"});
  Word x = Word::generator(f, 0), y = Word::generator(f, 1);
  Word z = commutator(x, y);
  Word ex = x.pow(p.alpha) * y.pow(p.beta) * z.pow(p.gamma);
  Word ey = x.pow(p.a) * y.pow(p.b) * z.pow(p.c);
  return module_coefficient(commutator(ex, ey));
}

LaurentPoly g1_annihilator_polynomial(int r) {
  auto mono = [&](Int ex, Int ey) { return LaurentPoly::monomial(kXYVars, {std::move(ex), std::move(ey)}, 1); };
  LaurentPoly one = LaurentPoly::constant(kXYVars, 1);
  return (one - mono(-r, 0)) * (mono(0, 1) - mono(r, 0));
}

LaurentPoly relator_annihilator(const GroupPresentation& pres) {
  if (pres.generators().rank() != 2)
    throw ArithmeticError("relator_annihilator: presentation must have two generators");
  if (pres.relators().size() != 1)
    throw ArithmeticError("relator_annihilator: presentation must have one relator");
  return module_coefficient(pres.relators()[0]);
}

std::pair<Rat, Rat> annihilator_transport_augmentations(int r, const EndoParams& p) {
  if (p.det() != 1 && p.det() != -1)
    throw ArithmeticError("annihilator transport needs a unimodular parameter tuple");
  LaurentPoly transported =
      (LaurentPoly::constant(kXYVars, 2) +
       LaurentPoly::monomial(kXYVars, {Int(p.a), Int(p.b)}, 2)) *
      commutator_coefficient(p);
  return {transported.augment(), g1_annihilator_polynomial(r).augment()};
}

// -- Kishino pipeline --------------------------------------------------------

namespace {

const std::vector<std::string> kCDVars = {"C", "D"};

std::map<int, MagnusMatrix> kishino_assignment(const Alphabet& f) {
  // Scales follow the abelianized relations A = C^-3, B = C.
  std::map<int, MagnusMatrix> assign;
  assign.emplace(*f.index_of("a"),
                 MagnusMatrix::with_scale(LaurentPoly::monomial(kCDVars, {-3, 0}, 1), "gamma"));
  assign.emplace(*f.index_of("b"),
                 MagnusMatrix::with_scale(LaurentPoly::variable(kCDVars, 0), "lambda"));
  assign.emplace(*f.index_of("c"),
                 MagnusMatrix::with_scale(LaurentPoly::variable(kCDVars, 0), "mu"));
  assign.emplace(*f.index_of("d"),
                 MagnusMatrix::with_scale(LaurentPoly::variable(kCDVars, 1), "nu"));
  return assign;
}

}  // namespace

KishinoModuleRelation kishino_module_relation() {
  GroupPresentation ki = fixture("kishino-g3");
  const Alphabet& f = ki.generators();
  auto assign = kishino_assignment(f);
  const Relation& rel = ki.relations().at(0);  // c^-1 b c = b^-d c^(d^-1) b^d

  KishinoModuleRelation out;
  MagnusMatrix lhs = magnus_image(rel.lhs, assign);
  MagnusMatrix rhs = magnus_image(rel.rhs, assign);
  if (lhs.scale() != rhs.scale())
    throw ArithmeticError("kishino module relation: scales disagree");
  out.lhs = lhs.translation();
  out.rhs = rhs.translation();

  LaurentPoly cd = LaurentPoly::monomial(kCDVars, {1, 1}, 1);
  out.cleared = cd * (out.lhs - out.rhs);

  // (1 - C + D) divides every cleared coefficient; the quotient is the module
  // relation lambda - D mu + (C - 1) nu (up to overall sign).
  LaurentPoly divisor = LaurentPoly::constant(kCDVars, 1) - LaurentPoly::variable(kCDVars, 0) +
                        LaurentPoly::variable(kCDVars, 1);
  out.division_exact = true;
  ModuleElement residual(kCDVars);
  for (const auto& [sym, coeff] : out.cleared.coefficients()) {
    auto q = try_divide(coeff, divisor);
    if (!q) {
      out.division_exact = false;
      break;
    }
    residual.add(sym, *q);
  }
  if (!out.division_exact)
    throw ArithmeticError("kishino module relation: (1 - C + D) does not divide the cleared relation");
  out.residual = residual;

  // With the residual imposed the products dc and bd have equal images.
  Word dc = Word::parse(f, "d*c"), bd = Word::parse(f, "b*d");
  MagnusMatrix mdc = magnus_image(dc, assign);
  MagnusMatrix mbd = magnus_image(bd, assign);
  ModuleElement diff = mdc.translation() - mbd.translation();
  out.dc_bd_consistent = mdc.scale() == mbd.scale() && (diff == residual || diff == -residual);
  return out;
}

Word kishino_certificate_word() {
  Alphabet f({"a", "c", "d"});
  Word a = Word::parse(f, "a"), c = Word::parse(f, "c"), d = Word::parse(f, "d");
  // w = c c^(2 d^-1) a a^d a^-1, with g^h = h^-1 g h.
  return c * c.pow(2).conjugated_by(d.inverse()) * a * a.conjugated_by(d) * a.inverse();
}

Word kishino_reduced_relation_relator() {
  Alphabet f({"a", "c", "d"});
  Word a = Word::parse(f, "a"), c = Word::parse(f, "c"), d = Word::parse(f, "d");
  // c^-1 c^(-2 d^-1) = a a^d a^-1 as a single relator.
  Word lhs = c.inverse() * c.pow(-2).conjugated_by(d.inverse());
  Word rhs = a * a.conjugated_by(d) * a.inverse();
  return lhs * rhs.inverse();
}

KishinoReduction kishino_one_relator_reduction() {
  GroupPresentation ki = fixture("kishino-g3");
  const Alphabet& f = ki.generators();
  // b = c^(d^-1) = d c d^-1, the relation forced by the module computation.
  Word b_image = Word::parse(f, "d*c*d^-1");
  KishinoReduction out;
  out.reduced = substitute_generator(ki, "b", b_image);
  out.single_relator = out.reduced.relators().size() == 1;
  if (out.single_relator) {
    Word rel = out.reduced.relators()[0];
    // Same alphabet <a, c, d> everywhere.
    out.matches_reduced_relation =
        rel.cyclic_normal_form() == kishino_reduced_relation_relator().cyclic_normal_form();
    out.matches_certificate_word =
        rel.cyclic_normal_form() == kishino_certificate_word().cyclic_normal_form();
  }
  return out;
}

Relation kishino_relation1_reconstructed() {
  GroupPresentation ki = fixture("kishino-g3");
  const Alphabet& f = ki.generators();
  auto w = [&](std::string_view s) { return Word::parse(f, s); };
  auto conj = [&](const Word& g, const Word& h) { return g.conjugated_by(h); };
  Word a = w("a"), b = w("b"), c = w("c"), d = w("d");
  Word cm2 = conj(c.pow(-2), d.inverse());
  // d^-1 b^-d c^(-2 d^-1) b^-d c^(-2 d^-1) a a^(-2d) d = a^-1 b^-d c^(-2 d^-1) a
  Relation rel;
  rel.lhs = d.inverse() * conj(b.inverse(), d) * cm2 * conj(b.inverse(), d) * cm2 * a *
            conj(a.pow(-2), d) * d;
  rel.rhs = a.inverse() * conj(b.inverse(), d) * cm2 * a;
  return rel;
}

bool kishino_relation1_trivializes(const Relation& relation1) {
  GroupPresentation holder = GroupPresentation::from_relations(
      fixture("kishino-g3").generators(), {relation1});
  Word b_image = Word::parse(holder.generators(), "d*c*d^-1");
  GroupPresentation substituted = substitute_generator(holder, "b", b_image);
  if (substituted.relators().empty()) return true;
  if (substituted.relators().size() != 1) return false;

  const Alphabet& f = substituted.generators();
  Word a = Word::parse(f, "a"), c = Word::parse(f, "c"), d = Word::parse(f, "d");
  Word pattern = c.inverse() * c.pow(-2).conjugated_by(d.inverse());  // c^-1 c^(-2 d^-1)
  Word replacement = a * a.conjugated_by(d) * a.inverse();            // a a^d a^-1
  Word rewritten = replace_subword(substituted.relators()[0], pattern, replacement);
  return rewritten.cyclically_reduced().is_identity();
}

KishinoCertificate unimodularity_certificate() {
  KishinoCertificate cert;
  cert.convention = fox_convention();
  cert.minimal_polynomial = CubicFieldElement::minimal_polynomial_str();

  Word w = kishino_certificate_word();
  const Alphabet& f = w.alphabet();
  std::vector<std::string> vars = {"a", "c", "d"};

  LaurentPoly da = fox_derivative(w, *f.index_of("a"));
  LaurentPoly dc = fox_derivative(w, *f.index_of("c"));
  LaurentPoly dd = fox_derivative(w, *f.index_of("d"));
  cert.fox_derivatives = {{"a", da}, {"c", dc}, {"d", dd}};

  // Unit clearing: (c^-3 d * da, dc, c^-1 d * dd) has polynomial entries.
  LaurentPoly u1 = LaurentPoly::monomial(vars, {0, -3, 1}, 1);
  LaurentPoly u3 = LaurentPoly::monomial(vars, {0, -1, 1}, 1);
  cert.cleared_vector = {u1 * da, dc, u3 * dd};

  // The common zero: c0 a root of the minimal polynomial, d0 = -1/(c0^2+c0),
  // a0 = 1/(c0^2+c0+1).
  CubicFieldElement c0 = CubicFieldElement::generator();
  CubicFieldElement one = CubicFieldElement::one();
  CubicFieldElement d0 = -((c0 * c0 + c0).inverse());
  CubicFieldElement a0 = (c0 * c0 + c0 + one).inverse();
  cert.point = {{"a", a0}, {"c", c0}, {"d", d0}};

  auto evaluate = [&](const LaurentPoly& p) {
    CubicFieldElement acc = CubicFieldElement::zero();
    for (const auto& [e, coeff] : p.terms()) {
      CubicFieldElement term = CubicFieldElement(coeff, 0, 0);
      term = term * a0.pow(static_cast<long>(e[0]));
      term = term * c0.pow(static_cast<long>(e[1]));
      term = term * d0.pow(static_cast<long>(e[2]));
      acc = acc + term;
    }
    return acc;
  };

  cert.all_vanish = true;
  for (const LaurentPoly& p : cert.cleared_vector) {
    CubicFieldElement v = evaluate(p);
    cert.evaluations.push_back(v);
    if (!v.is_zero()) cert.all_vanish = false;
  }

  cert.point_invertible = !a0.is_zero() && !c0.is_zero() && !d0.is_zero() &&
                          (a0 * a0.inverse() == one) && (c0 * c0.inverse() == one) &&
                          (d0 * d0.inverse() == one);
  cert.monomials_nonzero = true;
  for (long g = 1; g <= 3; ++g)
    for (long p = 1; p <= 3; ++p)
      for (long n = 1; n <= 3; ++n)
        if ((a0.pow(g) * c0.pow(p) * d0.pow(n)).is_zero()) cert.monomials_nonzero = false;

  cert.verdict = cert.verified() ? "NOT-UNIMODULAR" : "INCONCLUSIVE";
  return cert;
}

}  // namespace vkg
