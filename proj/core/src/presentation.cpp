#include "vkg/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace vkg {

GroupPresentation::GroupPresentation(Alphabet gens, std::vector<Word> relators)
    : generators_(std::move(gens)) {
  relators_.reserve(relators.size());
  for (Word& w : relators) {
    if (!w.is_identity() && w.alphabet() != generators_)
      throw GroupError("relator over wrong alphabet");
    relators_.push_back(std::move(w));
  }
}

GroupPresentation GroupPresentation::from_relations(Alphabet gens, std::vector<Relation> relations) {
  std::vector<Word> relators;
  relators.reserve(relations.size());
  for (const Relation& r : relations) relators.push_back(r.relator());
  GroupPresentation p(std::move(gens), std::move(relators));
  p.relations_ = std::move(relations);
  return p;
}

std::string GroupPresentation::str() const {
  std::ostringstream os;
  os << "< ";
  for (int g = 0; g < generators_.rank(); ++g) {
    if (g) os << ", ";
    os << generators_.label(g);
  }
  os << " |";
  if (!relations_.empty()) {
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      os << (i ? ", " : " ") << relations_[i].lhs.str() << " = " << relations_[i].rhs.str();
    }
  } else {
    for (std::size_t i = 0; i < relators_.size(); ++i) os << (i ? ", " : " ") << relators_[i].str();
  }
  os << " >";
  return os.str();
}

IntMatrix relator_exponent_matrix(const GroupPresentation& p) {
  IntMatrix m(p.relators().size(), static_cast<std::size_t>(p.generators().rank()));
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (int g = 0; g < p.generators().rank(); ++g)
      m.at(r, static_cast<std::size_t>(g)) = p.relators()[r].exponent_sum(g);
  return m;
}

AbelianStructure abelianization(const GroupPresentation& p) {
  if (p.relators().empty()) {
    AbelianStructure st;
    st.rank = p.generators().rank();
    return st;
  }
  return cokernel_structure(relator_exponent_matrix(p));
}

namespace {

std::vector<std::string> labels_of(const Alphabet& a) {
  std::vector<std::string> ls;
  ls.reserve(static_cast<std::size_t>(a.rank()));
  for (int g = 0; g < a.rank(); ++g) ls.push_back(a.label(g));
  return ls;
}

Word reword(const Word& w, const Alphabet& from, const Alphabet& to) {
  Word out(to);
  for (const Syllable& s : w.syllables()) {
    auto id = to.index_of(from.label(s.gen));
    if (!id) throw GroupError("generator missing from target alphabet");
    out *= Word::generator(to, *id, s.exp);
  }
  return out;
}

}  // namespace

GroupPresentation tietze(const GroupPresentation& p, const TietzeAddGenerator& move) {
  if (!move.definition.is_identity() && move.definition.alphabet() != p.generators())
    throw GroupError("tietze add-generator: definition must be over the existing generators");
  auto labels = labels_of(p.generators());
  labels.push_back(move.label);
  Alphabet bigger(labels);
  std::vector<Word> relators;
  relators.reserve(p.relators().size() + 1);
  for (const Word& r : p.relators()) relators.push_back(reword(r, p.generators(), bigger));
  int z = bigger.rank() - 1;
  relators.push_back(Word::generator(bigger, z) * reword(move.definition, p.generators(), bigger).inverse());
  return GroupPresentation(bigger, std::move(relators));
}

GroupPresentation tietze(const GroupPresentation& p, const TietzeRemoveGenerator& move) {
  auto id = p.generators().index_of(move.label);
  if (!id) throw GroupError("tietze remove-generator: unknown generator " + move.label);
  int z = *id;

  // A defining relator solves for z: z occurs in exactly one syllable, with
  // exponent +-1. The solution is substituted into every other relator.
  std::optional<std::size_t> defining;
  for (std::size_t i = 0; i < p.relators().size() && !defining; ++i) {
    int occurrences = 0;
    bool unit = true;
    for (const Syllable& s : p.relators()[i].syllables())
      if (s.gen == z) {
        ++occurrences;
        if (s.exp != 1 && s.exp != -1) unit = false;
      }
    if (occurrences == 1 && unit) defining = i;
  }
  if (!defining) throw GroupError("tietze remove-generator: no relator solves for " + move.label);

  // Solve u z^e v = 1 for z.
  const Word& r = p.relators()[*defining];
  Word u(p.generators()), v(p.generators());
  int e = 0;
  {
    bool seen = false;
    for (const Syllable& s : r.syllables()) {
      if (s.gen == z) {
        e = static_cast<int>(s.exp);
        seen = true;
      } else {
        Word g = Word::generator(p.generators(), s.gen, s.exp);
        (seen ? v : u) *= g;
      }
    }
  }
  Word solved = e == 1 ? u.inverse() * v.inverse() : v * u;  // z = ...

  std::vector<std::string> labels;
  for (int g = 0; g < p.generators().rank(); ++g)
    if (g != z) labels.push_back(p.generators().label(g));
  Alphabet smaller(labels);
  Word image = reword(solved, p.generators(), smaller);  // throws if z occurs in its own solution

  std::vector<Word> relators;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i == *defining) continue;
    relators.push_back(p.relators()[i].substituted(z, image, smaller));
  }
  return GroupPresentation(smaller, std::move(relators));
}

GroupPresentation tietze(const GroupPresentation& p, const TietzeAddRelatorProduct& move) {
  if (move.i >= p.relators().size() || move.j >= p.relators().size())
    throw GroupError("tietze add-relator-product: index out of range");
  std::vector<Word> relators = p.relators();
  relators.push_back(p.relators()[move.i] * p.relators()[move.j]);
  return GroupPresentation(p.generators(), std::move(relators));
}

GroupPresentation tietze(const GroupPresentation& p, const TietzeRemoveRedundantRelator& move) {
  if (move.index >= p.relators().size())
    throw GroupError("tietze remove-redundant-relator: index out of range");
  const Word& r = p.relators()[move.index];
  bool redundant = r.is_identity();
  for (std::size_t i = 0; i < p.relators().size() && !redundant; ++i) {
    if (i == move.index) continue;
    if (p.relators()[i] == r || p.relators()[i].inverse() == r) redundant = true;
  }
  for (std::size_t i = 0; i < p.relators().size() && !redundant; ++i)
    for (std::size_t j = 0; j < p.relators().size() && !redundant; ++j) {
      if (i == move.index || j == move.index) continue;
      if (p.relators()[i] * p.relators()[j] == r) redundant = true;
    }
  if (!redundant) throw GroupError("tietze remove-redundant-relator: relator is not visibly redundant");
  std::vector<Word> relators;
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    if (i != move.index) relators.push_back(p.relators()[i]);
  return GroupPresentation(p.generators(), std::move(relators));
}

GroupPresentation substitute_generator(const GroupPresentation& p, std::string_view gen_label,
                                       const Word& replacement) {
  auto id = p.generators().index_of(gen_label);
  if (!id) throw GroupError("substitute_generator: unknown generator");
  int z = *id;
  // Substituting a generator by itself is the identity move.
  if (replacement == Word::generator(p.generators(), z)) return p;

  std::vector<std::string> labels;
  for (int g = 0; g < p.generators().rank(); ++g)
    if (g != z) labels.push_back(p.generators().label(g));
  Alphabet smaller(labels);

  Word image = replacement.is_identity() ? Word(smaller) : reword(replacement, replacement.alphabet(), smaller);
  std::vector<Word> relators;
  for (const Word& r : p.relators()) {
    Word s = r.substituted(z, image, smaller).cyclically_reduced();
    if (!s.is_identity()) relators.push_back(std::move(s));
  }
  return GroupPresentation(smaller, std::move(relators));
}

Word replace_subword(const Word& w, const Word& pattern, const Word& replacement) {
  if (pattern.is_identity()) throw GroupError("replace_subword: empty pattern");
  auto expand = [](const Word& x) {
    std::vector<Syllable> out;
    for (const Syllable& s : x.syllables()) {
      std::int64_t n = s.exp > 0 ? s.exp : -s.exp;
      for (std::int64_t i = 0; i < n; ++i) out.push_back({s.gen, s.exp > 0 ? 1 : -1});
    }
    return out;
  };
  auto letters = expand(w);
  auto pat = expand(pattern);
  auto pat_inv = expand(pattern.inverse());
  auto rep = expand(replacement);
  auto rep_inv = expand(replacement.inverse());

  std::vector<Syllable> out;
  std::size_t i = 0;
  auto match_at = [&](const std::vector<Syllable>& p) {
    if (i + p.size() > letters.size()) return false;
    return std::equal(p.begin(), p.end(), letters.begin() + static_cast<std::ptrdiff_t>(i));
  };
  while (i < letters.size()) {
    if (match_at(pat)) {
      out.insert(out.end(), rep.begin(), rep.end());
      i += pat.size();
    } else if (match_at(pat_inv)) {
      out.insert(out.end(), rep_inv.begin(), rep_inv.end());
      i += pat_inv.size();
    } else {
      out.push_back(letters[i]);
      ++i;
    }
  }
  return Word::reduce(w.alphabet(), out);
}

}  // namespace vkg
