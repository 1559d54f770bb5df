#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vkg/free_group.hpp"
#include "vkg/int_matrix.hpp"

namespace vkg {

/// A relation lhs = rhs, kept for display; the working form is the single
/// relator lhs * rhs^-1.
struct Relation {
  Word lhs;
  Word rhs;
  Word relator() const { return lhs * rhs.inverse(); }
};

/// Finite presentation <generators | relators>, relators freely reduced.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  GroupPresentation(Alphabet gens, std::vector<Word> relators);
  static GroupPresentation from_relations(Alphabet gens, std::vector<Relation> relations);

  const Alphabet& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  /// Two-sided display forms when the presentation was built from relations.
  const std::vector<Relation>& relations() const { return relations_; }

  std::string str() const;

 private:
  Alphabet generators_;
  std::vector<Word> relators_;
  std::vector<Relation> relations_;
};

/// Exponent-sum matrix: rows = relators, columns = generators.
IntMatrix relator_exponent_matrix(const GroupPresentation& p);

/// Structure of G/G' via Smith normal form of the exponent-sum matrix.
AbelianStructure abelianization(const GroupPresentation& p);

// -- Tietze transformations ------------------------------------------------

struct TietzeAddGenerator {
  std::string label;
  Word definition;  // over the existing generators
};
struct TietzeRemoveGenerator {
  std::string label;
};
struct TietzeAddRelatorProduct {
  std::size_t i = 0;
  std::size_t j = 0;
};
struct TietzeRemoveRedundantRelator {
  std::size_t index = 0;
};

GroupPresentation tietze(const GroupPresentation& p, const TietzeAddGenerator& move);
/// Applicable when the generator occurs with exponent +-1 in exactly one
/// syllable of exactly one relator; that relator is solved and eliminated.
GroupPresentation tietze(const GroupPresentation& p, const TietzeRemoveGenerator& move);
GroupPresentation tietze(const GroupPresentation& p, const TietzeAddRelatorProduct& move);
/// Applicable when the relator is freely trivial, equal to another relator or
/// its inverse, or equal to a product of two other relators.
GroupPresentation tietze(const GroupPresentation& p, const TietzeRemoveRedundantRelator& move);

/// Replaces generator g by the word w (over the remaining generators)
/// everywhere, drops g, reduces relators cyclically and discards trivial
/// ones.
GroupPresentation substitute_generator(const GroupPresentation& p, std::string_view gen_label,
                                       const Word& replacement);

/// Replaces literal letter-level occurrences of `pattern` (and of its
/// inverse, mirrored) inside `w` by `replacement`. Sound modulo the relation
/// pattern = replacement.
Word replace_subword(const Word& w, const Word& pattern, const Word& replacement);

}  // namespace vkg
