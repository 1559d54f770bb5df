#pragma once

#include <map>
#include <string>
#include <vector>

#include "vkg/free_group.hpp"
#include "vkg/int_matrix.hpp"
#include "vkg/presentation.hpp"

namespace vkg {

/// A basic commutator: a leaf generator or a bracket of two earlier basis
/// elements satisfying the Hall conditions. Ordered by weight, then
/// recursively by (left, right); the position in the basis list is the order.
struct BasicCommutator {
  int weight = 1;
  int generator = -1;      // leaf when >= 0
  int left = -1;           // otherwise: indices of the children in the basis
  int right = -1;
  std::string label;       // e.g. "[y,x,x]"
};

/// Number of basic commutators of weight k on n generators
/// (the Witt formula (1/k) sum_{d|k} mu(d) n^(k/d)).
Int witt_number(int rank, int weight);

/// Weight-graded Hall basis up to the given class; supported for
/// rank <= 3, class <= 5 (enough for the fixture computations, keeps the
/// series solver tiny).
std::vector<BasicCommutator> hall_basis(const Alphabet& generators, int cls);

/// The basic commutator expanded as a free-group word.
Word basic_commutator_word(const Alphabet& generators, const std::vector<BasicCommutator>& basis,
                           int index);

/// Normal form in the free nilpotent group of the given class: exponent
/// vector over the Hall basis. Computed through the faithful series
/// embedding g -> 1 + G: peel one weight at a time, matching the degree-k
/// homogeneous part against the basic Lie elements of weight k.
class NilpotentElement {
 public:
  NilpotentElement() = default;
  NilpotentElement(Alphabet generators, int cls);

  const Alphabet& generators() const { return generators_; }
  int cls() const { return cls_; }
  bool is_identity() const { return exponents_.empty(); }
  const std::map<int, Int>& exponents() const { return exponents_; }
  Int exponent(int basis_index) const;

  /// The normal-form word b1^e1 ... bm^em.
  Word word(const std::vector<BasicCommutator>& basis) const;

  friend bool operator==(const NilpotentElement& a, const NilpotentElement& b);
  friend bool operator!=(const NilpotentElement& a, const NilpotentElement& b) { return !(a == b); }

  std::string str(const std::vector<BasicCommutator>& basis) const;

 private:
  friend NilpotentElement collect(const Word& w, int cls);
  Alphabet generators_;
  int cls_ = 1;
  std::map<int, Int> exponents_;  // basis index -> exponent, zeros absent
};

/// Hall-basis normal form of a word modulo gamma_{cls+1}; a homomorphism
/// onto the free nilpotent group of the given class.
NilpotentElement collect(const Word& w, int cls);

/// Product via collection of the concatenated normal-form words.
NilpotentElement nilpotent_mul(const NilpotentElement& a, const NilpotentElement& b);

/// Normal form of one relator modulo gamma_{cls+1}.
NilpotentElement relator_mod_gamma(const GroupPresentation& p, std::size_t relator_index, int cls);

/// Structure of gamma_k G / gamma_{k+1} G for a presented group: the free
/// layer modulo rows collected from iterated commutators [rho, v_1..v_j] of
/// each relator with generators, where j = k - (leading weight of rho).
/// Exact on the desk-scale fixtures (single relator in the commutator
/// subgroup); for several interacting relators the row set is a documented
/// generating heuristic.
struct GradedLayer {
  int k = 1;
  AbelianStructure structure;
  IntMatrix relation_matrix;  // rows over the weight-k basic commutators
};
GradedLayer lcs_quotient(const GroupPresentation& p, int k);

}  // namespace vkg
