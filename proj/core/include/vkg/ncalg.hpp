#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vkg/free_group.hpp"
#include "vkg/numeric.hpp"
#include "vkg/presentation.hpp"

namespace vkg {

/// Monomials are words over single-character variables ("", "X", "XYX", ...),
/// ordered by degree then lexicographically.
struct DegLexLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Polynomial in noncommuting variables with exact rational coefficients.
class NcPoly {
 public:
  NcPoly() = default;
  static NcPoly constant(const Rat& c);
  static NcPoly monomial(std::string word, const Rat& coeff = 1);

  const std::map<std::string, Rat, DegLexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero

  NcPoly& add_term(const std::string& word, const Rat& coeff);
  friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator-(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o) { return *this = *this + o; }
  NcPoly& operator-=(const NcPoly& o) { return *this = *this - o; }
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  std::map<std::string, Rat, DegLexLess> terms_;
};

/// A quotient of the free power-series algebra, described by monomial
/// rewriting data: forbidden substrings kill a monomial, identifications
/// rewrite one substring into a strictly (degree, word)-smaller one, the
/// commutative flag sorts letters first, and an optional truncation drops
/// high degrees. Every rule strictly decreases (degree, word), so reduction
/// terminates.
class AlgebraSpec {
 public:
  using Identification = std::pair<std::string, std::string>;  // from -> to

  AlgebraSpec(std::string alphabet, std::vector<std::string> forbidden, bool commutative = false,
              std::optional<int> truncation = std::nullopt,
              std::vector<Identification> identifications = {});

  /// Plain truncated power-series algebra on `n` variables.
  static AlgebraSpec power_series(std::string alphabet, int truncation);

  const std::string& alphabet() const { return alphabet_; }
  const std::vector<std::string>& forbidden() const { return forbidden_; }
  bool commutative() const { return commutative_; }
  std::optional<int> truncation() const { return truncation_; }
  const std::vector<Identification>& identifications() const { return identifications_; }

  /// Spec over the same rules with one extra variable appended.
  AlgebraSpec extended(char variable) const;

  /// Normal form of a single monomial; nullopt when it vanishes.
  std::optional<std::string> reduce_monomial(const std::string& word) const;
  /// Smallest e with v^e = 0, when one exists.
  std::optional<int> nilpotency_degree(char variable) const;

  std::string str() const;

 private:
  std::string alphabet_;
  std::vector<std::string> forbidden_;
  bool commutative_ = false;
  std::optional<int> truncation_;
  std::vector<Identification> identifications_;
};

/// Normal form of a polynomial under the spec's rewriting.
NcPoly nc_reduce(const NcPoly& p, const AlgebraSpec& spec);

/// Image of a free-group word under generator i -> 1 + <i-th variable>,
/// multiplicative modulo the spec. Inverse letters expand the geometric
/// series, which must be finite (nilpotent variable) or truncated.
NcPoly group_to_series(const Word& w, const AlgebraSpec& spec);

/// f_j = series(relator_j) - 1 for every relator.
std::vector<NcPoly> relator_series(const GroupPresentation& p, const AlgebraSpec& spec);

/// series(lhs) - series(rhs) for a two-sided relation: the polynomial that
/// must vanish for the assignment to extend to a representation.
NcPoly relation_difference(const Relation& rel, const AlgebraSpec& spec);

/// True iff every relator's series reduces to zero under the spec.
struct RelationCheck {
  bool holds = false;
  std::vector<NcPoly> residues;  // one per relator, zero iff satisfied
};
RelationCheck verify_relation(const GroupPresentation& p, const AlgebraSpec& spec);

/// All normal-form monomials of degree <= cap, and the total dimension when
/// the enumeration saturates (some degree level below the cap is empty).
struct MonomialBasis {
  std::vector<std::string> monomials;
  bool saturated = false;
  std::optional<std::size_t> dimension;
};
MonomialBasis monomial_basis(const AlgebraSpec& spec, int degree_cap);

/// Dense rational matrix, used for regular representations.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix identity(std::size_t n);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;
  Rat determinant() const;
  std::optional<RatMatrix> inverse() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Left-multiplication matrices of 1 + variable on the monomial basis of a
/// finite-dimensional spec; group generators act invertibly and every
/// relator maps to the identity matrix.
struct RegularRepresentation {
  std::vector<std::string> basis;
  std::vector<RatMatrix> generator_matrices;  // one per variable
  RatMatrix matrix_of(const NcPoly& p, const AlgebraSpec& spec) const;
};
RegularRepresentation regular_representation(const AlgebraSpec& spec);

/// Word image under the representation: product of generator matrices (with
/// exact inverses for negative letters).
RatMatrix representation_matrix(const RegularRepresentation& rep, const Word& w);

// -- Tietze invariance of the series ideal ----------------------------------

/// Row space of {u f v : monomials u, v} over the truncated monomial basis;
/// membership tests are exact rational rank comparisons.
class TruncatedIdeal {
 public:
  TruncatedIdeal(const std::vector<NcPoly>& generators, const AlgebraSpec& spec);
  bool contains(const NcPoly& p) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dimension() const { return basis_.size(); }

 private:
  AlgebraSpec spec_;
  std::vector<std::string> basis_;
  std::vector<std::vector<Rat>> rows_;  // row-echelon form
  void insert(std::vector<Rat> row);
};

struct TietzeIdealReport {
  bool ok = false;
  std::vector<std::string> notes;
};

/// Adding the relator product r_i r_j: the new series equals
/// f_i + f_j + f_i f_j and lies in the truncated ideal <f_i, f_j>.
TietzeIdealReport tietze_relator_product_check(const GroupPresentation& p, std::size_t i,
                                               std::size_t j, const AlgebraSpec& spec);

/// Adding a generator z = w and removing it again leaves truncated ideal
/// membership unchanged for the original relator series.
TietzeIdealReport tietze_generator_roundtrip_check(const GroupPresentation& p, const Word& definition,
                                                   const std::string& label, const AlgebraSpec& spec);

/// Bounded-degree dimension count of B/<f> for f with leading part
/// a(XY)^k + b(YX)^k or a(XY)^k X + b(YX)^k Y inside the square-free
/// two-variable algebra; checks dim <= 4k + 1.
struct DimensionBoundReport {
  int k = 0;
  std::size_t dimension = 0;
  std::size_t bound = 0;
  bool within_bound = false;
  bool saturated = false;  // quotient visibly finite-dimensional at the probe degree
};
DimensionBoundReport dimension_bound_check(const NcPoly& f);

}  // namespace vkg
