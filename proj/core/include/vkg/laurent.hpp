#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vkg/numeric.hpp"

namespace vkg {

/// Multivariate Laurent polynomial with exact rational coefficients.
/// Exponent vectors may be negative; terms are kept in sorted order, so
/// equality and printing are canonical.
class LaurentPoly {
 public:
  using Exponents = std::vector<Int>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> variables);

  static LaurentPoly constant(std::vector<std::string> variables, const Rat& value);
  static LaurentPoly monomial(std::vector<std::string> variables, Exponents exps, const Rat& coeff = 1);
  /// x_i^e as a monomial in the given ring.
  static LaurentPoly variable(std::vector<std::string> variables, std::size_t index, const Int& e = 1);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& add_term(const Exponents& exps, const Rat& coeff);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly scaled(const Rat& c) const;

  /// Evaluation of every variable at 1 (the augmentation homomorphism).
  Rat augment() const;

  /// True when the polynomial is a single term with coefficient +-1.
  bool is_unit_monomial() const;

  /// Canonical text: terms in exponent order, explicit signs, `*` products,
  /// `^` powers, e.g. `1 - x^-2*y + 2*y^2`.
  std::string str() const;

 private:
  void check_ring(const LaurentPoly& o) const;
  std::vector<std::string> vars_;
  std::map<Exponents, Rat> terms_;
};

/// Exact quotient p / (1 - v). Throws ArithmeticError when (1 - v) does not
/// divide p in the Laurent ring.
LaurentPoly divide_one_minus(const LaurentPoly& p, std::size_t var_index);

/// 1 + v + ... + v^(e-1) for e >= 0, and -(v^-1 + ... + v^e) for e < 0;
/// equals (1 - v^e) / (1 - v).
LaurentPoly geometric_sum(std::vector<std::string> variables, std::size_t var_index, const Int& e);

/// Exact division p / q using leading-term elimination (lexicographic order);
/// requires the leading coefficient of q to be +-1. Returns nullopt when a
/// nonzero remainder survives.
std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& q);

/// True when p == m * q for a single monomial m with coefficient +-1.
bool equal_up_to_unit_monomial(const LaurentPoly& p, const LaurentPoly& q);

/// Canonical representative of the unit-monomial orbit of p: per-variable
/// minimum exponents shifted to zero and the first term's coefficient made
/// positive. Two polynomials agree up to a unit monomial iff their
/// normalizations are equal.
LaurentPoly unit_normalized(const LaurentPoly& p);

}  // namespace vkg
