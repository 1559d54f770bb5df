#pragma once

#include <array>
#include <string>

#include "vkg/numeric.hpp"

namespace vkg {

/// Element of the cubic number field Q[c]/(c^3 - c^2 - c - 1), stored as
/// q0 + q1 c + q2 c^2 and always reduced. The minimal polynomial has no
/// rational root (+-1 fail), hence is irreducible over Q and every nonzero
/// element is invertible.
class CubicFieldElement {
 public:
  CubicFieldElement() = default;
  CubicFieldElement(Rat q0, Rat q1, Rat q2) : c_{std::move(q0), std::move(q1), std::move(q2)} {}

  static CubicFieldElement zero() { return {}; }
  static CubicFieldElement one() { return {1, 0, 0}; }
  /// The field generator c itself.
  static CubicFieldElement generator() { return {0, 1, 0}; }

  static std::array<Rat, 4> minimal_polynomial() { return {-1, -1, -1, 1}; }  // c^3-c^2-c-1
  static std::string minimal_polynomial_str() { return "c^3 - c^2 - c - 1"; }

  const std::array<Rat, 3>& coeffs() const { return c_; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

  friend CubicFieldElement operator+(const CubicFieldElement& a, const CubicFieldElement& b);
  friend CubicFieldElement operator-(const CubicFieldElement& a, const CubicFieldElement& b);
  friend CubicFieldElement operator*(const CubicFieldElement& a, const CubicFieldElement& b);
  CubicFieldElement operator-() const;
  friend bool operator==(const CubicFieldElement& a, const CubicFieldElement& b) = default;

  /// Multiplicative inverse via the extended Euclidean algorithm against the
  /// minimal polynomial; throws ArithmeticError on zero.
  CubicFieldElement inverse() const;
  CubicFieldElement pow(long e) const;

  std::string str() const;

 private:
  std::array<Rat, 3> c_{0, 0, 0};
};

}  // namespace vkg
