#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace vkg {

// Exact arithmetic used everywhere: no floating point on any verified path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Generalized binomial coefficient: valid for negative n, so that
// (1+X)^n = sum_j binom(n,j) X^j holds as a formal power series identity.
inline Rat binomial(const Int& n, unsigned j) {
  Rat acc = 1;
  for (unsigned i = 0; i < j; ++i) {
    acc *= Rat(n - i, 1);
    acc /= Rat(i + 1, 1);
  }
  return acc;
}

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vkg
