#pragma once

#include <vector>

#include "vkg/numeric.hpp"

namespace vkg {

/// Dense matrix of exact big integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  /// Exact determinant (fraction-free Bareiss elimination); square only.
  Int determinant() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

/// U * A * V = diag(d1..dk, 0..) with d1 | d2 | ... and det U, det V = +-1.
struct SnfResult {
  std::vector<Int> diagonal;  // min(rows, cols) entries, divisibility chain
  IntMatrix u;
  IntMatrix v;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// Finite presentation of a f.g. abelian group: Z^rank x prod Z/torsion[i],
/// torsion entries >= 2 in divisibility order.
struct AbelianStructure {
  int rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
  std::string str() const;
};

/// Cokernel structure of Z^cols / rowspace(A).
AbelianStructure cokernel_structure(const IntMatrix& a);

}  // namespace vkg
