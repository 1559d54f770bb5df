#include "vkg/int_matrix.hpp"

#include <sstream>

namespace vkg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ArithmeticError("matrix product shape mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return m;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw ArithmeticError("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

struct SnfState {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i -= q * row j
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
  }
  // col i -= q * col j
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
  SnfState s{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.cols())};
  const std::size_t m = input.rows(), n = input.cols();
  const std::size_t k = std::min(m, n);

  for (std::size_t t = 0; t < k; ++t) {
    // Pivot: entry of least absolute value in the trailing submatrix.
    bool found = false;
    std::size_t pr = t, pc = t;
    Int best = 0;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c) {
        if (s.a.at(r, c) == 0) continue;
        Int v = abs(s.a.at(r, c));
        if (!found || v < best) {
          best = v;
          pr = r;
          pc = c;
          found = true;
        }
      }
    if (!found) break;
    s.swap_rows(t, pr);
    s.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        Int q = s.a.at(r, t) / s.a.at(t, t);
        s.add_row(r, t, q);
        if (s.a.at(r, t) != 0) {
          s.swap_rows(t, r);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        Int q = s.a.at(t, c) / s.a.at(t, t);
        s.add_col(c, t, q);
        if (s.a.at(t, c) != 0) {
          s.swap_cols(t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t r = t + 1; r < m && divides; ++r)
        for (std::size_t c = t + 1; c < n && divides; ++c)
          if (s.a.at(r, c) % s.a.at(t, t) != 0) {
            s.add_row(t, r, Int(-1));  // row t += row r
            divides = false;
          }
      if (divides) break;
    }
    if (s.a.at(t, t) < 0) s.negate_row(t);
  }

  SnfResult out;
  out.diagonal.reserve(k);
  for (std::size_t t = 0; t < k; ++t) out.diagonal.push_back(s.a.at(t, t));
  out.u = std::move(s.u);
  out.v = std::move(s.v);
  return out;
}

std::string AbelianStructure::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank; ++i) {
    if (!first) os << " x ";
    os << "Z";
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " x ";
    os << "Z/" << d;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

AbelianStructure cokernel_structure(const IntMatrix& a) {
  AbelianStructure st;
  if (a.rows() == 0 || a.cols() == 0) {
    st.rank = static_cast<int>(a.cols());
    return st;
  }
  SnfResult snf = smith_normal_form(a);
  int nonzero = 0;
  for (const Int& d : snf.diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) st.torsion.push_back(d);
  }
  st.rank = static_cast<int>(a.cols()) - nonzero;
  return st;
}

}  // namespace vkg
