#include "vkg/nilpotent.hpp"

#include <algorithm>
#include <sstream>

#include "vkg/ncalg.hpp"

namespace vkg {

namespace {

constexpr int kMaxRank = 3;
constexpr int kMaxClass = 5;
constexpr const char* kSeriesLetters = "XYZ";

void check_scale(int rank, int cls) {
  if (rank < 1 || rank > kMaxRank) throw GroupError("nilpotent machinery supports rank 1..3");
  if (cls < 1 || cls > kMaxClass) throw GroupError("nilpotent machinery supports class 1..5");
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

Int witt_number(int rank, int weight) {
  Int sum = 0;
  for (int d = 1; d <= weight; ++d) {
    if (weight % d != 0) continue;
    Int p = 1;
    for (int i = 0; i < weight / d; ++i) p *= rank;
    sum += mobius(d) * p;
  }
  return sum / weight;
}

std::vector<BasicCommutator> hall_basis(const Alphabet& generators, int cls) {
  check_scale(generators.rank(), cls);
  std::vector<BasicCommutator> basis;
  for (int g = 0; g < generators.rank(); ++g)
    basis.push_back({1, g, -1, -1, generators.label(g)});

  auto flat_label = [&](int left, int right) {
    // Left-normed brackets print flattened: [[y,x],x] -> [y,x,x].
    const std::string& l = basis[static_cast<std::size_t>(left)].label;
    const std::string& r = basis[static_cast<std::size_t>(right)].label;
    std::string inner = l.front() == '[' ? l.substr(1, l.size() - 2) : l;
    return "[" + inner + "," + r + "]";
  };

  for (int w = 2; w <= cls; ++w) {
    std::vector<std::pair<int, int>> level;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
      for (int j = 0; j < i; ++j) {
        if (basis[static_cast<std::size_t>(i)].weight + basis[static_cast<std::size_t>(j)].weight != w)
          continue;
        const BasicCommutator& u = basis[static_cast<std::size_t>(i)];
        if (u.generator < 0 && u.right > j) continue;  // Hall condition: q <= v
        level.emplace_back(i, j);
      }
    std::sort(level.begin(), level.end());
    for (auto [i, j] : level)
      basis.push_back({w, -1, i, j, flat_label(i, j)});
  }
  return basis;
}

Word basic_commutator_word(const Alphabet& generators, const std::vector<BasicCommutator>& basis,
                           int index) {
  const BasicCommutator& b = basis.at(static_cast<std::size_t>(index));
  if (b.generator >= 0) return Word::generator(generators, b.generator);
  return commutator(basic_commutator_word(generators, basis, b.left),
                    basic_commutator_word(generators, basis, b.right));
}

// -- collection through the series embedding ----------------------------------

namespace {

AlgebraSpec series_spec(int rank, int cls) {
  return AlgebraSpec::power_series(std::string(kSeriesLetters, kSeriesLetters + rank), cls);
}

// Homogeneous Lie element of a basic commutator: leaves are variables,
// brackets are ring commutators PQ - QP.
std::vector<NcPoly> lie_elements(const std::vector<BasicCommutator>& basis, int rank) {
  std::vector<NcPoly> lie;
  lie.reserve(basis.size());
  for (const BasicCommutator& b : basis) {
    if (b.generator >= 0) {
      lie.push_back(NcPoly::monomial(std::string(1, kSeriesLetters[b.generator])));
    } else {
      const NcPoly& p = lie[static_cast<std::size_t>(b.left)];
      const NcPoly& q = lie[static_cast<std::size_t>(b.right)];
      lie.push_back(p * q - q * p);
    }
  }
  (void)rank;
  return lie;
}

NcPoly homogeneous_part(const NcPoly& p, int degree) {
  NcPoly out;
  for (const auto& [w, c] : p.terms())
    if (static_cast<int>(w.size()) == degree) out.add_term(w, c);
  return out;
}

// Solves target = sum_b e_b * lie[b] over the weight-k basis slice; the basic
// Lie elements are independent, so the solution is unique (and integral for
// group elements).
std::map<int, Int> solve_lie_coordinates(const NcPoly& target, const std::vector<NcPoly>& lie,
                                         const std::vector<int>& indices) {
  // Column per basis index, row per monomial.
  std::map<std::string, std::size_t, DegLexLess> row_index;
  auto note_monomials = [&](const NcPoly& p) {
    for (const auto& [w, c] : p.terms())
      if (!row_index.count(w)) row_index.emplace(w, row_index.size());
  };
  note_monomials(target);
  for (int b : indices) note_monomials(lie[static_cast<std::size_t>(b)]);

  std::size_t rows = row_index.size(), cols = indices.size();
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [w, coeff] : lie[static_cast<std::size_t>(indices[c])].terms())
      m[row_index.at(w)][c] = coeff;
  for (const auto& [w, coeff] : target.terms()) m[row_index.at(w)][cols] = coeff;

  // Gaussian elimination with column pivots.
  std::vector<std::ptrdiff_t> pivot_row(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_row[c] = static_cast<std::ptrdiff_t>(r);
    ++r;
  }
  // Consistency: no row may reduce to (0 ... 0 | nonzero).
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) throw ArithmeticError("collection: degree slice is not a Lie element");

  std::map<int, Int> out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] < 0) {
      continue;  // free column: coefficient forced to zero by uniqueness
    }
    Rat v = m[static_cast<std::size_t>(pivot_row[c])][cols] /
            m[static_cast<std::size_t>(pivot_row[c])][c];
    if (v == 0) continue;
    Rat den = denominator(v);
    if (den != 1) throw ArithmeticError("collection: non-integer Hall exponent");
    out[indices[c]] = numerator(v);
  }
  return out;
}

}  // namespace

NilpotentElement::NilpotentElement(Alphabet generators, int cls)
    : generators_(std::move(generators)), cls_(cls) {
  check_scale(generators_.rank(), cls);
}

Int NilpotentElement::exponent(int basis_index) const {
  auto it = exponents_.find(basis_index);
  return it == exponents_.end() ? Int(0) : it->second;
}

Word NilpotentElement::word(const std::vector<BasicCommutator>& basis) const {
  Word w(generators_);
  for (const auto& [idx, e] : exponents_) {
    Word b = basic_commutator_word(generators_, basis, idx);
    std::int64_t steps = static_cast<std::int64_t>(e > 0 ? e : -e);
    Word bp = e > 0 ? b : b.inverse();
    for (std::int64_t i = 0; i < steps; ++i) w *= bp;
  }
  return w;
}

bool operator==(const NilpotentElement& a, const NilpotentElement& b) {
  return a.cls_ == b.cls_ && a.generators_ == b.generators_ && a.exponents_ == b.exponents_;
}

std::string NilpotentElement::str(const std::vector<BasicCommutator>& basis) const {
  if (exponents_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, e] : exponents_) {
    if (!first) os << " * ";
    os << basis.at(static_cast<std::size_t>(idx)).label;
    if (e != 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

NilpotentElement collect(const Word& w, int cls) {
  const Alphabet& gens = w.alphabet();
  int rank = gens.rank() == 0 ? 1 : gens.rank();
  check_scale(rank, cls);
  Alphabet alpha = gens.rank() == 0 ? Alphabet({"x"}) : gens;

  NilpotentElement out(alpha, cls);
  std::vector<BasicCommutator> basis = hall_basis(alpha, cls);
  std::vector<NcPoly> lie = lie_elements(basis, alpha.rank());
  AlgebraSpec spec = series_spec(alpha.rank(), cls);

  NcPoly g = w.is_identity() ? NcPoly::constant(1) : group_to_series(w, spec);
  for (int k = 1; k <= cls; ++k) {
    NcPoly slice = homogeneous_part(g, k);
    if (slice.is_zero()) continue;
    std::vector<int> indices;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
      if (basis[static_cast<std::size_t>(i)].weight == k) indices.push_back(i);
    std::map<int, Int> coords = solve_lie_coordinates(slice, lie, indices);

    // Peel the weight-k factor off: g -> series(u_k^-1) * g.
    Word peel(alpha);
    for (const auto& [idx, e] : coords) {
      Word b = basic_commutator_word(alpha, basis, idx);
      std::int64_t steps = static_cast<std::int64_t>(e > 0 ? e : -e);
      Word bp = e > 0 ? b : b.inverse();
      for (std::int64_t i = 0; i < steps; ++i) peel *= bp;
      out.exponents_[idx] = e;
    }
    g = nc_reduce(group_to_series(peel.inverse(), spec) * g, spec);
  }
  if (g != NcPoly::constant(1))
    throw ArithmeticError("collection failed to terminate at the identity");
  return out;
}

NilpotentElement nilpotent_mul(const NilpotentElement& a, const NilpotentElement& b) {
  if (a.cls() != b.cls() || a.generators() != b.generators())
    throw GroupError("nilpotent product: mismatched class or generators");
  std::vector<BasicCommutator> basis = hall_basis(a.generators(), a.cls());
  return collect(a.word(basis) * b.word(basis), a.cls());
}

NilpotentElement relator_mod_gamma(const GroupPresentation& p, std::size_t relator_index, int cls) {
  if (relator_index >= p.relators().size()) throw GroupError("relator index out of range");
  Word r = p.relators()[relator_index];
  if (r.is_identity()) return NilpotentElement(p.generators(), cls);
  return collect(r, cls);
}

GradedLayer lcs_quotient(const GroupPresentation& p, int k) {
  if (k < 2 || k > kMaxClass) throw GroupError("lcs layer supported for 2 <= k <= 5");
  check_scale(p.generators().rank(), k);
  const Alphabet& gens = p.generators();
  std::vector<BasicCommutator> basis = hall_basis(gens, k);
  std::vector<int> layer_indices;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    if (basis[static_cast<std::size_t>(i)].weight == k) layer_indices.push_back(i);

  std::vector<std::vector<Int>> rows;
  for (const Word& r : p.relators()) {
    if (r.is_identity()) continue;
    NilpotentElement nf = collect(r, k);
    if (nf.is_identity()) continue;  // relator already in gamma_{k+1}
    int d = basis[static_cast<std::size_t>(nf.exponents().begin()->first)].weight;
    int j = k - d;

    // Iterated commutators [r, v_1, ..., v_j] over all generator tuples land
    // in gamma_k; their weight-k exponent rows span the relation lattice.
    std::vector<int> tuple(static_cast<std::size_t>(j), 0);
    for (;;) {
      Word c = r;
      for (int v : tuple) c = commutator(c, Word::generator(gens, v));
      NilpotentElement cnf = collect(c, k);
      std::vector<Int> row;
      row.reserve(layer_indices.size());
      for (int idx : layer_indices) row.push_back(cnf.exponent(idx));
      for (const auto& [idx, e] : cnf.exponents())
        if (basis[static_cast<std::size_t>(idx)].weight != k)
          throw ArithmeticError("lcs row has support below the layer weight");
      rows.push_back(std::move(row));

      // Next tuple in lexicographic order.
      int pos = j - 1;
      while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == gens.rank() - 1) {
        tuple[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++tuple[static_cast<std::size_t>(pos)];
    }
  }

  GradedLayer out;
  out.k = k;
  out.relation_matrix = IntMatrix(rows.size(), layer_indices.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < layer_indices.size(); ++c) out.relation_matrix.at(r, c) = rows[r][c];
  if (rows.empty()) {
    out.structure.rank = static_cast<int>(layer_indices.size());
  } else {
    out.structure = cokernel_structure(out.relation_matrix);
  }
  return out;
}

}  // namespace vkg
