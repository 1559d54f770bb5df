#include "vkg/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace vkg {

LaurentPoly::LaurentPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables, const Rat& value) {
  LaurentPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), value);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables, Exponents exps, const Rat& coeff) {
  LaurentPoly p(std::move(variables));
  if (exps.size() != p.vars_.size()) throw ArithmeticError("monomial exponent vector has wrong length");
  p.add_term(exps, coeff);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> variables, std::size_t index, const Int& e) {
  LaurentPoly p(std::move(variables));
  if (index >= p.vars_.size()) throw ArithmeticError("variable index out of range");
  Exponents exps(p.vars_.size(), 0);
  exps[index] = e;
  p.add_term(exps, 1);
  return p;
}

void LaurentPoly::check_ring(const LaurentPoly& o) const {
  if (vars_ != o.vars_) throw ArithmeticError("laurent ring variable mismatch");
}

LaurentPoly& LaurentPoly::add_term(const Exponents& exps, const Rat& coeff) {
  if (coeff == 0) return *this;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_ring(b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_ring(b);
  LaurentPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  LaurentPoly out(vars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

Rat LaurentPoly::augment() const {
  Rat s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Rat& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        os << '-';
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](const Int& x) { return x != 0; });
    bool wrote = false;
    if (coeff != 1 || !any_var) {
      os << coeff;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

LaurentPoly geometric_sum(std::vector<std::string> variables, std::size_t var_index, const Int& e) {
  LaurentPoly out(variables);
  if (e >= 0) {
    for (Int j = 0; j < e; ++j) {
      LaurentPoly::Exponents exps(variables.size(), 0);
      exps[var_index] = j;
      out.add_term(exps, 1);
    }
  } else {
    for (Int j = 1; j <= -e; ++j) {
      LaurentPoly::Exponents exps(variables.size(), 0);
      exps[var_index] = -j;
      out.add_term(exps, -1);
    }
  }
  return out;
}

LaurentPoly divide_one_minus(const LaurentPoly& p, std::size_t var_index) {
  if (var_index >= p.variables().size()) throw ArithmeticError("divide_one_minus: bad variable");
  if (p.is_zero()) return p;

  // View p as a univariate Laurent polynomial in v with coefficients indexed
  // by the remaining exponents; p = (1-v) q forces the telescoping
  // q_k = c_k + q_{k-1}, and divisibility means the totals vanish.
  using Rest = LaurentPoly::Exponents;
  std::map<Rest, std::map<Int, Rat>> sliced;
  Int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rest rest = e;
    Int k = rest[var_index];
    rest[var_index] = 0;
    sliced[rest][k] = c;
    if (first || k < lo) lo = k;
    if (first || k > hi) hi = k;
    first = false;
  }

  LaurentPoly q(p.variables());
  for (const auto& [rest, coeffs] : sliced) {
    Rat acc = 0;
    for (Int k = lo; k <= hi; ++k) {
      auto it = coeffs.find(k);
      if (it != coeffs.end()) acc += it->second;
      if (acc != 0 && k < hi) {
        Rest e = rest;
        e[var_index] = k;
        q.add_term(e, acc);
      }
    }
    if (acc != 0) throw ArithmeticError("divide_one_minus: not divisible by (1 - " +
                                        p.variables()[var_index] + ")");
  }
  return q;
}

namespace {

// Smallest per-variable exponent over all terms; shifting by its negation
// turns a Laurent polynomial into an ordinary one (a unit adjustment).
LaurentPoly::Exponents min_exponents(const LaurentPoly& p) {
  LaurentPoly::Exponents lo(p.variables().size(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (first || e[i] < lo[i]) lo[i] = e[i];
    first = false;
  }
  return lo;
}

LaurentPoly shifted(const LaurentPoly& p, const LaurentPoly::Exponents& by) {
  LaurentPoly::Exponents e = by;
  return p * LaurentPoly::monomial(p.variables(), std::move(e), 1);
}

}  // namespace

std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.variables() != q.variables()) throw ArithmeticError("try_divide: ring mismatch");
  if (q.is_zero()) throw ArithmeticError("try_divide: division by zero");
  if (p.is_zero()) return LaurentPoly(p.variables());

  // Normalize both operands into the polynomial ring; the unit monomials
  // pulled out only shift the quotient.
  LaurentPoly::Exponents plo = min_exponents(p), qlo = min_exponents(q);
  LaurentPoly::Exponents neg(plo.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -plo[i];
  LaurentPoly pp = shifted(p, neg);
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -qlo[i];
  LaurentPoly qq = shifted(q, neg);

  const auto lead = std::prev(qq.terms().end());
  const LaurentPoly::Exponents le = lead->first;
  const Rat lc = lead->second;
  if (lc != 1 && lc != -1) throw ArithmeticError("try_divide: divisor leading coefficient must be a unit");

  // Exact polynomial division in lexicographic order: the leading monomial of
  // the remainder must always be divisible by the divisor's leading monomial.
  LaurentPoly rem = pp;
  LaurentPoly quot(p.variables());
  while (!rem.is_zero()) {
    const auto rlead = std::prev(rem.terms().end());
    LaurentPoly::Exponents shift(rlead->first.size());
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = rlead->first[i] - le[i];
      if (shift[i] < 0) return std::nullopt;
    }
    LaurentPoly m = LaurentPoly::monomial(p.variables(), shift, rlead->second / lc);
    quot += m;
    rem = rem - m * qq;
  }
  // p = pp * x^plo and q = qq * x^qlo, so the true quotient regains x^(plo-qlo).
  LaurentPoly::Exponents fix(plo.size());
  for (std::size_t i = 0; i < fix.size(); ++i) fix[i] = plo[i] - qlo[i];
  return quot * LaurentPoly::monomial(p.variables(), fix, 1);
}

LaurentPoly unit_normalized(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly::Exponents lo = min_exponents(p);
  for (auto& e : lo) e = -e;
  LaurentPoly out = shifted(p, lo);
  if (out.terms().begin()->second < 0) out = -out;
  return out;
}

bool equal_up_to_unit_monomial(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.terms().size() != q.terms().size()) return false;
  const auto pl = std::prev(p.terms().end());
  const auto ql = std::prev(q.terms().end());
  LaurentPoly::Exponents shift(pl->first.size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = pl->first[i] - ql->first[i];
  Rat factor = pl->second / ql->second;
  if (factor != 1 && factor != -1) return false;
  return p == LaurentPoly::monomial(p.variables(), shift, factor) * q;
}

}  // namespace vkg
