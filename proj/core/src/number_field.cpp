#include "vkg/number_field.hpp"

#include <sstream>
#include <vector>

namespace vkg {

CubicFieldElement operator+(const CubicFieldElement& a, const CubicFieldElement& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]};
}

CubicFieldElement operator-(const CubicFieldElement& a, const CubicFieldElement& b) {
  return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]};
}

CubicFieldElement CubicFieldElement::operator-() const { return {-c_[0], -c_[1], -c_[2]}; }

CubicFieldElement operator*(const CubicFieldElement& a, const CubicFieldElement& b) {
  // Raw degree-4 product, then reduce with c^3 = c^2 + c + 1 (so
  // c^4 = 2c^2 + 2c + 1).
  std::array<Rat, 5> raw{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) raw[i + j] += a.c_[i] * b.c_[j];
  raw[2] += 2 * raw[4];
  raw[1] += 2 * raw[4];
  raw[0] += raw[4];
  raw[2] += raw[3];
  raw[1] += raw[3];
  raw[0] += raw[3];
  return {raw[0], raw[1], raw[2]};
}

namespace {

using Poly = std::vector<Rat>;  // dense, index = degree

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly poly_scale(Poly a, const Rat& s) {
  for (auto& c : a) c *= s;
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// a = q*b + r over Q
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q;
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rat f = a.back() / b.back();
    if (q.size() < shift + 1) q.resize(shift + 1);
    q[shift] += f;
    Poly sb(shift, 0);
    sb.insert(sb.end(), b.begin(), b.end());
    a = poly_sub(std::move(a), poly_scale(sb, f));
  }
  return {q, a};
}

}  // namespace

CubicFieldElement CubicFieldElement::inverse() const {
  if (is_zero()) throw ArithmeticError("number field: inversion of zero");
  // Extended gcd of this element against the minimal polynomial. The minimal
  // polynomial is irreducible, so the gcd is a nonzero constant.
  Poly r0 = {-1, -1, -1, 1};  // c^3 - c^2 - c - 1
  Poly r1 = {c_[0], c_[1], c_[2]};
  trim(r1);
  Poly s0 = {};     // coefficient of r1 in r0
  Poly s1 = {{1}};  // coefficient of r1 in r1
  while (true) {
    auto [q, r] = poly_divmod(r0, r1);
    if (r.empty()) break;
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r);
    s1 = std::move(s);
  }
  if (r1.size() != 1) throw ArithmeticError("number field: gcd with minimal polynomial not constant");
  Poly inv = poly_scale(s1, Rat(1) / r1[0]);
  auto [q, rem] = poly_divmod(inv, Poly{-1, -1, -1, 1});
  rem.resize(3);
  return {rem[0], rem[1], rem[2]};
}

CubicFieldElement CubicFieldElement::pow(long e) const {
  CubicFieldElement base = e >= 0 ? *this : inverse();
  long n = e >= 0 ? e : -e;
  CubicFieldElement acc = one();
  for (long i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

std::string CubicFieldElement::str() const {
  std::ostringstream os;
  bool any = false;
  static const char* names[3] = {"", "c", "c^2"};
  for (int d = 0; d < 3; ++d) {
    if (c_[d] == 0) continue;
    Rat v = c_[d];
    if (any)
      os << (v < 0 ? " - " : " + ");
    else if (v < 0)
      os << '-';
    if (v < 0) v = -v;
    if (d == 0 || v != 1) os << v;
    if (d > 0) {
      if (v != 1) os << '*';
      os << names[d];
    }
    any = true;
  }
  if (!any) return "0";
  return os.str();
}

}  // namespace vkg
