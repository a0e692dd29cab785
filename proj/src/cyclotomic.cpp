#include "emlattice/cyclotomic.hpp"

#include <array>
#include <mutex>
#include <sstream>

namespace eml {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Dense sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Returns quotient; a becomes the remainder.
Dense divmod(Dense& a, const Dense& b) {
  trim(a);
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  if (a.size() < b.size()) return {};
  Dense q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return q;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int q) {
  if (q < 1 || q > kMaxCyclotomicOrder)
    throw InvalidArgument("cyclotomic order must be between 1 and " + std::to_string(kMaxCyclotomicOrder));
  static std::array<Dense, kMaxCyclotomicOrder + 1> table;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int k = 1; k <= kMaxCyclotomicOrder; ++k) {
      Dense p(static_cast<std::size_t>(k) + 1);
      p[0] = -1;
      p[static_cast<std::size_t>(k)] = 1;
      for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        Dense r = p;
        p = divmod(r, table[static_cast<std::size_t>(d)]);
      }
      table[static_cast<std::size_t>(k)] = p;
    }
  });
  return table[static_cast<std::size_t>(q)];
}

CycloElem::CycloElem(int q, const Rational& value) : q_(q) {
  const auto& phi = cyclotomic_polynomial(q);
  c_.assign(phi.size() - 1, Rational(0));
  c_[0] = value;
}

CycloElem::CycloElem(int q, std::vector<Rational> coeffs) : q_(q) {
  const auto& phi = cyclotomic_polynomial(q);
  divmod(coeffs, phi);
  coeffs.resize(phi.size() - 1);
  c_ = std::move(coeffs);
}

CycloElem CycloElem::omega(int q) {
  std::vector<Rational> x{0, 1};
  return CycloElem(q, x);
}

bool CycloElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycloElem::rational_value() const {
  if (!is_rational()) throw InvalidArgument("cyclotomic element is not rational");
  return c_[0];
}

void CycloElem::check(const CycloElem& o) const {
  if (q_ != o.q_) throw InvalidArgument("cyclotomic elements of different orders");
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  check(o);
  *this = CycloElem(q_, mul(c_, o.c_));
  return *this;
}

CycloElem& CycloElem::operator/=(const CycloElem& o) { return *this *= o.inverse(); }

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero in Q(omega)");
  // Extended Euclid: s*a + t*phi = g, g a nonzero constant since phi is irreducible.
  Dense r0 = cyclotomic_polynomial(q_), r1 = c_;
  trim(r1);
  Dense s0, s1{Rational(1)};
  while (r1.size() > 1) {
    Dense rem = r0;
    Dense quo = divmod(rem, r1);
    Dense s2 = sub(s0, mul(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw InternalError("cyclotomic polynomial is not irreducible");
  const Rational g = r1[0];
  for (auto& x : s1) x /= g;
  return CycloElem(q_, s1);
}

CycloElem CycloElem::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycloElem result(q_, Rational(1)), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string CycloElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const bool neg = c_[i] < 0;
    const Rational mag = neg ? Rational(-c_[i]) : c_[i];
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0 || mag != 1) os << eml::to_string(mag) << (i ? "*" : "");
    if (i == 1) os << "w";
    if (i > 1) os << "w^" << i;
  }
  return first ? "0" : os.str();
}

}  // namespace eml
