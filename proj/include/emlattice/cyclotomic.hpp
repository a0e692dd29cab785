// Elements of the cyclotomic field Q(ω), ω a primitive q-th root of unity.
#pragma once

#include <string>
#include <vector>

#include "emlattice/rational.hpp"

namespace eml {

constexpr int kMaxCyclotomicOrder = 12;

/// Coefficients of the q-th cyclotomic polynomial, constant term first.
const std::vector<Rational>& cyclotomic_polynomial(int q);

/// Dense polynomial in ω reduced modulo Φ_q.
class CycloElem {
 public:
  CycloElem() : CycloElem(1) {}
  explicit CycloElem(int q, const Rational& value = 0);
  /// Reduces an arbitrary coefficient list (constant term first) modulo Φ_q.
  CycloElem(int q, std::vector<Rational> coeffs);

  /// The class of the variable: a primitive q-th root of unity.
  static CycloElem omega(int q);

  int order() const { return q_; }
  /// Exactly deg Φ_q coefficients.
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator/=(const CycloElem& o);
  CycloElem operator-() const;
  CycloElem inverse() const;
  CycloElem pow(long k) const;

  bool operator==(const CycloElem& o) const { return q_ == o.q_ && c_ == o.c_; }
  bool operator!=(const CycloElem& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check(const CycloElem& o) const;
  int q_;
  std::vector<Rational> c_;
};

inline CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
inline CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
inline CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
inline CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
inline CycloElem operator*(const Rational& s, const CycloElem& b) { return CycloElem(b.order(), s) * b; }

}  // namespace eml
