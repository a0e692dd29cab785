// Truncated formal power series and the Todd-type expansions built from them.
#pragma once

#include <cstddef>
#include <vector>

#include "emlattice/cyclotomic.hpp"
#include "emlattice/rational.hpp"

namespace eml {

inline Rational inverse_of(const Rational& x) { return 1 / x; }
inline CycloElem inverse_of(const CycloElem& x) { return x.inverse(); }

/// Coefficients 0..order of num/den. Leading zeros of den are cancelled
/// against num; throws if num vanishes to lower order than den.
/// Both inputs must carry at least order + valuation(den) + 1 coefficients.
template <class T>
std::vector<T> series_divide(const std::vector<T>& num, const std::vector<T>& den, std::size_t order, const T& zero) {
  std::size_t v = 0;
  while (v < den.size() && den[v] == zero) ++v;
  if (v == den.size()) throw InvalidArgument("series division by zero");
  for (std::size_t i = 0; i < v && i < num.size(); ++i)
    if (num[i] != zero) throw InvalidArgument("quotient series has a pole");
  if (num.size() < order + v + 1 || den.size() < order + v + 1)
    throw InvalidArgument("series truncated below the requested order");
  const T lead_inv = inverse_of(den[v]);
  std::vector<T> q(order + 1, zero);
  for (std::size_t n = 0; n <= order; ++n) {
    T acc = num[n + v];
    for (std::size_t k = 1; k <= n; ++k) acc -= den[v + k] * q[n - k];
    q[n] = acc * lead_inv;
  }
  return q;
}

template <class T>
std::vector<T> series_multiply(const std::vector<T>& a, const std::vector<T>& b, std::size_t order, const T& zero) {
  std::vector<T> r(order + 1, zero);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Taylor coefficients 0..order of e^{c z}.
std::vector<Rational> exp_series(const Rational& c, std::size_t order);

/// b_0..b_{n_max} with Todd(-z) = -z/(1-e^z) = Σ b_n z^n / n!.
std::vector<Rational> series_coeffs_todd(int n_max);

/// b_1^ω..b_{n_max}^ω with s/(1 - ω e^{-s}) = Σ_{n≥1} b_n^ω s^n.
std::vector<CycloElem> series_coeffs_twisted_todd(int q, const CycloElem& omega, int n_max);

}  // namespace eml
