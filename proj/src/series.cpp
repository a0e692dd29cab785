#include "emlattice/series.hpp"

namespace eml {

std::vector<Rational> exp_series(const Rational& c, std::size_t order) {
  std::vector<Rational> e(order + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) e[k] = e[k - 1] * c / static_cast<long>(k);
  return e;
}

std::vector<Rational> series_coeffs_todd(int n_max) {
  if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
  const auto order = static_cast<std::size_t>(n_max);
  // -z / (1 - e^z): both numerator and denominator vanish once at z = 0.
  std::vector<Rational> num(order + 2), den = exp_series(1, order + 1);
  num[1] = -1;
  for (auto& x : den) x = -x;
  den[0] += 1;
  auto a = series_divide(num, den, order, Rational(0));
  for (std::size_t n = 0; n <= order; ++n) a[n] *= factorial(static_cast<long>(n));
  return a;
}

std::vector<CycloElem> series_coeffs_twisted_todd(int q, const CycloElem& omega, int n_max) {
  if (omega.order() != q) throw InvalidArgument("omega does not belong to Q(zeta_q)");
  if (omega == CycloElem(q, Rational(1))) throw InvalidArgument("twisted Todd undefined at ω = 1 (pole)");
  if (q < 2) throw InvalidArgument("twisted Todd needs q >= 2");
  if (n_max < 1) return {};
  const auto order = static_cast<std::size_t>(n_max);
  const CycloElem zero(q);
  std::vector<CycloElem> num(order + 1, zero), den(order + 1, zero);
  num[1] = CycloElem(q, Rational(1));
  const auto e = exp_series(-1, order);
  for (std::size_t k = 0; k <= order; ++k) den[k] = -(e[k] * omega);
  den[0] += CycloElem(q, Rational(1));
  auto c = series_divide(num, den, order, zero);
  return {c.begin() + 1, c.end()};
}

}  // namespace eml
