#include "emlattice/combinatorics.hpp"

#include <mutex>

namespace eml {

int total(const MultiIndex& mu) {
  int s = 0;
  for (const auto& [label, v] : mu) s += v;
  return s;
}

void for_each_k_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(s);
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

namespace {

std::mutex stirling_mutex;
std::vector<std::vector<Integer>> stirling_table{{Integer(1)}};

}  // namespace

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0) throw InvalidArgument("Stirling numbers need non-negative arguments");
  if (k > n) return 0;
  std::lock_guard<std::mutex> lock(stirling_mutex);
  auto& t = stirling_table;
  while (static_cast<int>(t.size()) <= n) {
    const auto& prev = t.back();
    const std::size_t m = t.size();
    std::vector<Integer> row(m + 1);
    row[0] = 0;
    row[m] = 1;
    for (std::size_t j = 1; j < m; ++j) row[j] = Integer(static_cast<unsigned long>(j)) * prev[j] + prev[j - 1];
    t.push_back(std::move(row));
  }
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

MultiPoly p_poly(int n, int k) {
  if (n < 0 || k < 0) throw InvalidArgument("p(n,k;z) needs non-negative arguments");
  if (k > n) throw InvalidArgument("p(n,k;z) needs k <= n");
  MultiPoly p(1);
  for (int t = 0; t <= k; ++t) {
    Rational c = Rational(binomial(n, t) * stirling2(n - t, k - t));
    if (t % 2) c = -c;
    p.add_term({k - t}, c);
  }
  return p;
}

CycloElem p_poly_at(int n, int k, const CycloElem& omega) {
  const MultiPoly p = p_poly(n, k);
  CycloElem r(omega.order());
  for (const auto& [e, c] : p.terms()) r += c * omega.pow(e[0]);
  return r;
}

Rational p_scalar(int n, int k) { return p_poly(n, k).evaluate({Rational(1)}); }

Rational p_of_n(int n) {
  if (n <= 0) throw InvalidArgument("p(n) needs n >= 1");
  Rational s = 0;
  for (int mu = n; mu <= 2 * n; ++mu) {
    Rational term = Rational(factorial(mu - n)) / Rational(factorial(mu)) * p_scalar(mu, mu - n);
    s += (mu % 2) ? Rational(-term) : term;
  }
  return s;
}

Rational p_I_of_nu(const MultiIndex& nu) {
  Rational r = 1;
  for (const auto& [label, v] : nu) {
    if (v <= 0) throw InvalidArgument("p_I(nu) needs positive entries on its support");
    r *= p_of_n(v);
  }
  return r;
}

Rational c_seq(int n) {
  if (n < 1) throw InvalidArgument("c_n needs n >= 1");
  Rational s = 0;
  for (int a = n; a <= 2 * n; ++a) {
    Rational term = Rational(factorial(a - n)) / Rational(factorial(a)) * p_scalar(a, a - n);
    s += ((a - n + 1) % 2) ? Rational(-term) : term;
  }
  return s;
}

CycloElem c_seq_twisted(const CycloElem& omega, int n) {
  const int q = omega.order();
  if (omega == CycloElem(q, Rational(1))) throw InvalidArgument("twisted coefficients undefined at ω = 1");
  if (n < 1) throw InvalidArgument("c_n^ω needs n >= 1");
  const CycloElem inv = (CycloElem(q, Rational(1)) - omega).inverse();
  CycloElem s(q);
  for (int a = 0; a <= n - 1; ++a)
    for (int k = 0; k <= a; ++k) {
      const Rational f = Rational(factorial(n - k - 1)) / Rational(factorial(a) * factorial(n - a - 1));
      s += f * (p_poly_at(a, a - k, omega) * inv.pow(n - k));
    }
  return s;
}

MultiPoly J_mu(const std::vector<int>& mu) {
  const std::size_t d = mu.size();
  MultiPoly r = MultiPoly::constant(d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (mu[i] < 0) throw InvalidArgument("multi-index entries must be non-negative");
    MultiPoly f(d);
    for (int k = 0; k <= mu[i]; ++k) {
      Exponent e(d, 0);
      e[i] = k;
      f.add_term(e, p_scalar(mu[i], k));
    }
    r = r * f;
  }
  return r;
}

TwistedMoment J_mu_twisted(int mu, const CycloElem& omega) {
  if (mu < 0) throw InvalidArgument("moment order must be non-negative");
  const int q = omega.order();
  TwistedMoment m{{}, CycloElem(q, Rational(1)) - omega};
  for (int k = 0; k <= mu; ++k) m.poly.push_back(p_poly_at(mu, k, omega));
  return m;
}

}  // namespace eml
