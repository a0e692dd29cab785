#include "emlattice/oracle.hpp"

#include <algorithm>
#include <functional>

#include "emlattice/combinatorics.hpp"

namespace eml {

namespace {

Rational power(long base, int e) { return pow(Rational(base), e); }

Real50 to_real(const Rational& r) { return Real50(r.get_num().get_str()) / Real50(r.get_den().get_str()); }

void check_n(long n) {
  if (n < 1) throw InvalidArgument("N must be a positive integer");
}

// Σ_{γ ∈ NP} φ(γ/N) in intrinsic coordinates.
Rational lattice_sum(const LatticePolytope& p, const MultiPoly& f_phi, long n, std::uint64_t budget) {
  const std::size_t m = p.dim();
  if (m == 0) return f_phi.evaluate({});
  std::vector<Integer> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = hi[i] = p.vertices()[0][i];
    for (const auto& v : p.vertices()) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
    lo[i] *= n;
    hi[i] *= n;
  }
  Integer count = 1;
  for (std::size_t i = 0; i < m; ++i) count *= hi[i] - lo[i] + 1;
  if (count > Integer(std::to_string(budget))) throw BudgetExceeded();

  Rational sum = 0;
  std::vector<Integer> g = lo;
  VecQ x(m), xs(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) x[i] = g[i];
    if (in_dilate(p, x, n)) {
      for (std::size_t i = 0; i < m; ++i) xs[i] = make_rational(g[i], n);
      sum += f_phi.evaluate(xs);
    }
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (g[i] < hi[i]) {
        ++g[i];
        break;
      }
      g[i] = lo[i];
      if (i == 0) return sum;
    }
  }
}

}  // namespace

Rational riemann_sum(const LatticePolytope& p, const MultiPoly& phi, long n, std::uint64_t budget) {
  check_n(n);
  return lattice_sum(p, pull_back(p, phi), n, budget) / power(n, static_cast<int>(p.dim()));
}

Rational WeightedEhrhart::evaluate(long n) const {
  Rational r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * n + coeffs[i];
  return r;
}

WeightedEhrhart weighted_ehrhart(const LatticePolytope& p, const MultiPoly& phi, std::uint64_t budget) {
  const MultiPoly f_phi = pull_back(p, phi);
  WeightedEhrhart e;
  e.dim = p.dim();
  e.degree = std::max(phi.degree(), 0);
  const int d = static_cast<int>(e.dim) + e.degree;
  auto sample = [&](long n) -> Rational { return power(n, e.degree) * lattice_sum(p, f_phi, n, budget); };

  const std::size_t k = static_cast<std::size_t>(d) + 1;
  MatQ vander(k, k);
  VecQ rhs(k);
  for (std::size_t r = 0; r < k; ++r) {
    const long n = static_cast<long>(r) + 1;
    for (std::size_t c = 0; c < k; ++c) vander(r, c) = power(n, static_cast<int>(c));
    rhs[r] = sample(n);
  }
  e.coeffs = solve(vander, rhs);
  for (long n = d + 2; n <= d + 3; ++n)
    if (e.evaluate(n) != sample(n)) throw InternalError("not a polynomial: bug or non-lattice input");
  return e;
}

std::vector<std::pair<int, Rational>> coefficients_from_oracle(const LatticePolytope& p, const MultiPoly& phi,
                                                               std::uint64_t budget) {
  const auto e = weighted_ehrhart(p, phi, budget);
  const int d = static_cast<int>(e.coeffs.size()) - 1;
  std::vector<std::pair<int, Rational>> out;
  for (int n = 0; n <= d; ++n) out.emplace_back(n, e.coeffs[static_cast<std::size_t>(d - n)]);
  return out;
}

Real50 szasz_eval(const MultiPoly& phi, const VecQ& x, long n, int truncation) {
  check_n(n);
  if (truncation < 1) throw InvalidArgument("truncation must be at least 1");
  if (x.size() != phi.nvars()) throw InvalidArgument("point dimension does not match the polynomial");
  for (const auto& xi : x)
    if (xi <= 0) throw InvalidArgument("point must lie in the open positive orthant");

  const std::size_t m = x.size();
  // partial[i][a] = e^{-N x_i} Σ_{k <= T} (N x_i)^k / k! · (k/N)^a.
  std::vector<std::vector<Real50>> partial(m);
  const int deg = std::max(phi.degree(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational y = x[i] * n;
    std::vector<Rational> sums(static_cast<std::size_t>(deg) + 1, Rational(0));
    Rational weight = 1;
    for (int k = 0; k <= truncation; ++k) {
      if (k > 0) weight = weight * y / k;
      Rational s = make_rational(k, n);
      Rational pw = 1;
      for (int a = 0; a <= deg; ++a) {
        sums[static_cast<std::size_t>(a)] += weight * pw;
        pw *= s;
      }
    }
    const Real50 damp = boost::multiprecision::exp(-to_real(y));
    for (const auto& s : sums)
      partial[i].push_back(damp * to_real(s));
  }
  Real50 total = 0;
  for (const auto& [e, c] : phi.terms()) {
    Real50 t = to_real(c);
    for (std::size_t i = 0; i < m; ++i) t *= partial[i][static_cast<std::size_t>(e[i])];
    total += t;
  }
  return total;
}

Rational szasz_moment_expansion(const MultiPoly& phi, const VecQ& x, long n) {
  check_n(n);
  const std::size_t m = phi.nvars();
  if (x.size() != m) throw InvalidArgument("point dimension does not match the polynomial");
  const int deg = std::max(phi.degree(), 0);
  VecQ nx(m);
  for (std::size_t i = 0; i < m; ++i) nx[i] = x[i] * n;
  Rational total = 0;
  std::vector<int> mu(m, 0);
  auto visit = [&](const std::vector<int>& mu_v) {
    Integer mu_fact = 1;
    int size = 0;
    for (int a : mu_v) {
      mu_fact *= factorial(a);
      size += a;
    }
    const Rational deriv = phi.partial(mu_v).evaluate(x);
    if (deriv == 0) return;
    total += deriv / (Rational(mu_fact) * power(n, size)) * J_mu(mu_v).evaluate(nx);
  };
  // All μ with |μ| <= deg, lexicographic.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == m) {
      visit(mu);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      mu[i] = a;
      rec(i + 1, left - a);
    }
    mu[i] = 0;
  };
  rec(0, deg);
  return total;
}

CycloElem twisted_riemann_1d(const CycloElem& omega, const std::vector<Rational>& samples, long n) {
  check_n(n);
  const int q = omega.order();
  CycloElem sum(q);
  CycloElem w(q, Rational(1));
  for (const auto& s : samples) {
    sum += s * w;
    w *= omega;
  }
  return make_rational(1, n) * sum;
}

}  // namespace eml
