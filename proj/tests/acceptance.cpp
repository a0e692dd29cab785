// Acceptance run: one line per criterion with its wall time and limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "emlattice/closed_forms.hpp"
#include "emlattice/combinatorics.hpp"
#include "emlattice/cone_calculus.hpp"
#include "emlattice/expansion.hpp"
#include "emlattice/oracle.hpp"
#include "emlattice/series.hpp"
#include "test_util.hpp"

using namespace eml;

namespace {

// Collects the first few mismatches so a FAIL line says what went wrong.
struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 5) notes.push_back(what);
  }
};

LatticePolytope build(const std::vector<VecZ>& v) { return LatticePolytope::build(v, true); }

int phi_degree_cap(const LatticePolytope& p) { return p.dim() <= 2 ? 3 : 2; }

Real50 to_real(const Rational& r) { return Real50(r.get_num().get_str()) / Real50(r.get_den().get_str()); }

MultiPoly z() { return MultiPoly::variable(1, 0); }

void criterion1(Check& c) {
  const auto b = series_coeffs_todd(12);
  for (int n = 1; n <= 12; ++n)
    c.expect(c_seq(n) == -b[static_cast<std::size_t>(n)] / Rational(factorial(n)), "n=" + std::to_string(n));
}

void criterion2(Check& c) {
  for (int q : {2, 3, 4})
    for (int k = 1; k < q; ++k) {
      if (std::gcd(k, q) != 1) continue;
      const auto omega = CycloElem::omega(q).pow(k);
      const auto b = series_coeffs_twisted_todd(q, omega, 8);
      for (int n = 1; n <= 8; ++n) {
        const CycloElem sign(q, Rational(n % 2 == 1 ? 1 : -1));
        c.expect(b[static_cast<std::size_t>(n - 1)] == sign * c_seq_twisted(omega, n),
                 "q=" + std::to_string(q) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
}

void criterion3(Check& c) {
  const auto one = MultiPoly::constant(1, 1);
  for (int n = 1; n <= 15; ++n)
    for (int k = 1; k <= n; ++k) {
      MultiPoly rhs = (z() - one) * p_poly(n, k - 1) + Rational(k) * p_poly(n, k);
      if (k - 1 <= n - 1) rhs += Rational(n) * p_poly(n - 1, k - 1);
      c.expect(p_poly(n + 1, k) == rhs, "recursion n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  for (int n = 1; n <= 20; ++n)
    for (int k = n / 2 + 1; k <= n; ++k)
      c.expect(divide_univariate(p_poly(n, k), (z() - one).pow(2 * k - n)).remainder.is_zero(),
               "divisibility n=" + std::to_string(n) + " k=" + std::to_string(k));
}

MatQ random_unimodular(std::size_t d, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(d) - 1), coef(-2, 2);
  MatQ m = MatQ::identity(d);
  for (int step = 0; step < 6 * static_cast<int>(d); ++step) {
    const int r = pick(rng), s = pick(rng);
    if (r == s) continue;
    const Rational f = coef(rng);
    for (std::size_t j = 0; j < d; ++j) m(static_cast<std::size_t>(r), j) += f * m(static_cast<std::size_t>(s), j);
  }
  return m;
}

// All α supported on I with |α| <= amax, indexed by label.
std::vector<std::vector<int>> alphas_on(Subset i, std::size_t d, int amax) {
  std::vector<std::vector<int>> out;
  const auto labels = labels_of(i);
  std::vector<int> cur(d, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == labels.size()) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[static_cast<std::size_t>(labels[idx])] = a;
      rec(idx + 1, left - a);
    }
    cur[static_cast<std::size_t>(labels[idx])] = 0;
  };
  rec(0, amax);
  return out;
}

void criterion4(Check& c) {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 4);
    const std::size_t k = 1 + static_cast<std::size_t>(rng() % m);
    const MatQ u = random_unimodular(m, rng);
    UniCone cone;
    for (std::size_t j = 0; j < k; ++j) cone.generators.push_back(u.col(j));
    for (const MatQ& q : {MatQ::identity(m), fixtures::random_spd(m, rng)}) {
      IbpFamily small(cone, q, BranchRule::SmallestLabel), large(cone, q, BranchRule::LargestLabel);
      const Subset all = static_cast<Subset>((1U << k) - 1);
      for (Subset i = 1; i <= all; ++i)
        for (const auto& alpha : alphas_on(i, k, 4)) {
          const int a = std::accumulate(alpha.begin(), alpha.end(), 0);
          MultiIndex mi;
          for (std::size_t v = 0; v < k; ++v)
            if (alpha[v]) mi[static_cast<int>(v)] = alpha[v];
          const std::string tag = "trial " + std::to_string(trial) + " I=" + std::to_string(i);
          MultiPoly sum(k);
          for (Subset j = i;; j = (j + 1) | i) {
            if (popcount(j) - popcount(i) <= a) {
              const auto s = small.symbol_y(i, j, alpha);
              c.expect(s == large.symbol_y(i, j, alpha), tag + " branch");
              c.expect(small.lift(s) == ibp_symbol(cone, labels_of(i), labels_of(j), mi, q), tag + " ibp_symbol");
              Exponent mono(k, 0);
              for (int v : labels_of(j & ~i)) mono[static_cast<std::size_t>(v)] = 1;
              sum += s * MultiPoly::monomial(mono);
            }
            if (j == all) break;
          }
          c.expect(sum == MultiPoly::monomial(Exponent(alpha.begin(), alpha.end())), tag + " identity");
        }
    }
  }
}

void engine_vs_oracle(Check& c, const fixtures::Named& named, int deg, const std::optional<MatQ>& q = std::nullopt,
                      const ExpansionOptions& opts = {}) {
  const auto p = build(named.vertices);
  for (const auto& phi : fixtures::monomials_up_to(named.vertices.front().size(), deg)) {
    const auto r = expansion(p, phi, q, opts);
    for (const auto& [n, a] : coefficients_from_oracle(p, phi))
      c.expect(r.coefficient(n) == a, named.name + " " + phi.to_string() + " n=" + std::to_string(n));
  }
}

void criterion5(Check& c) {
  for (const auto& named : fixtures::delzant_suite()) engine_vs_oracle(c, named, phi_degree_cap(build(named.vertices)));
}

void criterion6(Check& c) {
  for (const auto& [name, verts] : fixtures::delzant_suite()) {
    const auto p = build(verts);
    for (const auto& phi : fixtures::monomials_up_to(p.dim(), phi_degree_cap(p))) {
      const auto r = expansion(p, phi);
      const auto [a0, a1] = closed_form_A0_A1(p, phi);
      c.expect(a0 == r.coefficient(0) && a1 == r.coefficient(1), name + " A0/A1 " + phi.to_string());
      c.expect(closed_form_A2(p, phi) == r.coefficient(2), name + " A2 " + phi.to_string());
    }
  }
  const auto cube = build(fixtures::delzant_suite()[4].vertices);
  c.expect(closed_form_A2(cube, MultiPoly::constant(3, 1)) == 3, "cube A2");
  const auto simplex = build(fixtures::delzant_suite()[2].vertices);
  c.expect(closed_form_A2(simplex, MultiPoly::constant(2, 1)) == 1, "simplex A2");
}

void criterion7(Check& c) {
  for (const auto& [name, verts] : fixtures::delzant_suite()) {
    const auto p = build(verts);
    if (p.dim() != 2) continue;
    for (const auto& phi : fixtures::monomials_up_to(2, 3)) {
      ExpansionOptions opts;
      opts.n_max = 5;
      const auto r = expansion(p, phi, std::nullopt, opts);
      for (int n = 2; n <= 5; ++n)
        c.expect(closed_form_2d(p, phi, std::nullopt, n) == r.coefficient(n),
                 name + " " + phi.to_string() + " n=" + std::to_string(n));
    }
  }
}

void criterion8(Check& c) {
  std::mt19937 rng(8);
  for (const auto& [name, verts] : fixtures::delzant_suite()) {
    const auto p = build(verts);
    const std::size_t m = p.dim();
    MatQ q = m == 1 ? MatQ{{3}} : m == 2 ? MatQ{{2, 1}, {1, 2}} : fixtures::random_spd(m, rng);
    for (const auto& phi : fixtures::monomials_up_to(m, phi_degree_cap(p)))
      c.expect(expansion(p, phi).coefficients == expansion(p, phi, q).coefficients, name + " " + phi.to_string());
  }
}

void criterion9(Check& c) {
  ExpansionOptions lex;
  lex.subdivision.stellar = StellarRule::MinSumBarycentric;
  lex.subdivision.rotate_pivot = true;
  for (const auto& named : fixtures::non_delzant_suite()) {
    const auto p = build(named.vertices);
    c.expect(expansion(p, MultiPoly::constant(p.dim(), 1)).valuation_path, named.name + " valuation path");
    engine_vs_oracle(c, named, 2);
    engine_vs_oracle(c, named, 2, std::nullopt, lex);
    for (const auto& phi : fixtures::monomials_up_to(p.dim(), 2)) {
      const auto a = expansion(p, phi);
      const auto b = expansion(p, phi, std::nullopt, lex);
      c.expect(a.per_face == b.per_face, named.name + " per-face " + phi.to_string());
    }
  }
}

void criterion10(Check& c) {
  for (std::size_t m = 1; m <= 2; ++m)
    for (const auto& mono : fixtures::monomials_up_to(m, 8)) {
      const auto& e = mono.terms().begin()->first;
      const std::vector<int> mu(e.begin(), e.end());
      const int size = std::accumulate(mu.begin(), mu.end(), 0);
      c.expect(J_mu(mu).degree() <= size / 2, "J_mu degree");
    }
  const std::vector<VecQ> points1{{make_rational(1, 3)}, {make_rational(3, 2)}};
  const std::vector<VecQ> points2{{make_rational(1, 2), make_rational(3, 4)}, {make_rational(2, 1), make_rational(1, 5)}};
  for (std::size_t m = 1; m <= 2; ++m)
    for (const auto& x : m == 1 ? points1 : points2)
      for (long n : {1L, 4L, 10L}) {
        const auto norm = szasz_eval(MultiPoly::constant(m, 1), x, n, 200);
        c.expect(abs(norm - 1) < Real50("1e-12"), "normalization N=" + std::to_string(n));
        for (const auto& phi : fixtures::monomials_up_to(m, 4)) {
          const auto err = abs(szasz_eval(phi, x, n, 200) - to_real(szasz_moment_expansion(phi, x, n)));
          c.expect(err < Real50("1e-9"), "moment identity " + phi.to_string() + " N=" + std::to_string(n));
        }
      }
  auto all = fixtures::delzant_suite();
  for (const auto& n : fixtures::non_delzant_suite()) all.push_back(n);
  for (const auto& [name, verts] : all)
    for (long n = 1; n <= 3; ++n)
      c.expect(euler_brion_window_check(build(verts), n, -2, n + 2), name + " window N=" + std::to_string(n));
}

struct Criterion {
  int id;
  double limit_seconds;
  void (*run)(Check&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, 1, criterion1},   {2, 5, criterion2},    {3, 5, criterion3},   {4, 30, criterion4},
      {5, 120, criterion5}, {6, 10, criterion6},   {7, 30, criterion7},  {8, 120, criterion8},
      {9, 120, criterion9}, {10, 60, criterion10},
  };
  bool all_ok = true;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_seconds) {
      check.ok = false;
      check.notes.push_back("over time limit");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, limit %g s", secs, cr.limit_seconds);
    std::cout << "criterion " << cr.id << ": " << (check.ok ? "PASS" : "FAIL") << " (" << timing << ")";
    for (const auto& note : check.notes) std::cout << "; " << note;
    std::cout << std::endl;
    all_ok = all_ok && check.ok;
  }
  return all_ok ? 0 : 1;
}
