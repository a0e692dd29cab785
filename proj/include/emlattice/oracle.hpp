// Brute-force ground truth: Riemann sums over dilates, weighted Ehrhart
// polynomials, and Szasz-function evaluation.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "emlattice/cyclotomic.hpp"
#include "emlattice/polytope.hpp"

namespace eml {

using Real50 = boost::multiprecision::cpp_bin_float_50;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("desk-scale exceeded") {}
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// N^{-dim P} Σ_{γ ∈ NP ∩ Z^m} φ(γ/N), by enumeration of the bounding box.
Rational riemann_sum(const LatticePolytope& p, const MultiPoly& phi, long n, std::uint64_t budget = kDefaultBudget);

struct WeightedEhrhart {
  /// E(N) = N^{dim P + deg φ} R_N(P;φ) = Σ_i coeffs[i] N^i.
  std::vector<Rational> coeffs;
  std::size_t dim = 0;
  int degree = 0;

  Rational evaluate(long n) const;
};

/// Interpolates at N = 1..D+1 and checks N = D+2, D+3, D = dim P + deg φ.
WeightedEhrhart weighted_ehrhart(const LatticePolytope& p, const MultiPoly& phi, std::uint64_t budget = kDefaultBudget);

/// (n, A_n) for 0 <= n <= D from R_N = Σ A_n N^{-n}.
std::vector<std::pair<int, Rational>> coefficients_from_oracle(const LatticePolytope& p, const MultiPoly& phi,
                                                               std::uint64_t budget = kDefaultBudget);

/// Σ_γ Π_i ℓ_{γ_i}(N x_i) φ(γ/N) with γ_i <= truncation, x in the open orthant.
Real50 szasz_eval(const MultiPoly& phi, const VecQ& x, long n, int truncation);

/// Σ_{|μ| <= deg φ} ∂^μφ(x)/(μ! N^{|μ|}) J_μ(Nx), exact.
Rational szasz_moment_expansion(const MultiPoly& phi, const VecQ& x, long n);

/// (1/N) Σ_k ω^k samples[k].
CycloElem twisted_riemann_1d(const CycloElem& omega, const std::vector<Rational>& samples, long n);

}  // namespace eml
