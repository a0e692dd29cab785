// Stirling numbers, the p(n,k;z) family, Euler-Maclaurin kernels and Szasz
// moment polynomials.
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "emlattice/cyclotomic.hpp"
#include "emlattice/multipoly.hpp"
#include "emlattice/rational.hpp"

namespace eml {

/// Label-keyed multi-index; labels absent from the map count as zero.
using MultiIndex = std::map<int, int>;

int total(const MultiIndex& mu);

/// Calls visit(s) for every increasing k-subset s of {0..n-1}, in lexicographic order.
void for_each_k_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit);

/// Stirling numbers of the second kind from the triangular recursion.
Integer stirling2(int n, int k);

/// p(n,k;z) = Σ_t C(n,t) (-1)^t S(n-t,k-t) z^{k-t}, univariate in z.
MultiPoly p_poly(int n, int k);
/// p(n,k;ω) in Q(ω).
CycloElem p_poly_at(int n, int k, const CycloElem& omega);
/// p(n,k) = p(n,k;1)
Rational p_scalar(int n, int k);

/// p(n) = Σ_{μ=n}^{2n} (-1)^μ (μ-n)!/μ! p(μ,μ-n)
Rational p_of_n(int n);
/// Π_{e} p(ν(e)); every entry must be positive.
Rational p_I_of_nu(const MultiIndex& nu);

/// Untwisted Euler-Maclaurin coefficient c_n (double-sum formula).
Rational c_seq(int n);
/// Twisted coefficient c_n^ω (double-sum formula), ω ≠ 1.
CycloElem c_seq_twisted(const CycloElem& omega, int n);

/// J_μ(x) = Π_i Σ_k p(μ_i,k) x_i^k, one variable per entry of μ.
MultiPoly J_mu(const std::vector<int>& mu);

struct TwistedMoment {
  /// Σ_k p(μ,k;ω) x^k, constant term first.
  std::vector<CycloElem> poly;
  /// r with J_μ^ω(x) = e^{-r x} Σ_k poly[k] x^k; r = 1 - ω.
  CycloElem rate;
};
TwistedMoment J_mu_twisted(int mu, const CycloElem& omega);

}  // namespace eml
