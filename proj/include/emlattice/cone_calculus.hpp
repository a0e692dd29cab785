// Integration-by-parts operators L(E;I,J;α) and Berline-Vergne operators
// D_n(C;F) for unimodular cones.
//
// All symbols are first built as polynomials in y_e = ⟨ξ,e⟩, one variable per
// generator e, using only the Gram matrix of the generators; they are lifted
// to the ambient dual coordinates ξ at the end.
#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "emlattice/combinatorics.hpp"
#include "emlattice/diffop.hpp"
#include "emlattice/linalg.hpp"
#include "emlattice/multipoly.hpp"

namespace eml {

/// Generator subsets as bit masks over generator labels 0..d-1.
using Subset = std::uint32_t;

inline int popcount(Subset s) { return __builtin_popcount(s); }
inline bool contains(Subset s, int e) { return (s >> e) & 1U; }
Subset subset_of(const std::vector<int>& labels);
std::vector<int> labels_of(Subset s);

/// Cone spanned by independent generators (ambient coordinates). The lattice
/// context is the caller's responsibility: the generators must be part of a
/// basis of the lattice they are measured against.
struct UniCone {
  std::vector<VecQ> generators;
  std::size_t ambient_dim() const { return generators.empty() ? 0 : generators.front().size(); }
  std::size_t size() const { return generators.size(); }
};

struct Decomposition {
  /// u(I;e) in generator coordinates (coefficient of each generator).
  VecQ u_coords;
  /// u(I;e) in ambient coordinates.
  VecQ u;
  /// c(I;e,v), keyed by v ∉ I.
  std::map<int, Rational> c;
};

enum class BranchRule { SmallestLabel, LargestLabel };

/// Memoized family L(E;I,J;α) for one cone and inner product. Not safe for
/// concurrent use of a single instance.
class IbpFamily {
 public:
  IbpFamily(UniCone cone, MatQ q, BranchRule rule = BranchRule::SmallestLabel);

  std::size_t size() const { return cone_.size(); }
  const UniCone& cone() const { return cone_; }
  const MatQ& q() const { return q_; }
  const MatQ& gram() const { return gram_; }

  Decomposition deco(Subset i, int e) const;

  /// σ(L(E;I,J;α)) as a polynomial in y. α is indexed by label (length d)
  /// and must be supported on I.
  MultiPoly symbol_y(Subset i, Subset j, const std::vector<int>& alpha);

  /// Independent computation of σ(I,J;α) by exact division (no recursion in α).
  MultiPoly division_symbol_y(Subset i, Subset j, const std::vector<int>& alpha);

  /// y-coordinates of p_J(y): rows outside J are zero.
  MatQ projection_y(Subset j) const;

  /// Substitutes y_e = ⟨ξ,e⟩.
  MultiPoly lift(const MultiPoly& y_symbol) const;
  /// Generators outside `s`, as ambient vectors.
  std::vector<VecQ> span_outside(Subset s) const;

 private:
  void validate(Subset i, Subset j, const std::vector<int>& alpha) const;
  MultiPoly y_linear(const VecQ& coords) const;

  UniCone cone_;
  MatQ q_;
  MatQ gram_;
  MatQ dual_gram_;
  BranchRule rule_;
  std::map<std::tuple<Subset, Subset, std::vector<int>>, MultiPoly> memo_;
  std::map<std::tuple<Subset, Subset, std::vector<int>>, MultiPoly> division_memo_;
};

Decomposition deco(const UniCone& cone, const std::vector<int>& i, int e, const MatQ& q);

/// L(E;I,J;α) with its carrier X(J) = span(E∖J).
DiffOp ibp_op(const UniCone& cone, const std::vector<int>& i, const std::vector<int>& j, const MultiIndex& alpha,
              const MatQ& q, BranchRule rule = BranchRule::SmallestLabel);
/// σ(I,J;α) from the polynomial-division characterization.
MultiPoly ibp_symbol(const UniCone& cone, const std::vector<int>& i, const std::vector<int>& j,
                     const MultiIndex& alpha, const MatQ& q);

/// D_n(C;F) for F = C(I_F); the vertex operator is I_F = all generators.
DiffOp bv_op_unimodular(const UniCone& cone, const std::vector<int>& face_labels, int n, const MatQ& q);
/// Same, reusing a family (its cone and inner product).
DiffOp bv_op_unimodular(IbpFamily& family, Subset face, int n);
/// Vertex operator symbol D_n(C;0) in y-variables.
MultiPoly bv_vertex_symbol_y(IbpFamily& family, int n);

/// L_n(C;I) = (-1)^n Σ_{ν>0 on I, |ν|=n} p_I(ν) ∇^{ν-e(I)}.
DiffOp ln_op(const UniCone& cone, const std::vector<int>& i, int n);

/// All ν supported exactly on `labels` with positive entries summing to n.
std::vector<std::vector<int>> positive_compositions(const std::vector<int>& labels, std::size_t d, int n);

}  // namespace eml
