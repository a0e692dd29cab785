// Constant-coefficient differential operators represented by their symbols.
#pragma once

#include <vector>

#include "emlattice/linalg.hpp"
#include "emlattice/multipoly.hpp"

namespace eml {

/// The operator obtained from `symbol` by replacing ξ_i with ∂/∂x_i.
struct DiffOp {
  std::size_t dim = 0;
  MultiPoly symbol;
  int order = 0;
  /// Basis of the subspace W such that the operator only differentiates in
  /// directions Q-orthogonal to W. Empty means no restriction.
  std::vector<VecQ> carrier;

  static DiffOp identity(std::size_t dim);
  static DiffOp zero(std::size_t dim, int order);
  /// Directional derivative ∇_u.
  static DiffOp gradient_along(const VecQ& u);
  /// Takes order from the symbol; an explicit order is needed for the zero symbol.
  static DiffOp from_symbol(MultiPoly symbol, int order, std::vector<VecQ> carrier = {});
};

/// Applies op to φ: each symbol monomial ξ^β acts as ∂^β.
MultiPoly mpoly_apply_diffop(const DiffOp& op, const MultiPoly& phi);

/// Matrix of the dual projection ξ ↦ p(ξ) onto the annihilator of span(w),
/// orthogonal for the inner product induced by Q on dual vectors.
MatQ dual_projection(const MatQ& q, const std::vector<VecQ>& w);

/// σ(ξ) == σ(p(ξ)) for the carrier annotation of op.
bool satisfies_carrier(const DiffOp& op, const MatQ& q);

}  // namespace eml
