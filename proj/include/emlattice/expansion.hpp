// Euler-Maclaurin coefficients A_n(P;φ) as sums of face integrals of
// Berline-Vergne operators.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "emlattice/diffop.hpp"
#include "emlattice/polytope.hpp"
#include "emlattice/subdivision.hpp"

namespace eml {

struct ExpansionResult {
  /// coefficients[n] = A_n for 0 <= n <= n_max.
  std::vector<Rational> coefficients;
  /// (n, face id) ↦ ∫_f D_n(P;f)φ. Face ids refer to the polytope's face list.
  std::map<std::pair<int, int>, Rational> per_face;
  /// Inner product used, in the polytope's intrinsic coordinates.
  MatQ q;
  int n_max = 0;
  std::size_t dim = 0;
  int degree = 0;
  /// n_max >= dim + deg φ, so every omitted coefficient is zero.
  bool terminated = false;
  /// Some transverse cone was not unimodular and went through bv_op_pointed's subdivision.
  bool valuation_path = false;

  Rational coefficient(int n) const;
};

struct ExpansionOptions {
  /// Defaults to dim P + deg φ.
  std::optional<int> n_max;
  SubdivisionOptions subdivision;
};

/// φ and Q are given in the caller's coordinates; Q defaults to the identity.
ExpansionResult expansion(const LatticePolytope& p, const MultiPoly& phi, const std::optional<MatQ>& q = std::nullopt,
                          const ExpansionOptions& opts = {});

/// Operator D_n(P;f) on intrinsic coordinates (codim f <= n, f ≠ P).
DiffOp face_operator(const LatticePolytope& p, const Face& f, int n, const MatQ& q_intrinsic,
                     const SubdivisionOptions& opts = {}, PointedOperatorInfo* info = nullptr);

/// Basis of the lattice obtained by projecting Z^m along L(f) (projection matrix `proj`).
std::vector<VecQ> projected_lattice_basis(const MatQ& proj);

}  // namespace eml
