// Triangulation and unimodular subdivision of pointed rational cones, signed
// inclusion-exclusion coefficients, and vertex operators of pointed cones.
#pragma once

#include <vector>

#include "emlattice/diffop.hpp"
#include "emlattice/linalg.hpp"

namespace eml {

/// Cone spanned by primitive integer generators in Z^d.
struct PointedCone {
  std::vector<VecZ> generators;
  std::size_t ambient_dim() const { return generators.empty() ? 0 : generators.front().size(); }
  std::size_t dim() const;
};

enum class StellarRule {
  /// Minimize the largest barycentric coordinate, ties by smallest vector.
  MinMaxBarycentric,
  /// Minimize the sum of barycentric coordinates, ties by largest vector.
  MinSumBarycentric,
};

struct SubdivisionOptions {
  /// Rotates the ray order used by the pulling triangulation by one position.
  bool rotate_pivot = false;
  StellarRule stellar = StellarRule::MinMaxBarycentric;
};

using ConeCell = std::vector<VecZ>;

struct SignedCell {
  ConeCell generators;
  Integer r;
  int dim = 0;
};

/// Extreme rays of the cone (primitive, sorted, duplicates and interior rays removed).
std::vector<VecZ> extreme_rays(const PointedCone& c);

/// Index of the lattice spanned by independent generators inside its saturation.
Integer cone_index(const ConeCell& generators);
bool is_unimodular(const ConeCell& generators);

/// Pulling triangulation into simplicial cones spanned by extreme rays.
std::vector<ConeCell> triangulate_cone(const PointedCone& c, const SubdivisionOptions& opts = {});

/// Stellar subdivision of a simplicial cone into unimodular cones.
std::vector<ConeCell> unimodularize(const ConeCell& simplicial, const SubdivisionOptions& opts = {});

/// Stellar subdivision applied to a whole simplicial fan, keeping it a fan.
std::vector<ConeCell> unimodular_fan(std::vector<ConeCell> cells, const SubdivisionOptions& opts = {});

/// All faces of the given maximal cells with r_τ = 1 - Σ_{σ ⊋ τ} r_σ.
/// Throws if two maximal cells do not meet in a common face.
std::vector<SignedCell> signed_coefficients(const std::vector<ConeCell>& maximal_cells);

/// Full pipeline: triangulate, make unimodular, compute signed cells.
std::vector<SignedCell> subdivide_cone(const PointedCone& c, const SubdivisionOptions& opts = {});

struct PointedOperatorInfo {
  bool valuation_path = false;
  std::size_t cells = 0;
};

/// Vertex operator D_n(C;0) of a pointed cone with respect to the lattice Z^d
/// and inner product q on R^d. Non-unimodular cones go through the signed
/// unimodular subdivision.
DiffOp bv_op_pointed(const PointedCone& c, int n, const MatQ& q, const SubdivisionOptions& opts = {},
                     PointedOperatorInfo* info = nullptr);

}  // namespace eml
