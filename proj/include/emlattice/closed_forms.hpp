// Closed-form coefficients for Delzant polytopes: A_0, A_1, A_2 and the full
// two-dimensional formula.
#pragma once

#include <optional>
#include <utility>

#include "emlattice/polytope.hpp"

namespace eml {

/// (A_0, A_1) = (∫_P φ, ½ Σ_facets ∫_g φ). Requires P Delzant.
std::pair<Rational, Rational> closed_form_A0_A1(const LatticePolytope& p, const MultiPoly& phi);

/// A_2 for Delzant P with the standard inner product.
Rational closed_form_A2(const LatticePolytope& p, const MultiPoly& phi, const std::optional<MatQ>& q = std::nullopt);

/// A_n, n >= 2, for a two-dimensional Delzant polygon.
Rational closed_form_2d(const LatticePolytope& p, const MultiPoly& phi, const std::optional<MatQ>& q, int n);

}  // namespace eml
