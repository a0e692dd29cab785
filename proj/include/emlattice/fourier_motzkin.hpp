// Exact feasibility of linear inequality systems by Fourier-Motzkin elimination.
#pragma once

#include <vector>

#include "emlattice/linalg.hpp"

namespace eml {

/// a·x >= b
struct LinearInequality {
  VecQ a;
  Rational b;
};

/// True iff some x ∈ Q^n satisfies every inequality.
bool fm_feasible(std::vector<LinearInequality> system, std::size_t nvars);

/// True iff no nonzero x has both x and -x in the cone spanned by the generators.
bool is_pointed(const std::vector<VecQ>& generators);

/// True iff g is not in the cone spanned by `others`.
bool outside_cone(const VecQ& g, const std::vector<VecQ>& others);

}  // namespace eml
