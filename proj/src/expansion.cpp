#include "emlattice/expansion.hpp"

namespace eml {

Rational ExpansionResult::coefficient(int n) const {
  if (n < 0) throw InvalidArgument("coefficient index must be non-negative");
  if (static_cast<std::size_t>(n) < coefficients.size()) return coefficients[static_cast<std::size_t>(n)];
  if (terminated) return 0;
  throw InvalidArgument("coefficient beyond n_max of a truncated expansion");
}

std::vector<VecQ> projected_lattice_basis(const MatQ& proj) {
  const std::size_t m = proj.rows();
  Integer denom = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), proj(i, j).get_den_mpz_t());
  std::vector<VecZ> rows;
  for (std::size_t j = 0; j < m; ++j) rows.push_back(to_z(scale(Rational(denom), proj.col(j))));
  std::vector<VecQ> basis;
  for (const auto& r : hermite_rows(std::move(rows))) {
    VecQ v = to_q(r);
    if (is_zero(v)) continue;
    basis.push_back(scale(make_rational(1, denom), v));
  }
  return basis;
}

DiffOp face_operator(const LatticePolytope& p, const Face& f, int n, const MatQ& q_intrinsic,
                     const SubdivisionOptions& opts, PointedOperatorInfo* info) {
  const std::size_t m = p.dim();
  const int codim = static_cast<int>(m) - f.dim;
  if (n < codim) throw InvalidArgument("operator index below the face codimension");
  const PointedConeT t = transverse_cone(p, f, q_intrinsic);
  const auto basis = projected_lattice_basis(t.projection);
  if (basis.size() != static_cast<std::size_t>(codim)) throw InternalError("projected lattice has the wrong rank");

  PointedCone cone;
  for (const auto& g : t.generators) {
    const VecQ c = coordinates_in(basis, g);
    cone.generators.push_back(primitive(c));
  }
  const MatQ b = MatQ::from_columns(basis, m);
  const MatQ gram = b.transpose() * q_intrinsic * b;
  DiffOp local = bv_op_pointed(cone, n, gram, opts, info);

  // η_j = ⟨ξ, b_j⟩.
  MatQ lift(static_cast<std::size_t>(codim), m);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) lift(j, i) = basis[j][i];
  std::vector<VecQ> carrier = t.face_space;
  for (const auto& w : local.carrier) carrier.push_back(b * w);
  return DiffOp{m, local.symbol.substitute_linear(lift), local.order, std::move(carrier)};
}

ExpansionResult expansion(const LatticePolytope& p, const MultiPoly& phi, const std::optional<MatQ>& q,
                          const ExpansionOptions& opts) {
  const std::size_t m_in = ambient_dim(p);
  const MultiPoly f_phi = pull_back(p, phi);
  const MatQ q_in = q ? *q : MatQ::identity(m_in);
  ExpansionResult res;
  res.q = pull_back_inner_product(p, q_in);
  res.dim = p.dim();
  res.degree = std::max(phi.degree(), 0);
  const int complete = static_cast<int>(res.dim) + res.degree;
  res.n_max = opts.n_max.value_or(complete);
  if (res.n_max < 0) throw InvalidArgument("n_max must be non-negative");
  res.terminated = res.n_max >= complete;
  res.coefficients.assign(static_cast<std::size_t>(res.n_max) + 1, Rational(0));

  const bool delzant = is_delzant(p);
  const int m = static_cast<int>(p.dim());
  for (const Face& f : p.faces()) {
    if (f.id == p.whole().id) {
      const Rational v = integrate_poly_over_face(p, f, f_phi);
      res.per_face[{0, f.id}] = v;
      res.coefficients[0] += v;
      continue;
    }
    // Terms of order above deg φ annihilate φ.
    const int hi = std::min(res.n_max, m - f.dim + res.degree);
    for (int n = m - f.dim; n <= hi; ++n) {
      PointedOperatorInfo info;
      const DiffOp op = face_operator(p, f, n, res.q, opts.subdivision, &info);
      if (info.valuation_path) {
        if (delzant) throw InternalError("transverse cone of a Delzant polytope is not unimodular");
        res.valuation_path = true;
      }
      const Rational v = integrate_poly_over_face(p, f, mpoly_apply_diffop(op, f_phi));
      res.per_face[{n, f.id}] = v;
      res.coefficients[static_cast<std::size_t>(n)] += v;
    }
  }
  return res;
}

}  // namespace eml
