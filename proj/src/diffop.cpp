#include "emlattice/diffop.hpp"

namespace eml {

DiffOp DiffOp::identity(std::size_t dim) { return {dim, MultiPoly::constant(dim, 1), 0, {}}; }

DiffOp DiffOp::zero(std::size_t dim, int order) { return {dim, MultiPoly(dim), order, {}}; }

DiffOp DiffOp::gradient_along(const VecQ& u) { return {u.size(), MultiPoly::linear_form(u), 1, {}}; }

DiffOp DiffOp::from_symbol(MultiPoly symbol, int order, std::vector<VecQ> carrier) {
  if (!symbol.is_homogeneous()) throw InvalidArgument("operator symbol must be homogeneous");
  if (!symbol.is_zero() && symbol.degree() != order) throw InvalidArgument("operator order does not match symbol degree");
  const std::size_t dim = symbol.nvars();
  return {dim, std::move(symbol), order, std::move(carrier)};
}

MultiPoly mpoly_apply_diffop(const DiffOp& op, const MultiPoly& phi) {
  if (op.symbol.nvars() != phi.nvars()) throw InvalidArgument("operator and polynomial dimensions differ");
  MultiPoly result(phi.nvars());
  for (const auto& [beta, c] : op.symbol.terms()) {
    MultiPoly d = phi.partial(beta);
    d *= c;
    result += d;
  }
  return result;
}

MatQ dual_projection(const MatQ& q, const std::vector<VecQ>& w) {
  return q * (orth_project(q, w) * inverse(q));
}

bool satisfies_carrier(const DiffOp& op, const MatQ& q) {
  if (op.carrier.empty()) return true;
  return op.symbol.substitute_linear(dual_projection(q, op.carrier)) == op.symbol;
}

}  // namespace eml
