#include "emlattice/closed_forms.hpp"

#include <algorithm>

#include "emlattice/diffop.hpp"
#include "emlattice/series.hpp"

namespace eml {

namespace {

void require_delzant(const LatticePolytope& p) {
  if (!is_delzant(p)) throw InvalidArgument("closed form requires a Delzant polytope");
}

VecQ vertex(const LatticePolytope& p, int i) { return to_q(p.vertices()[static_cast<std::size_t>(i)]); }

// Primitive direction of edge e leaving vertex v.
VecQ edge_direction(const LatticePolytope& p, const Face& e, int v) {
  const int other = e.vertices[0] == v ? e.vertices[1] : e.vertices[0];
  return to_q(primitive(sub(vertex(p, other), vertex(p, v))));
}

std::vector<const Face*> edges_at(const LatticePolytope& p, int v) {
  std::vector<const Face*> out;
  for (const auto& f : p.faces())
    if (f.dim == 1 && (f.vertices[0] == v || f.vertices[1] == v)) out.push_back(&f);
  return out;
}

MultiPoly gradient_power(const VecQ& u, int k) { return MultiPoly::linear_form(u).pow(k); }

Rational apply_at(const MultiPoly& symbol, const MultiPoly& phi, const VecQ& point) {
  return mpoly_apply_diffop(DiffOp::from_symbol(symbol, std::max(symbol.degree(), 0)), phi).evaluate(point);
}

}  // namespace

std::pair<Rational, Rational> closed_form_A0_A1(const LatticePolytope& p, const MultiPoly& phi) {
  require_delzant(p);
  const MultiPoly f_phi = pull_back(p, phi);
  const Rational a0 = integrate_poly_over_face(p, p.whole(), f_phi);
  Rational a1 = 0;
  for (const auto& g : p.faces())
    if (g.dim + 1 == static_cast<int>(p.dim())) a1 += integrate_poly_over_face(p, g, f_phi);
  return {a0, a1 / 2};
}

Rational closed_form_A2(const LatticePolytope& p, const MultiPoly& phi, const std::optional<MatQ>& q) {
  require_delzant(p);
  const std::size_t m = p.dim();
  const MatQ q_in = q ? *q : MatQ::identity(ambient_dim(p));
  if (pull_back_inner_product(p, q_in) != MatQ::identity(m))
    throw InvalidArgument("closed form for A_2 requires the standard inner product");
  const MultiPoly f_phi = pull_back(p, phi);
  Rational a2 = 0;
  for (const auto& g : p.faces()) {
    const int codim = static_cast<int>(m) - g.dim;
    if (codim == 1) {
      const VecQ alpha = to_q(p.facets()[static_cast<std::size_t>(g.facets.at(0))].normal);
      const MultiPoly grad = mpoly_apply_diffop(DiffOp::gradient_along(alpha), f_phi);
      a2 -= integrate_poly_over_face(p, g, grad) / (12 * dot(alpha, alpha));
    } else if (codim == 2) {
      if (g.facets.size() != 2) throw InternalError("codimension-two face of a simple polytope lies on two facets");
      const VecQ a1 = to_q(p.facets()[static_cast<std::size_t>(g.facets[0])].normal);
      const VecQ a2v = to_q(p.facets()[static_cast<std::size_t>(g.facets[1])].normal);
      const Rational c12 = dot(a1, a2v);
      const Rational w = Rational(1, 4) - (c12 / dot(a1, a1) + c12 / dot(a2v, a2v)) / 12;
      a2 += w * integrate_poly_over_face(p, g, f_phi);
    }
  }
  return a2;
}

Rational closed_form_2d(const LatticePolytope& p, const MultiPoly& phi, const std::optional<MatQ>& q, int n) {
  if (p.dim() != 2) throw InvalidArgument("two-dimensional closed form needs a polygon");
  if (n < 2) throw InvalidArgument("two-dimensional closed form needs n >= 2");
  require_delzant(p);
  const MatQ qi = pull_back_inner_product(p, q ? *q : MatQ::identity(ambient_dim(p)));
  const MultiPoly f_phi = pull_back(p, phi);
  const auto b = series_coeffs_todd(n);
  auto bf = [&](int k) -> Rational { return b[static_cast<std::size_t>(k)] / Rational(factorial(k)); };

  Rational total = 0;
  for (const auto& f : p.faces()) {
    if (f.dim == 1) {
      const int v = f.ref_vertex;
      const VecQ e1 = edge_direction(p, f, v);
      VecQ e2;
      for (const Face* e : edges_at(p, v))
        if (e->id != f.id) e2 = edge_direction(p, *e, v);
      // Q-projection of e2 onto the complement of the edge direction.
      const VecQ u = sub(e2, scale(qdot(qi, e2, e1) / qdot(qi, e1, e1), e1));
      const MultiPoly d = gradient_power(u, n - 1);
      total -= bf(n) * integrate_poly_over_face(p, f, mpoly_apply_diffop(DiffOp::from_symbol(d, n - 1), f_phi));
    } else if (f.dim == 0) {
      const int v = f.vertices[0];
      const auto es = edges_at(p, v);
      const VecQ e1 = edge_direction(p, *es.at(0), v);
      const VecQ e2 = edge_direction(p, *es.at(1), v);
      const Rational c1 = qdot(qi, e1, e2) / qdot(qi, e2, e2);
      const Rational c2 = qdot(qi, e1, e2) / qdot(qi, e1, e1);
      const VecQ u1 = sub(e1, scale(c1, e2));
      const VecQ u2 = sub(e2, scale(c2, e1));
      MultiPoly sym(2);
      for (int k = 1; k <= n - 1; ++k)
        sym += (bf(k) * bf(n - k)) * (gradient_power(e1, k - 1) * gradient_power(e2, n - 1 - k));
      MultiPoly tail(2);
      for (int s = 0; s <= n - 2; ++s) {
        tail += c1 * (gradient_power(u1, s) * gradient_power(e1, n - 2 - s));
        tail += c2 * (gradient_power(u2, s) * gradient_power(e2, n - 2 - s));
      }
      sym += bf(n) * tail;
      total += apply_at(sym, f_phi, vertex(p, v));
    }
  }
  return total;
}

}  // namespace eml
