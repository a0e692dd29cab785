#include "emlattice/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "emlattice/combinatorics.hpp"
#include "emlattice/fourier_motzkin.hpp"

namespace eml {

namespace {

std::size_t affine_rank(const std::vector<VecZ>& pts, const std::vector<int>& idx) {
  if (idx.size() <= 1) return 0;
  std::vector<VecQ> diffs;
  const VecQ base = to_q(pts[static_cast<std::size_t>(idx[0])]);
  for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(sub(to_q(pts[static_cast<std::size_t>(idx[i])]), base));
  return rank(MatQ::from_rows(diffs, base.size()));
}

Rational pair(const VecZ& a, const VecZ& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i] * x[i]);
  return s;
}

Rational pair(const VecZ& a, const VecQ& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

}  // namespace

LatticePolytope LatticePolytope::build(const std::vector<VecZ>& input, bool allow_lower_dim) {
  if (input.empty()) throw InvalidArgument("polytope needs at least one vertex");
  const std::size_t m = input.front().size();
  for (const auto& p : input)
    if (p.size() != m) throw InvalidArgument("vertices have inconsistent dimensions");
  std::vector<VecZ> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<int> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
  const std::size_t r = affine_rank(pts, all);

  LatticePolytope poly;
  if (r < m) {
    if (!allow_lower_dim) throw InvalidArgument("not full-dimensional");
    std::vector<VecQ> diffs;
    for (const auto& p : pts) diffs.push_back(sub(to_q(p), to_q(pts[0])));
    AffineEmbedding emb{pts[0], saturated_basis(diffs, m)};
    std::vector<VecQ> basis_q;
    for (const auto& b : emb.basis) basis_q.push_back(to_q(b));
    std::vector<VecZ> intrinsic;
    for (const auto& d : diffs) intrinsic.push_back(to_z(r == 0 ? VecQ{} : coordinates_in(basis_q, d)));
    poly.embedding_ = std::move(emb);
    pts = std::move(intrinsic);
    std::sort(pts.begin(), pts.end());
  }
  poly.dim_ = r;

  if (r == 0) {
    poly.vertices_ = {pts[0]};
    poly.faces_.push_back(Face{0, 0, {0}, 0, {}, {}});
    return poly;
  }

  // Facets: hyperplanes through r affinely independent points supporting all points.
  std::map<VecZ, Integer> normals;
  const int npts = static_cast<int>(pts.size());
  for_each_k_subset(npts, static_cast<int>(r), [&](const std::vector<int>& s) {
    if (affine_rank(pts, s) != r - 1) return;
    std::vector<VecQ> rows;
    const VecQ base = to_q(pts[static_cast<std::size_t>(s[0])]);
    for (std::size_t i = 1; i < s.size(); ++i) rows.push_back(sub(to_q(pts[static_cast<std::size_t>(s[i])]), base));
    MatQ a(rows.size(), r);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < r; ++j) a(i, j) = rows[i][j];
    auto ns = nullspace(a);
    if (ns.size() != 1) return;
    VecZ nrm = primitive(ns[0]);
    Rational c = pair(nrm, base);
    bool ge = true, le = true;
    for (const auto& p : pts) {
      const Rational v = pair(nrm, p);
      if (v < c) ge = false;
      if (v > c) le = false;
    }
    if (!ge && !le) return;
    if (!ge) {
      for (auto& x : nrm) x = -x;
      c = -c;
    }
    normals.emplace(nrm, to_integer(c));
  });

  // Vertices: points where the tight facet normals have full rank.
  for (const auto& p : pts) {
    std::vector<VecQ> tight;
    for (const auto& [nrm, c] : normals)
      if (pair(nrm, p) == c) tight.push_back(to_q(nrm));
    if (!tight.empty() && rank(MatQ::from_rows(tight, r)) == r) poly.vertices_.push_back(p);
  }
  for (const auto& [nrm, c] : normals) {
    Facet f{nrm, c, {}};
    for (std::size_t i = 0; i < poly.vertices_.size(); ++i)
      if (pair(nrm, poly.vertices_[i]) == c) f.vertices.push_back(static_cast<int>(i));
    poly.facets_.push_back(std::move(f));
  }

  std::set<std::vector<int>> sets;
  std::vector<std::vector<int>> work;
  for (const auto& f : poly.facets_)
    if (sets.insert(f.vertices).second) work.push_back(f.vertices);
  while (!work.empty()) {
    auto s = std::move(work.back());
    work.pop_back();
    for (const auto& f : poly.facets_) {
      std::vector<int> inter;
      std::set_intersection(s.begin(), s.end(), f.vertices.begin(), f.vertices.end(), std::back_inserter(inter));
      if (!inter.empty() && sets.insert(inter).second) work.push_back(std::move(inter));
    }
  }
  std::vector<int> every(poly.vertices_.size());
  for (std::size_t i = 0; i < every.size(); ++i) every[i] = static_cast<int>(i);
  sets.insert(every);

  std::vector<std::pair<std::size_t, std::vector<int>>> graded;
  for (const auto& s : sets) graded.emplace_back(affine_rank(poly.vertices_, s), s);
  std::sort(graded.begin(), graded.end());
  for (auto& [d, s] : graded) {
    Face f;
    f.id = static_cast<int>(poly.faces_.size());
    f.dim = static_cast<int>(d);
    f.vertices = s;
    f.ref_vertex = s.front();
    std::vector<VecQ> diffs;
    const VecQ base = to_q(poly.vertices_[static_cast<std::size_t>(f.ref_vertex)]);
    for (int v : s) diffs.push_back(sub(to_q(poly.vertices_[static_cast<std::size_t>(v)]), base));
    f.lattice_basis = saturated_basis(diffs, r);
    for (std::size_t i = 0; i < poly.facets_.size(); ++i)
      if (std::includes(poly.facets_[i].vertices.begin(), poly.facets_[i].vertices.end(), s.begin(), s.end()))
        f.facets.push_back(static_cast<int>(i));
    poly.faces_.push_back(std::move(f));
  }
  if (poly.faces_.back().vertices.size() != poly.vertices_.size())
    throw InternalError("face lattice does not end with the polytope itself");
  return poly;
}

std::vector<VecZ> LatticePolytope::ambient_vertices() const {
  if (!embedding_) return vertices_;
  std::vector<VecZ> out;
  for (const auto& v : vertices_) {
    VecZ x = embedding_->origin;
    for (std::size_t j = 0; j < v.size(); ++j)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += v[j] * embedding_->basis[j][i];
    out.push_back(std::move(x));
  }
  return out;
}

int LatticePolytope::find_face(const std::vector<int>& vertex_set) const {
  std::vector<int> s = vertex_set;
  std::sort(s.begin(), s.end());
  for (const auto& f : faces_)
    if (f.vertices == s) return f.id;
  return -1;
}

bool LatticePolytope::is_subface(const Face& a, const Face& b) const {
  return std::includes(b.vertices.begin(), b.vertices.end(), a.vertices.begin(), a.vertices.end());
}

std::vector<int> LatticePolytope::covering_faces(const Face& f) const {
  std::vector<int> out;
  for (const auto& g : faces_)
    if (g.dim == f.dim + 1 && is_subface(f, g)) out.push_back(g.id);
  return out;
}

std::vector<int> LatticePolytope::facets_of(const Face& f) const {
  std::vector<int> out;
  for (const auto& g : faces_)
    if (g.dim == f.dim - 1 && is_subface(g, f)) out.push_back(g.id);
  return out;
}

std::vector<VecZ> tangent_cone(const LatticePolytope& p, const Face& f) {
  std::vector<VecZ> gens;
  const VecZ& v = p.vertices()[static_cast<std::size_t>(f.ref_vertex)];
  for (const auto& e : p.faces()) {
    if (e.dim != 1) continue;
    if (!std::binary_search(e.vertices.begin(), e.vertices.end(), f.ref_vertex)) continue;
    if (p.is_subface(e, f)) continue;
    const int other = e.vertices[0] == f.ref_vertex ? e.vertices[1] : e.vertices[0];
    gens.push_back(primitive(sub(to_q(p.vertices()[static_cast<std::size_t>(other)]), to_q(v))));
  }
  for (const auto& b : f.lattice_basis) {
    gens.push_back(b);
    VecZ nb = b;
    for (auto& x : nb) x = -x;
    gens.push_back(std::move(nb));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

PointedConeT transverse_cone(const LatticePolytope& p, const Face& f, const MatQ& q) {
  if (f.id == p.whole().id) throw InvalidArgument("transverse cone of P along itself is not defined");
  if (q.rows() != p.dim() || q.cols() != p.dim()) throw InvalidArgument("inner product dimension mismatch");
  PointedConeT cone;
  cone.ambient_dim = p.dim();
  cone.source_face = f.id;
  for (const auto& b : f.lattice_basis) cone.face_space.push_back(to_q(b));
  cone.projection = orth_project(q, cone.face_space);
  const VecQ v = to_q(p.vertices()[static_cast<std::size_t>(f.ref_vertex)]);
  for (int gid : p.covering_faces(f)) {
    const Face& g = p.face(gid);
    int w = -1;
    for (int x : g.vertices)
      if (!std::binary_search(f.vertices.begin(), f.vertices.end(), x)) {
        w = x;
        break;
      }
    cone.generators.push_back(cone.projection * sub(to_q(p.vertices()[static_cast<std::size_t>(w)]), v));
  }
  if (!is_pointed(cone.generators)) throw InternalError("transverse cone is not pointed");
  return cone;
}

DelzantReport delzant_report(const LatticePolytope& p) {
  DelzantReport rep;
  for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
    std::vector<VecQ> dirs;
    for (const auto& e : p.faces()) {
      if (e.dim != 1 || !std::binary_search(e.vertices.begin(), e.vertices.end(), static_cast<int>(vi))) continue;
      const int other = e.vertices[0] == static_cast<int>(vi) ? e.vertices[1] : e.vertices[0];
      dirs.push_back(to_q(primitive(sub(to_q(p.vertices()[static_cast<std::size_t>(other)]), to_q(p.vertices()[vi])))));
    }
    rep.edge_count.push_back(static_cast<int>(dirs.size()));
    Integer d = 0;
    if (dirs.size() == p.dim()) d = to_integer(abs(det(MatQ::from_columns(dirs, p.dim()))));
    rep.abs_det.push_back(d);
    if (d != 1) rep.delzant = false;
  }
  if (p.dim() == 0) rep.delzant = true;
  return rep;
}

bool is_delzant(const LatticePolytope& p) { return delzant_report(p).delzant; }

Rational integrate_over_simplex(const std::vector<VecQ>& simplex, const std::vector<VecZ>& lattice_basis,
                                const MultiPoly& phi) {
  const std::size_t k = simplex.size() - 1;
  if (k == 0) return phi.evaluate(simplex[0]);
  if (lattice_basis.size() != k) throw InvalidArgument("simplex dimension does not match its lattice");
  std::vector<VecQ> basis_q;
  for (const auto& b : lattice_basis) basis_q.push_back(to_q(b));
  MatQ edge_coords(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = coordinates_in(basis_q, sub(simplex[i + 1], simplex[0]));
    for (std::size_t j = 0; j < k; ++j) edge_coords(j, i) = c[j];
  }
  const Rational jac = abs(det(edge_coords));
  if (jac == 0) return 0;
  const std::size_t m = phi.nvars();
  std::vector<MultiPoly> images;
  for (std::size_t j = 0; j < m; ++j) {
    MultiPoly x = MultiPoly::constant(k, simplex[0][j]);
    for (std::size_t i = 0; i < k; ++i) x += (simplex[i + 1][j] - simplex[0][j]) * MultiPoly::variable(k, i);
    images.push_back(std::move(x));
  }
  const MultiPoly pulled = phi.substitute(images);
  Rational s = 0;
  for (const auto& [a, c] : pulled.terms()) {
    Integer num = 1;
    long deg = 0;
    for (int ai : a) {
      num *= factorial(ai);
      deg += ai;
    }
    s += c * Rational(num) / Rational(factorial(deg + static_cast<long>(k)));
  }
  return s * jac;
}

namespace {

void fan_simplices(const LatticePolytope& p, const Face& f, ApexRule rule, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (f.dim == 0) {
    prefix.push_back(f.vertices[0]);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  const int apex = rule == ApexRule::Reference ? f.ref_vertex : f.vertices.back();
  prefix.push_back(apex);
  for (int gid : p.facets_of(f)) {
    const Face& g = p.face(gid);
    if (std::binary_search(g.vertices.begin(), g.vertices.end(), apex)) continue;
    fan_simplices(p, g, rule, prefix, out);
  }
  prefix.pop_back();
}

}  // namespace

Rational integrate_poly_over_face(const LatticePolytope& p, const Face& f, const MultiPoly& phi, ApexRule apex) {
  if (phi.nvars() != p.dim()) throw InvalidArgument("polynomial dimension does not match the polytope");
  std::vector<std::vector<int>> simplices;
  std::vector<int> prefix;
  fan_simplices(p, f, apex, prefix, simplices);
  Rational total = 0;
  for (const auto& s : simplices) {
    std::vector<VecQ> pts;
    for (int v : s) pts.push_back(to_q(p.vertices()[static_cast<std::size_t>(v)]));
    total += integrate_over_simplex(pts, f.lattice_basis, phi);
  }
  return total;
}

bool in_dilate(const LatticePolytope& p, const VecQ& x, long n) {
  for (const auto& h : p.facets())
    if (pair(h.normal, x) < Rational(h.offset * n)) return false;
  return true;
}

namespace {

bool in_affine_tangent_cone(const LatticePolytope& p, const Face& g, const VecQ& x, long n) {
  for (int hi : g.facets) {
    const Facet& h = p.facets()[static_cast<std::size_t>(hi)];
    if (pair(h.normal, x) < Rational(h.offset * n)) return false;
  }
  return true;
}

// Visits every integer vector in [lo, hi]^dim.
void for_each_box_point(std::size_t dim, long lo, long hi, const std::function<bool(const std::vector<long>&)>& visit) {
  std::vector<long> t(dim, lo);
  if (lo > hi) return;
  while (true) {
    if (!visit(t)) return;
    std::size_t i = 0;
    while (i < dim && t[i] == hi) t[i++] = lo;
    if (i == dim) return;
    ++t[i];
  }
}

}  // namespace

bool euler_brion_window_check(const LatticePolytope& p, long n, long lo, long hi) {
  if (n < 1) throw InvalidArgument("dilation factor must be positive");
  const std::size_t m = p.dim();
  bool ok = true;
  for_each_box_point(m, lo, hi, [&](const std::vector<long>& t) {
    VecQ x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = t[i];
    long rhs = 0;
    for (const auto& g : p.faces())
      if (in_affine_tangent_cone(p, g, x, n)) rhs += (g.dim % 2) ? -1 : 1;
    if (rhs != (in_dilate(p, x, n) ? 1 : 0)) ok = false;
    return ok;
  });
  if (!ok) return false;
  // Characteristic-function identity inside each face's affine hull, at points of (1/3)-lattices.
  for (const auto& f : p.faces()) {
    const VecQ base = to_q(p.vertices()[static_cast<std::size_t>(f.ref_vertex)]);
    for_each_box_point(static_cast<std::size_t>(f.dim), 3 * lo, 3 * hi, [&](const std::vector<long>& t) {
      VecQ x = base;
      for (std::size_t j = 0; j < t.size(); ++j)
        for (std::size_t i = 0; i < m; ++i) x[i] += make_rational(t[j], 3) * f.lattice_basis[j][i];
      long rhs = 0;
      for (const auto& g : p.faces())
        if (p.is_subface(g, f) && in_affine_tangent_cone(p, g, x, 1)) rhs += (g.dim % 2) ? -1 : 1;
      if (rhs != (in_dilate(p, x, 1) ? 1 : 0)) ok = false;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

std::size_t ambient_dim(const LatticePolytope& p) {
  return p.embedding() ? p.embedding()->origin.size() : p.dim();
}

MultiPoly pull_back(const LatticePolytope& p, const MultiPoly& phi) {
  if (phi.nvars() != ambient_dim(p)) throw InvalidArgument("polynomial dimension does not match the polytope");
  if (!p.embedding()) return phi;
  const auto& emb = *p.embedding();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < emb.origin.size(); ++i) {
    MultiPoly x = MultiPoly::constant(p.dim(), Rational(emb.origin[i]));
    for (std::size_t j = 0; j < p.dim(); ++j) x += Rational(emb.basis[j][i]) * MultiPoly::variable(p.dim(), j);
    images.push_back(std::move(x));
  }
  return phi.substitute(images);
}

MatQ pull_back_inner_product(const LatticePolytope& p, const MatQ& q) {
  const std::size_t m = ambient_dim(p);
  if (q.rows() != m || q.cols() != m) throw InvalidArgument("inner product dimension mismatch");
  if (!is_spd(q)) throw InvalidArgument("inner product matrix is not symmetric positive definite");
  if (!p.embedding()) return q;
  std::vector<VecQ> cols;
  for (const auto& b : p.embedding()->basis) cols.push_back(to_q(b));
  const MatQ b = MatQ::from_columns(cols, m);
  return b.transpose() * q * b;
}

}  // namespace eml
