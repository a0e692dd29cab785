#include "emlattice/subdivision.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "emlattice/combinatorics.hpp"
#include "emlattice/cone_calculus.hpp"
#include "emlattice/fourier_motzkin.hpp"

namespace eml {

namespace {

std::vector<VecQ> to_q_all(const std::vector<VecZ>& v) {
  std::vector<VecQ> out;
  for (const auto& x : v) out.push_back(to_q(x));
  return out;
}


// Coordinates with respect to a basis of span ∩ Z^d, so cones become full-dimensional.
struct SaturatedFrame {
  std::vector<VecZ> basis;

  explicit SaturatedFrame(const std::vector<VecZ>& gens) {
    if (gens.empty()) return;
    basis = saturated_basis(to_q_all(gens), gens.front().size());
  }
  std::size_t dim() const { return basis.size(); }
  VecZ to_frame(const VecZ& v) const { return to_z(coordinates_in(to_q_all(basis), to_q(v))); }
  VecZ from_frame(const VecZ& c) const {
    VecZ v(basis.front().size());
    for (std::size_t j = 0; j < c.size(); ++j)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[j] * basis[j][i];
    return v;
  }
  std::vector<ConeCell> cells_from_frame(const std::vector<ConeCell>& cells) const {
    std::vector<ConeCell> out;
    for (const auto& c : cells) {
      ConeCell m;
      for (const auto& g : c) m.push_back(from_frame(g));
      out.push_back(std::move(m));
    }
    return out;
  }
};

Integer abs_det(const ConeCell& cell) { return to_integer(abs(det(MatQ::from_columns(to_q_all(cell), cell.size())))); }

// Full-dimensional pulling triangulation over the face lattice of the cone.
std::vector<ConeCell> pulling_triangulation(const std::vector<VecZ>& rays, std::size_t k) {
  const int nr = static_cast<int>(rays.size());
  if (static_cast<std::size_t>(nr) == k) return {rays};
  const auto rq = to_q_all(rays);

  std::set<std::vector<int>> faces;
  std::vector<std::vector<int>> facets;
  for_each_k_subset(nr, static_cast<int>(k) - 1, [&](const std::vector<int>& s) {
    std::vector<VecQ> rows;
    for (int i : s) rows.push_back(rq[static_cast<std::size_t>(i)]);
    MatQ a(rows.size(), k);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = rows[i][j];
    auto ns = nullspace(a);
    if (ns.size() != 1) return;
    bool pos = false, neg = false;
    std::vector<int> tight;
    for (int i = 0; i < nr; ++i) {
      const Rational v = dot(ns[0], rq[static_cast<std::size_t>(i)]);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
      if (v == 0) tight.push_back(i);
    }
    if (pos && neg) return;
    if (faces.insert(tight).second) facets.push_back(tight);
  });
  std::vector<std::vector<int>> work(facets.begin(), facets.end());
  while (!work.empty()) {
    auto s = std::move(work.back());
    work.pop_back();
    for (const auto& f : facets) {
      std::vector<int> inter;
      std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(inter));
      if (faces.insert(inter).second) work.push_back(std::move(inter));
    }
  }
  std::vector<int> all(static_cast<std::size_t>(nr));
  for (int i = 0; i < nr; ++i) all[static_cast<std::size_t>(i)] = i;
  faces.insert(all);

  std::map<std::vector<int>, std::size_t> face_dim;
  for (const auto& f : faces) {
    std::vector<VecQ> rows;
    for (int i : f) rows.push_back(rq[static_cast<std::size_t>(i)]);
    face_dim[f] = rows.empty() ? 0 : rank(MatQ::from_rows(rows, k));
  }

  std::function<std::vector<std::vector<int>>(const std::vector<int>&)> pull = [&](const std::vector<int>& f) {
    const std::size_t d = face_dim.at(f);
    if (f.size() == d) return std::vector<std::vector<int>>{f};
    const int apex = f.front();  // ray indices follow the pulling order
    std::vector<std::vector<int>> out;
    for (const auto& [g, gd] : face_dim) {
      if (gd + 1 != d || std::binary_search(g.begin(), g.end(), apex)) continue;
      if (!std::includes(f.begin(), f.end(), g.begin(), g.end())) continue;
      for (auto s : pull(g)) {
        s.insert(s.begin(), apex);
        out.push_back(std::move(s));
      }
    }
    return out;
  };

  std::vector<ConeCell> cells;
  for (const auto& s : pull(all)) {
    ConeCell c;
    for (int i : s) c.push_back(rays[static_cast<std::size_t>(i)]);
    cells.push_back(std::move(c));
  }
  return cells;
}

VecZ choose_stellar_point(const ConeCell& cell, StellarRule rule) {
  const std::size_t k = cell.size();
  const MatQ g = MatQ::from_columns(to_q_all(cell), k);
  const MatQ ginv = inverse(g);
  const auto h = hermite_rows(cell);
  std::vector<long> bound(k);
  for (std::size_t i = 0; i < k; ++i) bound[i] = h[i][i].get_si();

  bool have = false;
  VecZ best;
  Rational best_score;
  std::vector<long> z(k, 0);
  while (true) {
    VecQ lambda = ginv * [&] {
      VecQ v(k);
      for (std::size_t i = 0; i < k; ++i) v[i] = z[i];
      return v;
    }();
    for (auto& l : lambda) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
      l -= fl;
    }
    if (!is_zero(lambda)) {
      VecZ w = to_z(g * lambda);
      Integer gg = 0;
      for (const auto& x : w) gg = gcd(gg, x);
      if (gg == 1) {
        Rational score = rule == StellarRule::MinMaxBarycentric ? *std::max_element(lambda.begin(), lambda.end())
                                                                : std::accumulate(lambda.begin(), lambda.end(), Rational(0));
        bool better = !have;
        if (have && rule == StellarRule::MinMaxBarycentric) better = score < best_score || (score == best_score && w < best);
        if (have && rule == StellarRule::MinSumBarycentric) better = score < best_score || (score == best_score && w > best);
        if (better) {
          have = true;
          best = w;
          best_score = score;
        }
      }
    }
    std::size_t i = 0;
    while (i < k && z[i] == bound[i] - 1) z[i++] = 0;
    if (i == k) break;
    ++z[i];
  }
  if (!have) throw InternalError("no stellar point in a non-unimodular cone");
  return best;
}

std::vector<ConeCell> unimodular_fan_full(std::vector<ConeCell> cells, const SubdivisionOptions& opts) {
  while (true) {
    auto it = std::find_if(cells.begin(), cells.end(), [](const ConeCell& c) { return abs_det(c) > 1; });
    if (it == cells.end()) return cells;
    const VecZ w = choose_stellar_point(*it, opts.stellar);
    const VecQ wq = to_q(w);
    std::vector<ConeCell> next;
    for (const auto& c : cells) {
      const VecQ lambda = solve(MatQ::from_columns(to_q_all(c), c.size()), wq);
      const bool inside = std::all_of(lambda.begin(), lambda.end(), [](const Rational& l) { return l >= 0; });
      if (!inside) {
        next.push_back(c);
        continue;
      }
      const Integer old_index = abs_det(c);
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (lambda[j] == 0) continue;
        ConeCell nc = c;
        nc[j] = w;
        if (abs_det(nc) >= old_index) throw InternalError("stellar subdivision did not decrease the index");
        next.push_back(std::move(nc));
      }
    }
    cells = std::move(next);
  }
}

bool meet_in_common_face(const ConeCell& a, const ConeCell& b) {
  std::vector<LinearInequality> sys;
  const std::size_t k = a.front().size();
  auto has = [](const ConeCell& c, const VecZ& g) { return std::find(c.begin(), c.end(), g) != c.end(); };
  for (const auto& g : a) {
    const VecQ gq = to_q(g);
    if (has(b, g)) {
      sys.push_back({gq, Rational(0)});
      sys.push_back({scale(-1, gq), Rational(0)});
    } else {
      sys.push_back({gq, Rational(1)});
    }
  }
  for (const auto& g : b)
    if (!has(a, g)) sys.push_back({scale(-1, to_q(g)), Rational(1)});
  return fm_feasible(std::move(sys), k);
}

}  // namespace

std::size_t PointedCone::dim() const {
  if (generators.empty()) return 0;
  return rank(MatQ::from_rows(to_q_all(generators), ambient_dim()));
}

std::vector<VecZ> extreme_rays(const PointedCone& c) {
  std::vector<VecZ> prim;
  for (const auto& g : c.generators) {
    if (is_zero(to_q(g))) continue;
    prim.push_back(primitive(to_q(g)));
  }
  std::sort(prim.begin(), prim.end());
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
  if (!is_pointed(to_q_all(prim))) throw InvalidArgument("cone is not pointed");
  std::vector<VecZ> rays;
  for (std::size_t i = 0; i < prim.size(); ++i) {
    std::vector<VecQ> others;
    for (std::size_t j = 0; j < prim.size(); ++j)
      if (j != i) others.push_back(to_q(prim[j]));
    if (outside_cone(to_q(prim[i]), others)) rays.push_back(prim[i]);
  }
  return rays;
}

Integer cone_index(const ConeCell& generators) { return hnf_lattice_basis(generators).index; }

bool is_unimodular(const ConeCell& generators) {
  if (generators.empty()) return true;
  if (rank(MatQ::from_rows(to_q_all(generators), generators.front().size())) != generators.size()) return false;
  return cone_index(generators) == 1;
}

std::vector<ConeCell> triangulate_cone(const PointedCone& c, const SubdivisionOptions& opts) {
  auto rays = extreme_rays(c);
  if (rays.empty()) return {ConeCell{}};
  const SaturatedFrame frame(rays);
  std::vector<VecZ> local;
  for (const auto& r : rays) local.push_back(frame.to_frame(r));
  if (opts.rotate_pivot && local.size() > 1) std::rotate(local.begin(), local.begin() + 1, local.end());
  return frame.cells_from_frame(pulling_triangulation(local, frame.dim()));
}

std::vector<ConeCell> unimodular_fan(std::vector<ConeCell> cells, const SubdivisionOptions& opts) {
  if (cells.empty()) return cells;
  std::vector<VecZ> all;
  for (const auto& c : cells) all.insert(all.end(), c.begin(), c.end());
  if (all.empty()) return cells;
  const SaturatedFrame frame(all);
  std::vector<ConeCell> local;
  for (const auto& c : cells) {
    if (c.size() != frame.dim()) throw InvalidArgument("fan cells must be full-dimensional simplicial cones");
    ConeCell l;
    for (const auto& g : c) l.push_back(frame.to_frame(g));
    if (abs_det(l) == 0) throw InvalidArgument("fan cell is degenerate");
    local.push_back(std::move(l));
  }
  return frame.cells_from_frame(unimodular_fan_full(std::move(local), opts));
}

std::vector<ConeCell> unimodularize(const ConeCell& simplicial, const SubdivisionOptions& opts) {
  return unimodular_fan({simplicial}, opts);
}

std::vector<SignedCell> signed_coefficients(const std::vector<ConeCell>& maximal_cells) {
  if (maximal_cells.empty()) return {};
  std::vector<VecZ> all;
  for (const auto& c : maximal_cells) all.insert(all.end(), c.begin(), c.end());
  if (all.empty()) return {SignedCell{{}, 1, 0}};
  const SaturatedFrame frame(all);
  const std::size_t k = frame.dim();
  std::vector<ConeCell> local;
  for (const auto& c : maximal_cells) {
    if (c.size() != k) throw InvalidArgument("maximal cells must be full-dimensional simplicial cones");
    ConeCell l;
    for (const auto& g : c) l.push_back(frame.to_frame(g));
    std::sort(l.begin(), l.end());
    if (abs_det(l) == 0) throw InvalidArgument("maximal cell is degenerate");
    local.push_back(std::move(l));
  }
  for (std::size_t a = 0; a < local.size(); ++a)
    for (std::size_t b = a + 1; b < local.size(); ++b)
      if (!meet_in_common_face(local[a], local[b])) throw InvalidArgument("cells do not form a polyhedral complex");

  std::set<ConeCell> faces;
  for (const auto& c : local) {
    const int n = static_cast<int>(c.size());
    for (int size = 0; size <= n; ++size)
      for_each_k_subset(n, size, [&](const std::vector<int>& s) {
        ConeCell f;
        for (int i : s) f.push_back(c[static_cast<std::size_t>(i)]);
        faces.insert(std::move(f));
      });
  }
  std::vector<ConeCell> ordered(faces.begin(), faces.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ConeCell& x, const ConeCell& y) { return x.size() > y.size(); });
  std::map<ConeCell, Integer> r;
  for (const auto& tau : ordered) {
    Integer sum = 0;
    for (const auto& [sigma, rs] : r)
      if (sigma.size() > tau.size() && std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end())) sum += rs;
    r[tau] = 1 - sum;
  }
  std::vector<SignedCell> out;
  for (const auto& tau : ordered) {
    ConeCell g;
    for (const auto& x : tau) g.push_back(frame.from_frame(x));
    out.push_back({std::move(g), r.at(tau), static_cast<int>(tau.size())});
  }
  return out;
}

std::vector<SignedCell> subdivide_cone(const PointedCone& c, const SubdivisionOptions& opts) {
  return signed_coefficients(unimodular_fan(triangulate_cone(c, opts), opts));
}

DiffOp bv_op_pointed(const PointedCone& c, int n, const MatQ& q, const SubdivisionOptions& opts,
                     PointedOperatorInfo* info) {
  const std::size_t d = q.rows();
  if (c.ambient_dim() != d && !c.generators.empty()) throw InvalidArgument("cone and inner product dimensions differ");
  const auto rays = extreme_rays(c);
  const std::size_t k = rays.empty() ? 0 : rank(MatQ::from_rows(to_q_all(rays), d));
  if (n < static_cast<int>(k)) throw InvalidArgument("operator index below the cone dimension");

  // Directions Q-orthogonal to L(C): the operator only differentiates along L(C).
  std::vector<VecQ> carrier;
  if (k > 0 && k < d) {
    MatQ a(rays.size(), d);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const VecQ row = q * to_q(rays[i]);
      for (std::size_t j = 0; j < d; ++j) a(i, j) = row[j];
    }
    carrier = nullspace(a);
  } else if (k == 0) {
    for (std::size_t j = 0; j < d; ++j) {
      VecQ e(d);
      e[j] = 1;
      carrier.push_back(std::move(e));
    }
  }

  PointedOperatorInfo local_info;
  MultiPoly symbol(d);
  if (k == 0) {
    if (n == 0) symbol = MultiPoly::constant(d, 1);
    local_info.cells = 1;
  } else if (rays.size() == k && cone_index(rays) == 1) {
    IbpFamily fam(UniCone{to_q_all(rays)}, q);
    symbol = fam.lift(bv_vertex_symbol_y(fam, n));
    local_info.cells = 1;
  } else {
    local_info.valuation_path = true;
    const auto cells = subdivide_cone(PointedCone{rays}, opts);
    for (const auto& cell : cells) {
      if (cell.r == 0) continue;
      ++local_info.cells;
      const int sub_n = n - static_cast<int>(k) + cell.dim;
      if (cell.dim == 0) {
        if (sub_n == 0) symbol += MultiPoly::constant(d, Rational(cell.r));
        continue;
      }
      IbpFamily fam(UniCone{to_q_all(cell.generators)}, q);
      MultiPoly s = fam.lift(bv_vertex_symbol_y(fam, sub_n));
      s *= Rational(cell.r);
      symbol += s;
    }
  }
  if (info) *info = local_info;
  return DiffOp{d, std::move(symbol), n - static_cast<int>(k), std::move(carrier)};
}

}  // namespace eml
