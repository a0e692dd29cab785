#include <gtest/gtest.h>

#include <algorithm>

#include "emlattice/fourier_motzkin.hpp"
#include "emlattice/polytope.hpp"
#include "test_util.hpp"

using namespace eml;

namespace {

LatticePolytope build(const std::vector<VecZ>& v) { return LatticePolytope::build(v); }

int count_dim(const LatticePolytope& p, int d) {
  return static_cast<int>(std::count_if(p.faces().begin(), p.faces().end(), [d](const Face& f) { return f.dim == d; }));
}

const Face& vertex_face(const LatticePolytope& p, const VecZ& v) {
  const auto it = std::find(p.vertices().begin(), p.vertices().end(), v);
  return p.face(p.find_face({static_cast<int>(it - p.vertices().begin())}));
}

const Face& face_of(const LatticePolytope& p, const std::vector<VecZ>& vs) {
  std::vector<int> ids;
  for (const auto& v : vs)
    ids.push_back(static_cast<int>(std::find(p.vertices().begin(), p.vertices().end(), v) - p.vertices().begin()));
  std::sort(ids.begin(), ids.end());
  return p.face(p.find_face(ids));
}

std::vector<VecQ> sorted(std::vector<VecQ> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Polytope, UnitSquare) {
  const auto p = build({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_EQ(p.facets().size(), 4u);
  EXPECT_EQ(count_dim(p, 1), 4);
  EXPECT_EQ(count_dim(p, 0), 4);
}

TEST(Polytope, StandardSimplexFacets) {
  const auto p = build({{0, 0}, {1, 0}, {0, 1}});
  std::vector<std::pair<VecZ, Integer>> facets;
  for (const auto& f : p.facets()) facets.emplace_back(f.normal, f.offset);
  std::sort(facets.begin(), facets.end());
  const std::vector<std::pair<VecZ, Integer>> expected = {{{-1, -1}, -1}, {{0, 1}, 0}, {{1, 0}, 0}};
  EXPECT_EQ(facets, expected);
}

TEST(Polytope, Octahedron) {
  const auto p = build({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  EXPECT_EQ(p.facets().size(), 8u);
  for (const auto& f : p.faces())
    if (f.dim == 0) EXPECT_EQ(f.facets.size(), 4u);
}

TEST(Polytope, DuplicatesAndInteriorPoints) {
  const auto p = build({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {0, 0}});
  EXPECT_EQ(p.vertices().size(), 4u);
}

TEST(Polytope, LowerDimensionalNeedsFlag) {
  EXPECT_THROW(LatticePolytope::build({{0, 0}, {1, 1}}), InvalidArgument);
  const auto p = LatticePolytope::build({{0, 0}, {2, 2}}, true);
  EXPECT_EQ(p.dim(), 1u);
  EXPECT_EQ(ambient_dim(p), 2u);
  ASSERT_TRUE(p.embedding().has_value());
  // Lattice length 2 along (1,1).
  EXPECT_EQ(integrate_poly_over_face(p, p.whole(), MultiPoly::constant(1, 1)), 2);
}

TEST(Polytope, EulerRelationAndFacetNormals) {
  auto all = fixtures::delzant_suite();
  for (const auto& n : fixtures::non_delzant_suite()) all.push_back(n);
  for (const auto& [name, verts] : all) {
    const auto p = build(verts);
    long chi = 0;
    for (const auto& f : p.faces()) chi += f.dim % 2 == 0 ? 1 : -1;
    // Boundary complex plus the polytope itself: Σ (-1)^dim = 1.
    EXPECT_EQ(chi, 1) << name;
    for (std::size_t g = 0; g < p.facets().size(); ++g) {
      const auto& facet = p.facets()[g];
      Integer gcd = 0;
      for (const auto& a : facet.normal) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), Integer(abs(a)).get_mpz_t());
      EXPECT_EQ(gcd, 1) << name;
      for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        const Rational s = dot(to_q(facet.normal), to_q(p.vertices()[v]));
        const bool on = std::binary_search(facet.vertices.begin(), facet.vertices.end(), static_cast<int>(v));
        if (on) EXPECT_EQ(s, Rational(facet.offset)) << name;
        else EXPECT_GT(s, Rational(facet.offset)) << name;
      }
    }
    for (const auto& f : p.faces()) {
      EXPECT_EQ(f.lattice_basis.size(), static_cast<std::size_t>(f.dim));
      if (f.dim > 0) EXPECT_EQ(hnf_lattice_basis(f.lattice_basis).index, 1);
    }
  }
}

TEST(TangentCone, Examples) {
  const auto sq = build({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto gens = tangent_cone(sq, vertex_face(sq, {0, 0}));
  std::sort(gens.begin(), gens.end());
  EXPECT_EQ(gens, (std::vector<VecZ>{{0, 1}, {1, 0}}));
  gens = tangent_cone(sq, face_of(sq, {{0, 0}, {1, 0}}));
  std::sort(gens.begin(), gens.end());
  EXPECT_EQ(gens, (std::vector<VecZ>{{-1, 0}, {0, 1}, {1, 0}}));
  gens = tangent_cone(sq, sq.whole());
  EXPECT_EQ(rank(MatQ::from_rows(std::vector<VecQ>{to_q(gens[0]), to_q(gens[1])}, 2)), 2u);
  EXPECT_FALSE(is_pointed(std::vector<VecQ>(
      [&] {
        std::vector<VecQ> g;
        for (const auto& x : gens) g.push_back(to_q(x));
        return g;
      }())));
}

TEST(TransverseCone, Examples) {
  const auto sq = build({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto q = MatQ::identity(2);
  EXPECT_EQ(sorted(transverse_cone(sq, vertex_face(sq, {0, 0}), q).generators), (std::vector<VecQ>{{0, 1}, {1, 0}}));
  EXPECT_EQ(transverse_cone(sq, face_of(sq, {{0, 0}, {1, 0}}), q).generators, (std::vector<VecQ>{{0, 1}}));
  const auto tri = build({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(sorted(transverse_cone(tri, vertex_face(tri, {1, 0}), q).generators),
            (std::vector<VecQ>{{-1, 0}, {-1, 1}}));
  EXPECT_THROW(transverse_cone(sq, sq.whole(), q), InvalidArgument);
}

TEST(TransverseCone, GeneratorsLieInCarrier) {
  std::mt19937 rng(5);
  for (const auto& [name, verts] : fixtures::delzant_suite()) {
    const auto p = build(verts);
    const MatQ q = fixtures::random_spd(p.dim(), rng);
    for (const auto& f : p.faces()) {
      if (f.id == p.whole().id) continue;
      const auto t = transverse_cone(p, f, q);
      for (const auto& g : t.generators)
        for (const auto& b : t.face_space) EXPECT_EQ(qdot(q, g, b), 0) << name;
      EXPECT_TRUE(is_pointed(t.generators)) << name;
    }
  }
}

TEST(Delzant, Examples) {
  EXPECT_TRUE(is_delzant(build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})));
  const auto thin = build({{0, 0}, {1, 0}, {1, 2}});
  const auto rep = delzant_report(thin);
  EXPECT_FALSE(rep.delzant);
  const auto v0 = std::find(thin.vertices().begin(), thin.vertices().end(), VecZ{0, 0}) - thin.vertices().begin();
  EXPECT_EQ(rep.abs_det[static_cast<std::size_t>(v0)], 2);
  const auto oct = build({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  const auto orep = delzant_report(oct);
  EXPECT_FALSE(orep.delzant);
  for (int c : orep.edge_count) EXPECT_EQ(c, 4);
  for (const auto& [name, verts] : fixtures::delzant_suite()) EXPECT_TRUE(is_delzant(build(verts))) << name;
}

TEST(Integration, Examples) {
  const auto sq = build({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(integrate_poly_over_face(sq, sq.whole(), MultiPoly::constant(2, 1)), 1);
  const auto rect = build({{0, 0}, {2, 0}, {0, 1}, {2, 1}});
  const auto x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  EXPECT_EQ(integrate_poly_over_face(rect, face_of(rect, {{0, 0}, {2, 0}}), x1), 2);
  const auto tri = build({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(integrate_poly_over_face(tri, tri.whole(), x1 * x2), make_rational(1, 24));
  EXPECT_EQ(integrate_poly_over_face(tri, vertex_face(tri, {1, 0}), x1 + x2), 1);
  // The hypotenuse has lattice length 1.
  EXPECT_EQ(integrate_poly_over_face(tri, face_of(tri, {{1, 0}, {0, 1}}), MultiPoly::constant(2, 1)), 1);
}

TEST(Integration, FanIndependent) {
  auto all = fixtures::delzant_suite();
  for (const auto& n : fixtures::non_delzant_suite()) all.push_back(n);
  for (const auto& [name, verts] : all) {
    const auto p = build(verts);
    for (const auto& phi : fixtures::monomials_up_to(p.dim(), 2))
      for (const auto& f : p.faces())
        EXPECT_EQ(integrate_poly_over_face(p, f, phi, ApexRule::Reference),
                  integrate_poly_over_face(p, f, phi, ApexRule::Largest))
            << name;
  }
}

TEST(EulerBrion, Windows) {
  EXPECT_TRUE(euler_brion_window_check(build({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 1, -1, 2));
  EXPECT_TRUE(euler_brion_window_check(build({{0, 0}, {1, 0}, {0, 1}}), 2, -1, 3));
  EXPECT_TRUE(euler_brion_window_check(build({{0}, {1}}), 3, -2, 5));
}

TEST(FourierMotzkin, Feasibility) {
  EXPECT_TRUE(fm_feasible({{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -1}}, 2));
  EXPECT_FALSE(fm_feasible({{{1, 0}, 1}, {{-1, 0}, 0}}, 2));
  EXPECT_TRUE(is_pointed({{1, 0}, {1, 2}}));
  EXPECT_FALSE(is_pointed({{1, 0}, {-1, 0}, {0, 1}}));
  EXPECT_TRUE(outside_cone({-1, 1}, {{1, 0}, {0, 1}}));
  EXPECT_FALSE(outside_cone({1, 1}, {{1, 0}, {0, 1}}));
}

TEST(PullBack, EmbeddedTriangle) {
  const auto p = LatticePolytope::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 1}}, true);
  EXPECT_EQ(p.dim(), 2u);
  const auto phi = MultiPoly::variable(3, 2);
  const auto f = pull_back(p, phi);
  EXPECT_EQ(f.nvars(), 2u);
  // z vanishes on the vertices (0,0,0), (1,0,0) and equals 1 at (0,1,1).
  const auto verts = p.ambient_vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) EXPECT_EQ(f.evaluate(to_q(p.vertices()[i])), Rational(verts[i][2]));
  EXPECT_EQ(pull_back_inner_product(p, MatQ::identity(3)).rows(), 2u);
}
