#include <gtest/gtest.h>

#include <random>

#include "emlattice/closed_forms.hpp"
#include "emlattice/expansion.hpp"
#include "emlattice/oracle.hpp"
#include "test_util.hpp"

using namespace eml;

namespace {

LatticePolytope build(const std::vector<VecZ>& v) { return LatticePolytope::build(v, true); }

std::vector<Rational> coeffs(const LatticePolytope& p, const MultiPoly& phi, std::optional<MatQ> q = std::nullopt) {
  return expansion(p, phi, q).coefficients;
}

const std::vector<VecZ> kSquare{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
const std::vector<VecZ> kSimplex2{{0, 0}, {1, 0}, {0, 1}};

}  // namespace

TEST(Expansion, UnitSquare) {
  const auto p = build(kSquare);
  ExpansionOptions opts;
  opts.n_max = 5;
  const auto r = expansion(p, MultiPoly::constant(2, 1), std::nullopt, opts);
  EXPECT_EQ(r.coefficients, (std::vector<Rational>{1, 2, 1, 0, 0, 0}));
  EXPECT_TRUE(r.terminated);
  EXPECT_FALSE(r.valuation_path);
  EXPECT_EQ(r.q, MatQ::identity(2));
}

TEST(Expansion, IntervalLinear) {
  const auto p = build({{0}, {1}});
  ExpansionOptions opts;
  opts.n_max = 2;
  const auto r = expansion(p, MultiPoly::variable(1, 0), std::nullopt, opts);
  EXPECT_EQ(r.coefficients, (std::vector<Rational>{make_rational(1, 2), make_rational(1, 2), 0}));
}

TEST(Expansion, StandardSimplex) {
  EXPECT_EQ(coeffs(build(kSimplex2), MultiPoly::constant(2, 1)),
            (std::vector<Rational>{make_rational(1, 2), make_rational(3, 2), 1}));
}

TEST(Expansion, Errors) {
  const auto p = build(kSquare);
  ExpansionOptions opts;
  opts.n_max = -1;
  EXPECT_THROW(expansion(p, MultiPoly::constant(2, 1), std::nullopt, opts), InvalidArgument);
  EXPECT_THROW(expansion(p, MultiPoly::constant(3, 1)), InvalidArgument);
  EXPECT_THROW(expansion(p, MultiPoly::constant(2, 1), MatQ{{1, 2}, {2, 1}}), InvalidArgument);
}

TEST(Expansion, TruncatedResult) {
  const auto p = build(kSquare);
  ExpansionOptions opts;
  opts.n_max = 1;
  const auto r = expansion(p, MultiPoly::constant(2, 1), std::nullopt, opts);
  EXPECT_FALSE(r.terminated);
  EXPECT_EQ(r.coefficient(1), 2);
  EXPECT_THROW(r.coefficient(2), InvalidArgument);
}

TEST(Expansion, PerFaceSumsAndSquareVertices) {
  const auto p = build(kSquare);
  const auto r = expansion(p, MultiPoly::constant(2, 1));
  std::vector<Rational> sums(r.coefficients.size(), Rational(0));
  for (const auto& [key, v] : r.per_face) sums[static_cast<std::size_t>(key.first)] += v;
  EXPECT_EQ(sums, r.coefficients);
  int vertex_rows = 0;
  for (const auto& [key, v] : r.per_face)
    if (key.first == 2 && v != 0) {
      EXPECT_EQ(p.face(key.second).dim, 0);
      EXPECT_EQ(v, make_rational(1, 4));
      ++vertex_rows;
    }
  EXPECT_EQ(vertex_rows, 4);
}

TEST(Expansion, MatchesOracleOnSuite) {
  auto all = fixtures::delzant_suite();
  for (const auto& n : fixtures::non_delzant_suite()) all.push_back(n);
  for (const auto& [name, verts] : all) {
    const auto p = build(verts);
    const int deg = p.dim() <= 2 ? 2 : 1;
    for (const auto& phi : fixtures::monomials_up_to(p.dim(), deg)) {
      const auto r = expansion(p, phi);
      for (const auto& [n, a] : coefficients_from_oracle(p, phi)) EXPECT_EQ(r.coefficient(n), a) << name << " n=" << n;
    }
  }
}

TEST(Expansion, NonPolynomialCombination) {
  const auto p = build({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  const auto phi = fixtures::poly(2, {{{2, 1}, 3}, {{0, 1}, -2}, {{0, 0}, 5}});
  const auto r = expansion(p, phi);
  for (const auto& [n, a] : coefficients_from_oracle(p, phi)) EXPECT_EQ(r.coefficient(n), a);
}

TEST(Expansion, EmbeddedPolytopes) {
  for (const auto& verts : std::vector<std::vector<VecZ>>{{{0, 0}, {2, 1}}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}},
                                                          {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {2, 2, 1}}}) {
    const auto p = build(verts);
    for (const auto& phi : fixtures::monomials_up_to(verts.front().size(), 2)) {
      const auto r = expansion(p, phi);
      for (const auto& [n, a] : coefficients_from_oracle(p, phi)) EXPECT_EQ(r.coefficient(n), a);
    }
  }
}

TEST(Expansion, QIndependence) {
  std::mt19937 rng(5);
  for (const auto& [name, verts] : fixtures::delzant_suite()) {
    const auto p = build(verts);
    const std::size_t m = p.dim();
    const MatQ q = m == 2 ? MatQ{{2, 1}, {1, 2}} : fixtures::random_spd(m, rng);
    for (const auto& phi : fixtures::monomials_up_to(m, 2)) EXPECT_EQ(coeffs(p, phi), coeffs(p, phi, q)) << name;
  }
  const auto thin = build({{0, 0}, {1, 0}, {1, 2}});
  for (const auto& phi : fixtures::monomials_up_to(2, 2))
    EXPECT_EQ(coeffs(thin, phi), coeffs(thin, phi, MatQ{{3, 1}, {1, 1}}));
}

TEST(Expansion, ValuationFlag) {
  EXPECT_TRUE(expansion(build({{0, 0}, {1, 0}, {1, 2}}), MultiPoly::constant(2, 1)).valuation_path);
  EXPECT_FALSE(expansion(build(kSimplex2), MultiPoly::constant(2, 1)).valuation_path);
}

TEST(Expansion, VolumeAndSurface) {
  for (const auto& [name, verts] : fixtures::delzant_suite()) {
    const auto p = build(verts);
    const auto one = MultiPoly::constant(p.dim(), 1);
    const auto r = expansion(p, one);
    Rational surface = 0;
    for (const auto& f : p.faces())
      if (f.dim + 1 == static_cast<int>(p.dim())) surface += integrate_poly_over_face(p, f, one);
    EXPECT_EQ(r.coefficient(0), integrate_poly_over_face(p, p.whole(), one)) << name;
    EXPECT_EQ(r.coefficient(1), surface / 2) << name;
  }
}

TEST(FaceOperator, DelzantCellsAreUnimodular) {
  for (const auto& [name, verts] : fixtures::delzant_suite()) {
    const auto p = build(verts);
    for (const auto& f : p.faces()) {
      if (f.id == p.whole().id) continue;
      PointedOperatorInfo info;
      face_operator(p, f, static_cast<int>(p.dim()) - f.dim, MatQ::identity(p.dim()), {}, &info);
      EXPECT_FALSE(info.valuation_path) << name;
    }
  }
}

TEST(ProjectedLattice, SquareEdge) {
  const auto basis = projected_lattice_basis(orth_project(MatQ::identity(2), {{1, 0}}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], (VecQ{0, 1}));
  const auto skew = projected_lattice_basis(orth_project(MatQ::identity(2), {{1, 1}}));
  ASSERT_EQ(skew.size(), 1u);
  EXPECT_EQ(abs(skew[0][0]), make_rational(1, 2));
}

TEST(ClosedForms, A0A1Examples) {
  EXPECT_EQ(closed_form_A0_A1(build(kSquare), MultiPoly::constant(2, 1)), std::make_pair(Rational(1), Rational(2)));
  EXPECT_EQ(closed_form_A0_A1(build(fixtures::delzant_suite()[4].vertices), MultiPoly::constant(3, 1)),
            std::make_pair(Rational(1), Rational(3)));
  EXPECT_EQ(closed_form_A0_A1(build(kSimplex2), MultiPoly::constant(2, 1)),
            std::make_pair(make_rational(1, 2), make_rational(3, 2)));
  EXPECT_THROW(closed_form_A0_A1(build({{0, 0}, {1, 0}, {1, 2}}), MultiPoly::constant(2, 1)), InvalidArgument);
}

TEST(ClosedForms, A2Examples) {
  EXPECT_EQ(closed_form_A2(build(kSquare), MultiPoly::constant(2, 1)), 1);
  EXPECT_EQ(closed_form_A2(build(fixtures::delzant_suite()[4].vertices), MultiPoly::constant(3, 1)), 3);
  EXPECT_EQ(closed_form_A2(build(kSimplex2), MultiPoly::constant(2, 1)), 1);
  EXPECT_THROW(closed_form_A2(build(kSquare), MultiPoly::constant(2, 1), MatQ{{2, 1}, {1, 2}}), InvalidArgument);
  EXPECT_THROW(closed_form_A2(build({{0, 0}, {1, 0}, {1, 2}}), MultiPoly::constant(2, 1)), InvalidArgument);
}

TEST(ClosedForms, AgreeWithEngine) {
  for (const auto& [name, verts] : fixtures::delzant_suite()) {
    const auto p = build(verts);
    for (const auto& phi : fixtures::monomials_up_to(p.dim(), 2)) {
      const auto r = expansion(p, phi);
      const auto [a0, a1] = closed_form_A0_A1(p, phi);
      EXPECT_EQ(a0, r.coefficient(0)) << name;
      EXPECT_EQ(a1, r.coefficient(1)) << name;
      EXPECT_EQ(closed_form_A2(p, phi), r.coefficient(2)) << name;
    }
  }
}

TEST(ClosedForms, TwoDimensional) {
  const auto sq = build(kSquare);
  EXPECT_EQ(closed_form_2d(sq, MultiPoly::constant(2, 1), std::nullopt, 2), 1);
  const auto xy = fixtures::poly(2, {{{1, 1}, 1}});
  EXPECT_EQ(closed_form_2d(sq, xy, std::nullopt, 2), expansion(sq, xy).coefficient(2));
  for (const auto& [name, verts] : fixtures::delzant_suite()) {
    const auto p = build(verts);
    if (p.dim() != 2) continue;
    for (const MatQ& q : {MatQ::identity(2), MatQ{{2, 1}, {1, 2}}})
      for (const auto& phi : fixtures::monomials_up_to(2, 3)) {
        ExpansionOptions opts;
        opts.n_max = 5;
        const auto r = expansion(p, phi, q, opts);
        for (int n = 2; n <= 5; ++n) EXPECT_EQ(closed_form_2d(p, phi, q, n), r.coefficient(n)) << name << " " << n;
      }
  }
  EXPECT_THROW(closed_form_2d(sq, MultiPoly::constant(2, 1), std::nullopt, 1), InvalidArgument);
  EXPECT_THROW(closed_form_2d(build({{0}, {1}}), MultiPoly::constant(1, 1), std::nullopt, 2), InvalidArgument);
  EXPECT_THROW(closed_form_2d(build({{0, 0}, {1, 0}, {1, 2}}), MultiPoly::constant(2, 1), std::nullopt, 2),
               InvalidArgument);
}
