#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "emlattice/cli.hpp"
#include "emlattice/expansion.hpp"
#include "emlattice/oracle.hpp"
#include "emlattice/serialize.hpp"
#include "test_util.hpp"

using namespace eml;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kSquare = "[[0,0],[1,0],[0,1],[1,1]]";
const std::string kOctahedron = "[[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]";

}  // namespace

TEST(Cli, ExpandSquare) {
  const auto r = run({"expand", "--vertices", kSquare});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "n=0: 1\nn=1: 2\nn=2: 1\n");
}

TEST(Cli, ExpandPerFace) {
  const auto r = run({"expand", "--vertices", kSquare, "--per-face"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  int vertex_rows = 0;
  while (std::getline(lines, line))
    if (line.find(" dim 0 ") != std::string::npos) {
      EXPECT_EQ(line.substr(line.size() - 5), ": 1/4");
      ++vertex_rows;
    }
  EXPECT_EQ(vertex_rows, 4);
}

TEST(Cli, ExpandJsonAndPhi) {
  const auto r = run({"expand", "--vertices", "[[0],[1]]", "--phi", R"([{"coeff":"1","exps":[1]}])", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto res = decode<ExpansionResult>(Json::parse(r.out));
  EXPECT_EQ(res.coefficients, (std::vector<Rational>{make_rational(1, 2), make_rational(1, 2), 0}));
}

TEST(Cli, InvalidInput) {
  const auto bad = run({"expand", "--vertices", "[[0,0],[1,0],[0,1.5]]"});
  EXPECT_EQ(bad.code, kExitInvalid);
  EXPECT_NE(bad.err.find("vertices must be integers"), std::string::npos);
  EXPECT_EQ(run({"expand", "--vertices", "[[0,0],[1,0"}).code, kExitInvalid);
  EXPECT_EQ(run({"expand", "--vertices", kSquare, "--Q", "[[1,2],[2,1]]"}).code, kExitInvalid);
  EXPECT_EQ(run({"expand", "--vertices", kSquare, "--phi", R"([{"coeff":"1","exps":[1]}])"}).code, kExitInvalid);
  EXPECT_EQ(run({"expand"}).code, kExitInvalid);
  EXPECT_EQ(run({"no-such-command"}).code, kExitInvalid);
}

TEST(Cli, Verify) {
  const auto sq = run({"verify", "--vertices", kSquare});
  EXPECT_EQ(sq.code, kExitOk);
  EXPECT_EQ(sq.out, "PASS\n");
  const auto oct = run({"verify", "--vertices", kOctahedron});
  EXPECT_EQ(oct.code, kExitOk);
  EXPECT_EQ(oct.out, "PASS (valuation path used)\n");
  const auto skew = run({"verify", "--vertices", "[[0,0],[1,0],[1,2]]", "--Q", "[[2,1],[1,2]]"});
  EXPECT_EQ(skew.code, kExitOk);
}

TEST(Cli, Budget) {
  const auto r = run({"verify", "--vertices", kOctahedron, "--budget", "10"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_NE(r.err.find("desk-scale exceeded"), std::string::npos);
}

TEST(Cli, EhrhartAndRiemann) {
  const auto cube = run({"ehrhart", "--vertices", "[[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1],[1,1,1]]"});
  EXPECT_EQ(cube.code, kExitOk);
  EXPECT_EQ(cube.out, "coefficients of N^0..N^3: 1 3 3 1\n");
  const auto rs = run({"riemann-sum", "--vertices", kSquare, "--N", "2"});
  EXPECT_EQ(rs.out, "9/4\n");
  EXPECT_EQ(run({"riemann-sum", "--vertices", kSquare}).code, kExitInvalid);
}

TEST(Cli, Todd) {
  const auto r = run({"todd", "--nmax", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1, -1/2, 1/6, 0, -1/30\n");
  const auto t = run({"twisted-todd", "--q", "2", "--nmax", "2"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_NE(t.out.find("b_1 = 1/2"), std::string::npos);
}

TEST(Cli, SubdivideCone) {
  const auto r = run({"subdivide-cone", "--generators", "[[1,0],[1,2]]"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("r=1 dim=2"), std::string::npos);
  EXPECT_NE(r.out.find("r=-1 dim=1 [(1,1)]"), std::string::npos);
  const auto j = run({"subdivide-cone", "--generators", "[[1,0],[1,2]]", "--format", "json"});
  ASSERT_EQ(j.code, kExitOk);
  const auto cells = decode<std::vector<SignedCell>>(Json::parse(j.out).at("cells"));
  EXPECT_EQ(std::count_if(cells.begin(), cells.end(), [](const SignedCell& c) { return c.r != 0; }), 3);
  EXPECT_EQ(run({"subdivide-cone", "--generators", "[[1,0],[-1,0]]"}).code, kExitInvalid);
}

TEST(Cli, Szasz) {
  const auto r = run({"szasz", "--x", "[\"1/2\",\"3/4\"]", "--N", "4", "--phi", R"([{"coeff":"1","exps":[2,1]}])"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"expand", "--vertices", kOctahedron, "--per-face", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CompareCoefficients, DetectsPerturbation) {
  const auto p = LatticePolytope::build({{0, 0}, {2, 0}, {0, 1}, {2, 1}});
  const auto phi = fixtures::poly(2, {{{1, 1}, 1}});
  const auto oracle = coefficients_from_oracle(p, phi);
  std::vector<std::pair<int, Rational>> engine;
  const auto r = expansion(p, phi);
  for (std::size_t n = 0; n < r.coefficients.size(); ++n) engine.emplace_back(static_cast<int>(n), r.coefficients[n]);
  EXPECT_TRUE(compare_coefficients(engine, oracle).pass);
  engine[2].second += make_rational(1, 1000);
  const auto report = compare_coefficients(engine, oracle);
  EXPECT_FALSE(report.pass);
  ASSERT_EQ(report.diff.size(), 1u);
  EXPECT_EQ(report.diff[0].rfind("n=2:", 0), 0u);
  engine.pop_back();
  engine.pop_back();
  EXPECT_FALSE(compare_coefficients(engine, oracle).pass);
}

TEST(Serialize, RoundTrips) {
  const Rational x = make_rational(-7, 3);
  EXPECT_EQ(decode<Rational>(encode(x)), x);
  const VecZ vz{1, -2, 3};
  EXPECT_EQ(decode<VecZ>(encode(vz)), vz);
  const VecQ vq{make_rational(1, 2), 0};
  EXPECT_EQ(decode<VecQ>(encode(vq)), vq);
  const MatQ m{{1, make_rational(1, 3)}, {make_rational(1, 3), 2}};
  EXPECT_EQ(decode<MatQ>(encode(m)), m);
  const auto phi = fixtures::poly(2, {{{2, 1}, 3}, {{0, 0}, -1}});
  EXPECT_EQ(decode<MultiPoly>(encode(phi)), phi);
  const CycloElem w = CycloElem::omega(5).pow(3) + CycloElem(5, make_rational(1, 2));
  EXPECT_EQ(decode<CycloElem>(encode(w)), w);
  const std::vector<CycloElem> ws{w, CycloElem::omega(5)};
  EXPECT_EQ(decode<std::vector<CycloElem>>(encode(ws)), ws);

  const auto p = LatticePolytope::build({{0, 0}, {1, 0}, {1, 2}});
  const auto r = expansion(p, phi);
  const auto back = decode<ExpansionResult>(encode(r));
  EXPECT_EQ(back.coefficients, r.coefficients);
  EXPECT_EQ(back.per_face, r.per_face);
  EXPECT_EQ(back.q, r.q);
  EXPECT_EQ(back.n_max, r.n_max);
  EXPECT_EQ(back.valuation_path, r.valuation_path);
  EXPECT_EQ(back.terminated, r.terminated);

  const auto e = weighted_ehrhart(p, phi);
  const auto eb = decode<WeightedEhrhart>(encode(e));
  EXPECT_EQ(eb.coeffs, e.coeffs);
  EXPECT_EQ(eb.dim, e.dim);
  EXPECT_EQ(eb.degree, e.degree);

  const auto cells = subdivide_cone(PointedCone{{{1, 0}, {1, 3}}});
  const auto cb = decode<std::vector<SignedCell>>(encode(cells));
  ASSERT_EQ(cb.size(), cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    EXPECT_EQ(cb[i].generators, cells[i].generators);
    EXPECT_EQ(cb[i].r, cells[i].r);
    EXPECT_EQ(cb[i].dim, cells[i].dim);
  }

  const std::vector<std::pair<int, Rational>> list{{0, 1}, {2, make_rational(1, 12)}};
  EXPECT_EQ((decode<std::vector<std::pair<int, Rational>>>(encode(list))), list);
}

TEST(Serialize, RejectsMalformed) {
  EXPECT_THROW(decode<Rational>(Json("1/0")), InvalidArgument);
  EXPECT_THROW(decode<MultiPoly>(Json::parse(R"([{"coeff":"1"}])")), InvalidArgument);
  EXPECT_THROW(decode_vertices(Json::parse("[[1,2],[3]]")), InvalidArgument);
}
