// Python bindings. Rationals cross the boundary as strings; the Python package
// turns them into fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "emlattice/expansion.hpp"
#include "emlattice/oracle.hpp"
#include "emlattice/series.hpp"
#include "emlattice/subdivision.hpp"

namespace py = pybind11;
using namespace eml;

namespace {

using Terms = std::vector<std::pair<std::vector<int>, std::string>>;

std::vector<VecZ> to_points(const std::vector<std::vector<long long>>& rows) {
  std::vector<VecZ> out;
  for (const auto& r : rows) {
    VecZ v;
    for (long long x : r) v.emplace_back(static_cast<long>(x));
    out.push_back(std::move(v));
  }
  return out;
}

MultiPoly to_poly(const std::optional<Terms>& terms, std::size_t nvars) {
  if (!terms) return MultiPoly::constant(nvars, 1);
  MultiPoly p(nvars);
  for (const auto& [e, c] : *terms) {
    if (e.size() != nvars) throw InvalidArgument("exponent length does not match the dimension");
    for (int a : e)
      if (a < 0) throw InvalidArgument("exponents must be non-negative");
    p.add_term(Exponent(e.begin(), e.end()), parse_rational(c));
  }
  return p;
}

std::optional<MatQ> to_matrix(const std::optional<std::vector<std::vector<std::string>>>& rows) {
  if (!rows) return std::nullopt;
  MatQ m(rows->size(), rows->size());
  for (std::size_t i = 0; i < rows->size(); ++i) {
    if ((*rows)[i].size() != rows->size()) throw InvalidArgument("Q must be square");
    for (std::size_t j = 0; j < rows->size(); ++j) m(i, j) = parse_rational((*rows)[i][j]);
  }
  return m;
}

std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

LatticePolytope polytope(const std::vector<std::vector<long long>>& vertices) {
  return LatticePolytope::build(to_points(vertices), true);
}

}  // namespace

PYBIND11_MODULE(_emlattice, m) {
  m.doc() = "Exact Euler-Maclaurin coefficients for lattice polytopes";
  static py::exception<BudgetExceeded> budget_error(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      py::set_error(budget_error, e.what());
    }
  });

  m.def(
      "expansion",
      [](const std::vector<std::vector<long long>>& vertices, const std::optional<Terms>& phi,
         const std::optional<std::vector<std::vector<std::string>>>& q, std::optional<int> nmax) {
        const auto p = polytope(vertices);
        ExpansionOptions opts;
        opts.n_max = nmax;
        const auto r = expansion(p, to_poly(phi, ambient_dim(p)), to_matrix(q), opts);
        py::dict out;
        out["coefficients"] = strings(r.coefficients);
        out["terminated"] = r.terminated;
        out["valuation_path"] = r.valuation_path;
        out["dim"] = r.dim;
        out["degree"] = r.degree;
        return out;
      },
      py::arg("vertices"), py::arg("phi") = py::none(), py::arg("q") = py::none(), py::arg("nmax") = py::none());

  m.def(
      "oracle_coefficients",
      [](const std::vector<std::vector<long long>>& vertices, const std::optional<Terms>& phi, std::uint64_t budget) {
        const auto p = polytope(vertices);
        std::vector<std::string> out;
        for (const auto& [n, a] : coefficients_from_oracle(p, to_poly(phi, ambient_dim(p)), budget))
          out.push_back(to_string(a));
        return out;
      },
      py::arg("vertices"), py::arg("phi") = py::none(), py::arg("budget") = kDefaultBudget);

  m.def(
      "riemann_sum",
      [](const std::vector<std::vector<long long>>& vertices, const std::optional<Terms>& phi, long n,
         std::uint64_t budget) {
        const auto p = polytope(vertices);
        return to_string(riemann_sum(p, to_poly(phi, ambient_dim(p)), n, budget));
      },
      py::arg("vertices"), py::arg("phi") = py::none(), py::arg("n") = 1, py::arg("budget") = kDefaultBudget);

  m.def(
      "weighted_ehrhart",
      [](const std::vector<std::vector<long long>>& vertices, const std::optional<Terms>& phi, std::uint64_t budget) {
        const auto p = polytope(vertices);
        return strings(weighted_ehrhart(p, to_poly(phi, ambient_dim(p)), budget).coeffs);
      },
      py::arg("vertices"), py::arg("phi") = py::none(), py::arg("budget") = kDefaultBudget);

  m.def(
      "todd", [](int nmax) { return strings(series_coeffs_todd(nmax)); }, py::arg("nmax") = 4);

  m.def(
      "twisted_todd",
      [](int q, int power, int nmax) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : series_coeffs_twisted_todd(q, CycloElem::omega(q).pow(power), nmax))
          out.push_back(strings(c.coeffs()));
        return out;
      },
      py::arg("q"), py::arg("power") = 1, py::arg("nmax") = 4);

  m.def(
      "subdivide_cone",
      [](const std::vector<std::vector<long long>>& generators) {
        py::list out;
        for (const auto& c : subdivide_cone(PointedCone{to_points(generators)})) {
          std::vector<std::vector<std::string>> gens;
          for (const auto& g : c.generators) {
            std::vector<std::string> row;
            for (const auto& x : g) row.push_back(x.get_str());
            gens.push_back(std::move(row));
          }
          py::dict cell;
          cell["generators"] = gens;
          cell["dim"] = c.dim;
          cell["r"] = c.r.get_str();
          out.append(cell);
        }
        return out;
      },
      py::arg("generators"));

  m.def(
      "is_delzant", [](const std::vector<std::vector<long long>>& vertices) { return is_delzant(polytope(vertices)); },
      py::arg("vertices"));
}
