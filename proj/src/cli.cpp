#include "emlattice/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "emlattice/expansion.hpp"
#include "emlattice/oracle.hpp"
#include "emlattice/serialize.hpp"
#include "emlattice/series.hpp"
#include "emlattice/subdivision.hpp"

namespace eml {

namespace {

struct Job {
  std::string spec_file;
  std::string vertices;
  std::string generators;
  std::string phi;
  std::string q = "identity";
  std::optional<int> nmax;
  bool per_face = false;
  std::string format = "table";
  double tolerance = 1e-9;
  std::uint64_t budget = kDefaultBudget;
  long n = 1;
  int order = 2;
  int power = 1;
  std::string point;
  int truncation = 200;
  std::string stellar = "minmax";
  bool rotate_pivot = false;
};

Json parse_json_text(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    throw InvalidArgument(std::string("malformed JSON for ") + what);
  }
}

Json load_spec(const Job& job) {
  if (job.spec_file.empty()) return Json::object();
  std::ifstream in(job.spec_file);
  if (!in) throw InvalidArgument("cannot open spec file " + job.spec_file);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error&) {
    throw InvalidArgument("malformed JSON in " + job.spec_file);
  }
}

std::vector<VecZ> job_vertices(const Job& job, const Json& spec) {
  if (!job.vertices.empty()) return decode_vertices(parse_json_text(job.vertices, "--vertices"));
  if (spec.contains("vertices")) return decode_vertices(spec);
  throw InvalidArgument("no polytope given (use --vertices or --spec)");
}

MultiPoly job_phi(const Job& job, const Json& spec, std::size_t nvars) {
  std::optional<Json> j;
  if (!job.phi.empty()) j = parse_json_text(job.phi, "--phi");
  else if (spec.contains("phi")) j = spec.at("phi");
  if (!j) return MultiPoly::constant(nvars, 1);
  MultiPoly p = decode<MultiPoly>(*j);
  if (p.nvars() != nvars) throw InvalidArgument("polynomial has the wrong number of variables");
  return p;
}

std::optional<MatQ> job_q(const Job& job, const Json& spec, std::size_t dim) {
  Json j = job.q == "identity" && spec.contains("Q") ? spec.at("Q") : Json(job.q);
  if (j.is_string() && j.get<std::string>() == "identity") return std::nullopt;
  if (j.is_string()) j = parse_json_text(j.get<std::string>(), "--Q");
  MatQ q = decode<MatQ>(j);
  if (q.rows() != dim || q.cols() != dim) throw InvalidArgument("Q has the wrong size");
  if (!is_spd(q)) throw InvalidArgument("Q must be symmetric positive definite");
  return q;
}

std::optional<int> job_nmax(const Job& job, const Json& spec) {
  if (job.nmax) return job.nmax;
  if (spec.contains("nmax")) return spec.at("nmax").get<int>();
  return std::nullopt;
}

std::string point_string(const VecZ& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string face_string(const LatticePolytope& p, const Face& f) {
  const auto verts = p.ambient_vertices();
  std::string s = "face " + std::to_string(f.id) + " dim " + std::to_string(f.dim) + " [";
  for (std::size_t i = 0; i < f.vertices.size(); ++i)
    s += (i ? " " : "") + point_string(verts[static_cast<std::size_t>(f.vertices[i])]);
  return s + "]";
}

std::vector<std::pair<int, Rational>> as_list(const ExpansionResult& r) {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t n = 0; n < r.coefficients.size(); ++n) out.emplace_back(static_cast<int>(n), r.coefficients[n]);
  return out;
}

void require_format(const Job& job) {
  if (job.format != "table" && job.format != "json") throw InvalidArgument("--format must be table or json");
}

int cmd_expand(const Job& job, std::ostream& out) {
  const Json spec = load_spec(job);
  const auto p = LatticePolytope::build(job_vertices(job, spec), true);
  const auto phi = job_phi(job, spec, ambient_dim(p));
  ExpansionOptions opts;
  opts.n_max = job_nmax(job, spec);
  const auto res = expansion(p, phi, job_q(job, spec, ambient_dim(p)), opts);
  if (job.format == "json") {
    Json j = encode(res);
    if (!job.per_face) j.erase("per_face");
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t n = 0; n < res.coefficients.size(); ++n) {
    out << "n=" << n << ": " << to_string(res.coefficients[n]) << "\n";
    if (!job.per_face) continue;
    for (const auto& [key, v] : res.per_face)
      if (key.first == static_cast<int>(n) && v != 0)
        out << "  " << face_string(p, p.face(key.second)) << ": " << to_string(v) << "\n";
  }
  if (res.valuation_path) out << "note: valuation path used\n";
  return kExitOk;
}

int cmd_verify(const Job& job, std::ostream& out) {
  const Json spec = load_spec(job);
  const auto p = LatticePolytope::build(job_vertices(job, spec), true);
  const auto phi = job_phi(job, spec, ambient_dim(p));
  const auto res = expansion(p, phi, job_q(job, spec, ambient_dim(p)));
  const auto oracle = coefficients_from_oracle(p, phi, job.budget);
  const auto engine = as_list(res);
  const auto report = compare_coefficients(engine, oracle);
  if (job.format == "json") {
    Json j = {{"status", report.pass ? "PASS" : "FAIL"},
              {"engine", encode(engine)},
              {"oracle", encode(oracle)},
              {"valuation_path", res.valuation_path},
              {"diff", report.diff}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& line : report.diff) out << line << "\n";
    out << (report.pass ? "PASS" : "FAIL");
    if (res.valuation_path) out << " (valuation path used)";
    out << "\n";
  }
  return report.pass ? kExitOk : kExitFail;
}

int cmd_ehrhart(const Job& job, std::ostream& out) {
  const Json spec = load_spec(job);
  const auto p = LatticePolytope::build(job_vertices(job, spec), true);
  const auto phi = job_phi(job, spec, ambient_dim(p));
  const auto e = weighted_ehrhart(p, phi, job.budget);
  if (job.format == "json") {
    out << encode(e).dump(2) << "\n";
  } else {
    out << "coefficients of N^0..N^" << e.coeffs.size() - 1 << ":";
    for (const auto& c : e.coeffs) out << " " << to_string(c);
    out << "\n";
  }
  return kExitOk;
}

int cmd_riemann_sum(const Job& job, std::ostream& out) {
  const Json spec = load_spec(job);
  const auto p = LatticePolytope::build(job_vertices(job, spec), true);
  const auto phi = job_phi(job, spec, ambient_dim(p));
  const Rational r = riemann_sum(p, phi, job.n, job.budget);
  if (job.format == "json") out << Json{{"N", job.n}, {"value", encode(r)}}.dump(2) << "\n";
  else out << to_string(r) << "\n";
  return kExitOk;
}

int cmd_todd(const Job& job, std::ostream& out) {
  const int n = job.nmax.value_or(4);
  if (n < 0) throw InvalidArgument("--nmax must be non-negative");
  const auto b = series_coeffs_todd(n);
  if (job.format == "json") {
    out << encode(VecQ(b.begin(), b.end())).dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? ", " : "") << to_string(b[i]);
  out << "\n";
  return kExitOk;
}

int cmd_twisted_todd(const Job& job, std::ostream& out) {
  const int n = job.nmax.value_or(4);
  if (n < 1) throw InvalidArgument("--nmax must be at least 1");
  if (job.order < 2 || job.order > kMaxCyclotomicOrder) throw InvalidArgument("--q must lie in 2..12");
  const CycloElem omega = CycloElem::omega(job.order).pow(job.power);
  const auto b = series_coeffs_twisted_todd(job.order, omega, n);
  if (job.format == "json") {
    out << Json{{"omega", encode(omega)}, {"b", encode(b)}}.dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < b.size(); ++i) out << "b_" << i + 1 << " = " << b[i].to_string() << "\n";
  return kExitOk;
}

int cmd_subdivide_cone(const Job& job, std::ostream& out) {
  const Json spec = load_spec(job);
  std::vector<VecZ> gens;
  if (!job.generators.empty()) gens = decode_generators(parse_json_text(job.generators, "--generators"));
  else if (spec.contains("generators")) gens = decode_generators(spec);
  else throw InvalidArgument("no cone given (use --generators or --spec)");
  SubdivisionOptions opts;
  if (job.stellar == "minsum") opts.stellar = StellarRule::MinSumBarycentric;
  else if (job.stellar != "minmax") throw InvalidArgument("--stellar must be minmax or minsum");
  opts.rotate_pivot = job.rotate_pivot;
  const auto cells = subdivide_cone(PointedCone{gens}, opts);
  if (job.format == "json") {
    out << Json{{"cells", encode(cells)}}.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& c : cells) {
    if (c.r == 0) continue;
    out << "r=" << c.r.get_str() << " dim=" << c.dim << " [";
    for (std::size_t i = 0; i < c.generators.size(); ++i) out << (i ? " " : "") << point_string(c.generators[i]);
    out << "]\n";
  }
  return kExitOk;
}

int cmd_szasz(const Job& job, std::ostream& out) {
  const Json spec = load_spec(job);
  VecQ x;
  if (!job.point.empty()) x = decode<VecQ>(parse_json_text(job.point, "--x"));
  else if (spec.contains("x")) x = decode<VecQ>(spec.at("x"));
  else throw InvalidArgument("no evaluation point given (use --x)");
  const auto phi = job_phi(job, spec, x.size());
  const Real50 approx = szasz_eval(phi, x, job.n, job.truncation);
  const Rational exact = szasz_moment_expansion(phi, x, job.n);
  const Real50 exact_r = Real50(exact.get_num().get_str()) / Real50(exact.get_den().get_str());
  const Real50 err = boost::multiprecision::abs(approx - exact_r);
  const bool pass = err <= Real50(job.tolerance);
  if (job.format == "json") {
    out << Json{{"szasz", approx.str(30)}, {"moment_expansion", encode(exact)}, {"abs_error", err.str(6)},
                {"status", pass ? "PASS" : "FAIL"}}
               .dump(2)
        << "\n";
  } else {
    out << "szasz: " << approx.str(30) << "\n"
        << "moment expansion: " << to_string(exact) << "\n"
        << "abs error: " << err.str(6) << "\n"
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitFail;
}

void add_polytope_options(CLI::App* sub, Job& job) {
  sub->add_option("--spec", job.spec_file, "JSON job file");
  sub->add_option("--vertices", job.vertices, "vertices as a JSON array of integer arrays");
  sub->add_option("--phi", job.phi, "polynomial as a JSON term list; default 1");
}

void add_output_options(CLI::App* sub, Job& job) {
  sub->add_option("--format", job.format, "table or json");
}

}  // namespace

VerifyReport compare_coefficients(const std::vector<std::pair<int, Rational>>& engine,
                                  const std::vector<std::pair<int, Rational>>& oracle) {
  std::map<int, std::pair<Rational, Rational>> all;
  for (const auto& [n, v] : engine) all[n].first = v;
  for (const auto& [n, v] : oracle) all[n].second = v;
  VerifyReport rep;
  for (const auto& [n, pair] : all) {
    if (pair.first == pair.second) continue;
    rep.pass = false;
    rep.diff.push_back("n=" + std::to_string(n) + ": engine " + to_string(pair.first) + " oracle " +
                       to_string(pair.second));
  }
  return rep;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Euler-Maclaurin coefficients of Riemann sums over lattice polytopes"};
  app.require_subcommand(1);
  Job job;
  std::map<CLI::App*, int (*)(const Job&, std::ostream&)> handlers;

  auto* expand = app.add_subcommand("expand", "A_n(P;φ) from the operator engine");
  add_polytope_options(expand, job);
  add_output_options(expand, job);
  expand->add_option("--Q", job.q, "inner product: identity or a JSON matrix");
  expand->add_option("--nmax", job.nmax, "largest n; default dim P + deg φ");
  expand->add_flag("--per-face", job.per_face, "show per-face contributions");
  handlers[expand] = cmd_expand;

  auto* verify = app.add_subcommand("verify", "compare the engine with the lattice-point oracle");
  add_polytope_options(verify, job);
  add_output_options(verify, job);
  verify->add_option("--Q", job.q, "inner product: identity or a JSON matrix");
  verify->add_option("--budget", job.budget, "maximum number of enumerated points");
  handlers[verify] = cmd_verify;

  auto* ehrhart = app.add_subcommand("ehrhart", "weighted Ehrhart polynomial N^{dim P + deg φ} R_N");
  add_polytope_options(ehrhart, job);
  add_output_options(ehrhart, job);
  ehrhart->add_option("--budget", job.budget, "maximum number of enumerated points");
  handlers[ehrhart] = cmd_ehrhart;

  auto* rsum = app.add_subcommand("riemann-sum", "exact Riemann sum R_N(P;φ)");
  add_polytope_options(rsum, job);
  add_output_options(rsum, job);
  rsum->add_option("--N", job.n, "dilation factor")->required();
  rsum->add_option("--budget", job.budget, "maximum number of enumerated points");
  handlers[rsum] = cmd_riemann_sum;

  auto* todd = app.add_subcommand("todd", "b_0..b_n from the Todd series");
  add_output_options(todd, job);
  todd->add_option("--nmax", job.nmax, "largest index; default 4");
  handlers[todd] = cmd_todd;

  auto* ttodd = app.add_subcommand("twisted-todd", "b_1^ω..b_n^ω for ω = exp(2πi k/q)");
  add_output_options(ttodd, job);
  ttodd->add_option("--nmax", job.nmax, "largest index; default 4");
  ttodd->add_option("--q", job.order, "order of the root of unity")->required();
  ttodd->add_option("--power", job.power, "k in ω = ω_q^k");
  handlers[ttodd] = cmd_twisted_todd;

  auto* cone = app.add_subcommand("subdivide-cone", "signed unimodular subdivision of a pointed cone");
  add_output_options(cone, job);
  cone->add_option("--spec", job.spec_file, "JSON file with generators");
  cone->add_option("--generators", job.generators, "generators as a JSON array of integer arrays");
  cone->add_option("--stellar", job.stellar, "stellar point rule: minmax or minsum");
  cone->add_flag("--rotate-pivot", job.rotate_pivot, "rotate the ray order of the triangulation");
  handlers[cone] = cmd_subdivide_cone;

  auto* szasz = app.add_subcommand("szasz", "Szasz function against its moment expansion");
  add_output_options(szasz, job);
  szasz->add_option("--spec", job.spec_file, "JSON job file");
  szasz->add_option("--phi", job.phi, "polynomial as a JSON term list; default 1");
  szasz->add_option("--x", job.point, "point in the open orthant as a JSON array");
  szasz->add_option("--N", job.n, "scale");
  szasz->add_option("--truncation", job.truncation, "per-coordinate summation cap");
  szasz->add_option("--tolerance", job.tolerance, "allowed absolute error");
  handlers[szasz] = cmd_szasz;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    require_format(job);
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(job, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalid;
}

}  // namespace eml
