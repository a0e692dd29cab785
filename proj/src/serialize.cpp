#include "emlattice/serialize.hpp"

namespace eml {

namespace {

Integer integer_entry(const Json& j, const char* what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      const Rational r = parse_rational(j.get<std::string>());
      if (is_integer(r)) return to_integer(r);
    } catch (const InvalidArgument&) {
    }
  }
  throw InvalidArgument(what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<VecZ> integer_rows(const Json& rows, const char* what) {
  if (!rows.is_array()) throw InvalidArgument(what);
  std::vector<VecZ> out;
  for (const auto& r : rows) {
    if (!r.is_array()) throw InvalidArgument(what);
    VecZ v;
    for (const auto& x : r) v.push_back(integer_entry(x, what));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Json encode(const Rational& x) { return to_string(x); }

Json encode(const VecZ& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()));
  return a;
}

Json encode(const VecQ& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

Json encode(const MatQ& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(encode(m.row(i)));
  return a;
}

Json encode(const MultiPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({{"coeff", to_string(c)}, {"exps", e}});
  return a;
}

Json encode(const CycloElem& c) {
  Json coeffs = Json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(encode(x));
  return {{"q", c.order()}, {"coeffs", coeffs}};
}

Json encode(const std::vector<CycloElem>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(encode(c));
  return a;
}

Json encode(const ExpansionResult& r) {
  Json coeffs = Json::array();
  for (std::size_t n = 0; n < r.coefficients.size(); ++n)
    coeffs.push_back({{"n", n}, {"value", encode(r.coefficients[n])}});
  Json faces = Json::array();
  for (const auto& [key, v] : r.per_face) faces.push_back({{"n", key.first}, {"face", key.second}, {"value", encode(v)}});
  return {{"dim", r.dim},           {"degree", r.degree},   {"n_max", r.n_max},
          {"terminated", r.terminated}, {"valuation_path", r.valuation_path}, {"Q", encode(r.q)},
          {"coefficients", coeffs}, {"per_face", faces}};
}

Json encode(const WeightedEhrhart& e) {
  return {{"dim", e.dim}, {"degree", e.degree}, {"coefficients", encode(e.coeffs)}};
}

Json encode(const std::vector<SignedCell>& cells) {
  Json a = Json::array();
  for (const auto& c : cells) {
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(encode(g));
    a.push_back({{"generators", gens}, {"dim", c.dim}, {"r", c.r.get_str()}});
  }
  return a;
}

Json encode(const std::vector<std::pair<int, Rational>>& coefficients) {
  Json a = Json::array();
  for (const auto& [n, v] : coefficients) a.push_back({{"n", n}, {"value", encode(v)}});
  return a;
}

template <>
Rational decode<Rational>(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidArgument("rational values must be strings \"p/q\" or integers");
}

template <>
VecZ decode<VecZ>(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an integer vector");
  VecZ v;
  for (const auto& x : j) v.push_back(integer_entry(x, "expected an integer vector"));
  return v;
}

template <>
VecQ decode<VecQ>(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a rational vector");
  VecQ v;
  for (const auto& x : j) v.push_back(decode<Rational>(x));
  return v;
}

template <>
MatQ decode<MatQ>(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("expected a non-empty matrix");
  std::vector<VecQ> rows;
  for (const auto& r : j) rows.push_back(decode<VecQ>(r));
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw InvalidArgument("matrix rows differ in length");
  return MatQ::from_rows(rows, cols);
}

template <>
MultiPoly decode<MultiPoly>(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("polynomial must be a non-empty term list");
  std::size_t nvars = 0;
  bool first = true;
  MultiPoly p;
  for (const auto& t : j) {
    const Rational c = decode<Rational>(field(t, "coeff"));
    const Json& ej = field(t, "exps");
    if (!ej.is_array()) throw InvalidArgument("exponents must be an array");
    Exponent e;
    for (const auto& x : ej) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        throw InvalidArgument("exponents must be non-negative integers");
      e.push_back(static_cast<int>(x.get<long long>()));
    }
    if (first) {
      nvars = e.size();
      p = MultiPoly(nvars);
      first = false;
    } else if (e.size() != nvars) {
      throw InvalidArgument("terms have different numbers of variables");
    }
    p.add_term(e, c);
  }
  return p;
}

template <>
CycloElem decode<CycloElem>(const Json& j) {
  const int q = field(j, "q").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& c : field(j, "coeffs")) coeffs.push_back(decode<Rational>(c));
  return CycloElem(q, std::move(coeffs));
}

template <>
std::vector<CycloElem> decode<std::vector<CycloElem>>(const Json& j) {
  std::vector<CycloElem> out;
  for (const auto& c : j) out.push_back(decode<CycloElem>(c));
  return out;
}

template <>
ExpansionResult decode<ExpansionResult>(const Json& j) {
  ExpansionResult r;
  r.dim = field(j, "dim").get<std::size_t>();
  r.degree = field(j, "degree").get<int>();
  r.n_max = field(j, "n_max").get<int>();
  r.terminated = field(j, "terminated").get<bool>();
  r.valuation_path = field(j, "valuation_path").get<bool>();
  r.q = decode<MatQ>(field(j, "Q"));
  for (const auto& c : field(j, "coefficients")) r.coefficients.push_back(decode<Rational>(field(c, "value")));
  if (j.contains("per_face"))
    for (const auto& f : j.at("per_face"))
      r.per_face[{field(f, "n").get<int>(), field(f, "face").get<int>()}] = decode<Rational>(field(f, "value"));
  return r;
}

template <>
WeightedEhrhart decode<WeightedEhrhart>(const Json& j) {
  WeightedEhrhart e;
  e.dim = field(j, "dim").get<std::size_t>();
  e.degree = field(j, "degree").get<int>();
  e.coeffs = decode<VecQ>(field(j, "coefficients"));
  return e;
}

template <>
std::vector<SignedCell> decode<std::vector<SignedCell>>(const Json& j) {
  std::vector<SignedCell> out;
  for (const auto& c : j) {
    SignedCell cell;
    for (const auto& g : field(c, "generators")) cell.generators.push_back(decode<VecZ>(g));
    cell.dim = field(c, "dim").get<int>();
    cell.r = integer_entry(field(c, "r"), "cell coefficient must be an integer");
    out.push_back(std::move(cell));
  }
  return out;
}

template <>
std::vector<std::pair<int, Rational>> decode<std::vector<std::pair<int, Rational>>>(const Json& j) {
  std::vector<std::pair<int, Rational>> out;
  for (const auto& c : j) out.emplace_back(field(c, "n").get<int>(), decode<Rational>(field(c, "value")));
  return out;
}

std::vector<VecZ> decode_vertices(const Json& j) {
  const Json& rows = j.is_object() ? field(j, "vertices") : j;
  auto v = integer_rows(rows, "vertices must be integers");
  if (v.empty()) throw InvalidArgument("polytope needs at least one vertex");
  for (const auto& x : v)
    if (x.size() != v.front().size()) throw InvalidArgument("vertices differ in dimension");
  return v;
}

std::vector<VecZ> decode_generators(const Json& j) {
  const Json& rows = j.is_object() ? field(j, "generators") : j;
  auto g = integer_rows(rows, "generators must be integers");
  if (g.empty()) throw InvalidArgument("cone needs at least one generator");
  for (const auto& x : g)
    if (x.size() != g.front().size()) throw InvalidArgument("generators differ in dimension");
  return g;
}

}  // namespace eml
