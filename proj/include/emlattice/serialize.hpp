// JSON encoding of exact values and results. Rationals are always strings.
#pragma once

#include <json.hpp>
#include <utility>
#include <vector>

#include "emlattice/cyclotomic.hpp"
#include "emlattice/expansion.hpp"
#include "emlattice/oracle.hpp"
#include "emlattice/subdivision.hpp"

namespace eml {

using Json = nlohmann::json;

Json encode(const Rational& x);
Json encode(const VecZ& v);
Json encode(const VecQ& v);
Json encode(const MatQ& m);
Json encode(const MultiPoly& p);
Json encode(const CycloElem& c);
Json encode(const std::vector<CycloElem>& cs);
Json encode(const ExpansionResult& r);
Json encode(const WeightedEhrhart& e);
Json encode(const std::vector<SignedCell>& cells);
Json encode(const std::vector<std::pair<int, Rational>>& coefficients);

template <class T>
T decode(const Json& j);

template <> Rational decode<Rational>(const Json& j);
template <> VecZ decode<VecZ>(const Json& j);
template <> VecQ decode<VecQ>(const Json& j);
template <> MatQ decode<MatQ>(const Json& j);
/// Term list [{"coeff": "p/q", "exps": [..]}, ...].
template <> MultiPoly decode<MultiPoly>(const Json& j);
/// {"q": q, "coeffs": [...]} with coefficients of 1, ω, ω², ... modulo Φ_q.
template <> CycloElem decode<CycloElem>(const Json& j);
template <> std::vector<CycloElem> decode<std::vector<CycloElem>>(const Json& j);
template <> ExpansionResult decode<ExpansionResult>(const Json& j);
template <> WeightedEhrhart decode<WeightedEhrhart>(const Json& j);
template <> std::vector<SignedCell> decode<std::vector<SignedCell>>(const Json& j);
template <> std::vector<std::pair<int, Rational>> decode<std::vector<std::pair<int, Rational>>>(const Json& j);

/// {"vertices": [[int,...],...]}; rejects anything that is not an integer.
std::vector<VecZ> decode_vertices(const Json& j);
/// {"generators": [[int,...],...]}.
std::vector<VecZ> decode_generators(const Json& j);

}  // namespace eml
