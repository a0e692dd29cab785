#include "emlattice/cone_calculus.hpp"

#include <functional>
#include <numeric>

namespace eml {

Subset subset_of(const std::vector<int>& labels) {
  Subset s = 0;
  for (int e : labels) {
    if (e < 0 || e >= 32) throw InvalidArgument("generator label out of range");
    s |= Subset{1} << e;
  }
  return s;
}

std::vector<int> labels_of(Subset s) {
  std::vector<int> out;
  for (int e = 0; e < 32; ++e)
    if (contains(s, e)) out.push_back(e);
  return out;
}

namespace {

std::vector<int> dense_index(const MultiIndex& alpha, std::size_t d) {
  std::vector<int> a(d, 0);
  for (const auto& [label, v] : alpha) {
    if (label < 0 || static_cast<std::size_t>(label) >= d) throw InvalidArgument("multi-index label out of range");
    if (v < 0) throw InvalidArgument("multi-index entries must be non-negative");
    a[static_cast<std::size_t>(label)] = v;
  }
  return a;
}

}  // namespace

IbpFamily::IbpFamily(UniCone cone, MatQ q, BranchRule rule) : cone_(std::move(cone)), q_(std::move(q)), rule_(rule) {
  const std::size_t d = cone_.size();
  if (d > 31) throw InvalidArgument("too many generators");
  if (d > 0 && (q_.rows() != cone_.ambient_dim() || q_.cols() != cone_.ambient_dim()))
    throw InvalidArgument("inner product dimension mismatch");
  gram_ = MatQ(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) gram_(a, b) = qdot(q_, cone_.generators[a], cone_.generators[b]);
  if (d > 0) {
    if (det(gram_) == 0) throw InvalidArgument("cone generators are linearly dependent");
    dual_gram_ = inverse(gram_);
  }
}

Decomposition IbpFamily::deco(Subset i, int e) const {
  const std::size_t d = size();
  if (!contains(i, e)) throw InvalidArgument("deco: e must belong to I");
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < d; ++v)
    if (!contains(i, static_cast<int>(v))) out.push_back(v);
  Decomposition r;
  r.u_coords.assign(d, Rational(0));
  r.u_coords[static_cast<std::size_t>(e)] = 1;
  if (!out.empty()) {
    VecQ rhs(out.size());
    for (std::size_t w = 0; w < out.size(); ++w) rhs[w] = gram_(static_cast<std::size_t>(e), out[w]);
    const VecQ c = solve(gram_.submatrix(out, out), rhs);
    for (std::size_t k = 0; k < out.size(); ++k) {
      r.c[static_cast<int>(out[k])] = c[k];
      r.u_coords[out[k]] = -c[k];
    }
  }
  r.u.assign(cone_.ambient_dim(), Rational(0));
  for (std::size_t k = 0; k < d; ++k)
    if (r.u_coords[k] != 0) r.u = add(r.u, scale(r.u_coords[k], cone_.generators[k]));
  return r;
}

MultiPoly IbpFamily::y_linear(const VecQ& coords) const { return MultiPoly::linear_form(coords); }

void IbpFamily::validate(Subset i, Subset j, const std::vector<int>& alpha) const {
  const std::size_t d = size();
  if (alpha.size() != d) throw InvalidArgument("multi-index length mismatch");
  if (i == 0) throw InvalidArgument("I must be nonempty");
  if ((i & ~j) != 0) throw InvalidArgument("I must be contained in J");
  if (j >> d) throw InvalidArgument("subset refers to a missing generator");
  int a = 0;
  for (std::size_t e = 0; e < d; ++e) {
    if (alpha[e] < 0) throw InvalidArgument("multi-index entries must be non-negative");
    if (alpha[e] > 0 && !contains(i, static_cast<int>(e))) throw InvalidArgument("α must be supported on I");
    a += alpha[e];
  }
  if (popcount(j) > a + popcount(i)) throw InvalidArgument("|J| exceeds |α| + |I|");
}

MultiPoly IbpFamily::symbol_y(Subset i, Subset j, const std::vector<int>& alpha) {
  validate(i, j, alpha);
  const auto key = std::make_tuple(i, j, alpha);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const std::size_t d = size();
  const int a = std::accumulate(alpha.begin(), alpha.end(), 0);
  MultiPoly result(d);
  if (a == 0) {
    result = MultiPoly::constant(d, 1);
  } else {
    int e = -1;
    for (std::size_t k = 0; k < d; ++k)
      if (alpha[k] > 0) {
        e = static_cast<int>(k);
        if (rule_ == BranchRule::SmallestLabel) break;
      }
    std::vector<int> beta = alpha;
    --beta[static_cast<std::size_t>(e)];
    const Decomposition dec = deco(i, e);
    const int k = popcount(j) - popcount(i);
    if (k <= a - 1) result += symbol_y(i, j, beta) * y_linear(dec.u_coords);
    if (k >= 1)
      for (int v : labels_of(j & ~i)) result += dec.c.at(v) * symbol_y(i | (Subset{1} << v), j, beta);
  }
  memo_.emplace(key, result);
  return result;
}

MatQ IbpFamily::projection_y(Subset j) const {
  const std::size_t d = size();
  std::vector<std::size_t> js;
  std::vector<std::size_t> all(d);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t e = 0; e < d; ++e)
    if (contains(j, static_cast<int>(e))) js.push_back(e);
  MatQ p(d, d);
  if (js.empty()) return p;
  const MatQ mjj_inv = inverse(dual_gram_.submatrix(js, js));
  const MatQ mj = dual_gram_.submatrix(js, all);
  const MatQ rows = mjj_inv * mj;
  for (std::size_t r = 0; r < js.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) p(js[r], c) = rows(r, c);
  return p;
}

MultiPoly IbpFamily::division_symbol_y(Subset i, Subset j, const std::vector<int>& alpha) {
  validate(i, j, alpha);
  const auto key = std::make_tuple(i, j, alpha);
  if (auto it = division_memo_.find(key); it != division_memo_.end()) return it->second;
  const std::size_t d = size();
  MultiPoly result(d);
  if (i == j) {
    const MultiPoly projected = MultiPoly::monomial(Exponent(alpha.begin(), alpha.end()));
    result = projected.substitute_linear(projection_y(i));
  } else {
    const int a = std::accumulate(alpha.begin(), alpha.end(), 0);
    // Work on ξ ∈ X(J)^⊥, i.e. y_v = 0 for v ∉ J.
    MatQ restrict_j(d, d);
    for (std::size_t e = 0; e < d; ++e)
      if (contains(j, static_cast<int>(e))) restrict_j(e, e) = 1;
    MultiPoly numerator = MultiPoly::monomial(Exponent(alpha.begin(), alpha.end()));
    const Subset extra = j & ~i;
    for (Subset s = (extra - 1) & extra;; s = (s - 1) & extra) {
      // s runs over proper submasks of `extra`, K = I ∪ s.
      if (popcount(s) <= a) {
        MultiPoly term = division_symbol_y(i, i | s, alpha).substitute_linear(restrict_j);
        Exponent mono(d, 0);
        for (int v : labels_of(s)) mono[static_cast<std::size_t>(v)] = 1;
        numerator -= term * MultiPoly::monomial(mono);
      }
      if (s == 0) break;
    }
    Exponent divisor(d, 0);
    for (int v : labels_of(extra)) divisor[static_cast<std::size_t>(v)] = 1;
    MultiPoly quotient(d);
    try {
      quotient = numerator.divide_by_monomial(divisor);
    } catch (const InvalidArgument&) {
      throw InternalError("polynomiality violated");
    }
    result = quotient.substitute_linear(projection_y(j));
  }
  division_memo_.emplace(key, result);
  return result;
}

MultiPoly IbpFamily::lift(const MultiPoly& y_symbol) const {
  const std::size_t d = size();
  if (y_symbol.nvars() != d) throw InvalidArgument("symbol does not match the cone");
  const std::size_t m = q_.rows();
  MatQ a(d, m);
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t x = 0; x < m; ++x) a(e, x) = cone_.generators[e][x];
  return y_symbol.substitute_linear(a);
}

std::vector<VecQ> IbpFamily::span_outside(Subset s) const {
  std::vector<VecQ> out;
  for (std::size_t e = 0; e < size(); ++e)
    if (!contains(s, static_cast<int>(e))) out.push_back(cone_.generators[e]);
  return out;
}

Decomposition deco(const UniCone& cone, const std::vector<int>& i, int e, const MatQ& q) {
  IbpFamily fam(cone, q);
  return fam.deco(subset_of(i), e);
}

DiffOp ibp_op(const UniCone& cone, const std::vector<int>& i, const std::vector<int>& j, const MultiIndex& alpha,
              const MatQ& q, BranchRule rule) {
  IbpFamily fam(cone, q, rule);
  const Subset si = subset_of(i), sj = subset_of(j);
  const auto a = dense_index(alpha, cone.size());
  const MultiPoly y = fam.symbol_y(si, sj, a);
  const int order = total(alpha) - popcount(sj) + popcount(si);
  return DiffOp{q.rows(), fam.lift(y), order, fam.span_outside(sj)};
}

MultiPoly ibp_symbol(const UniCone& cone, const std::vector<int>& i, const std::vector<int>& j,
                     const MultiIndex& alpha, const MatQ& q) {
  IbpFamily fam(cone, q);
  return fam.lift(fam.division_symbol_y(subset_of(i), subset_of(j), dense_index(alpha, cone.size())));
}

std::vector<std::vector<int>> positive_compositions(const std::vector<int>& labels, std::size_t d, int n) {
  std::vector<std::vector<int>> out;
  const int k = static_cast<int>(labels.size());
  if (k == 0) {
    if (n == 0) out.emplace_back(d, 0);
    return out;
  }
  if (n < k) return out;
  std::vector<int> cur(d, 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    const auto label = static_cast<std::size_t>(labels[static_cast<std::size_t>(idx)]);
    if (idx == k - 1) {
      cur[label] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= remaining - (k - 1 - idx); ++v) {
      cur[label] = v;
      rec(idx + 1, remaining - v);
    }
  };
  rec(0, n);
  return out;
}

namespace {

MultiPoly bv_symbol_y(IbpFamily& family, Subset face, int n) {
  const std::size_t d = family.size();
  if (n < 0) throw InvalidArgument("operator index must be non-negative");
  if (face == 0) return n == 0 ? MultiPoly::constant(d, 1) : MultiPoly(d);
  if (popcount(face) > n) throw InvalidArgument("face dimension below dim(C) - n");
  MultiPoly sum(d);
  for (Subset s = face;; s = (s - 1) & face) {
    if (s == 0) break;
    const auto labels = labels_of(s);
    for (auto nu : positive_compositions(labels, d, n)) {
      MultiIndex m;
      for (int e : labels) m[e] = nu[static_cast<std::size_t>(e)];
      const Rational coeff = p_I_of_nu(m);
      if (coeff == 0) continue;
      for (int e : labels) --nu[static_cast<std::size_t>(e)];
      sum += coeff * family.symbol_y(s, face, nu);
    }
  }
  if ((n - popcount(face)) % 2) sum = -sum;
  return sum;
}

}  // namespace

DiffOp bv_op_unimodular(IbpFamily& family, Subset face, int n) {
  const MultiPoly y = bv_symbol_y(family, face, n);
  return DiffOp{family.q().rows(), family.lift(y), n - popcount(face), family.span_outside(face)};
}

DiffOp bv_op_unimodular(const UniCone& cone, const std::vector<int>& face_labels, int n, const MatQ& q) {
  IbpFamily fam(cone, q);
  return bv_op_unimodular(fam, subset_of(face_labels), n);
}

MultiPoly bv_vertex_symbol_y(IbpFamily& family, int n) {
  const Subset all = family.size() == 0 ? 0 : static_cast<Subset>((Subset{1} << family.size()) - 1);
  return bv_symbol_y(family, all, n);
}

DiffOp ln_op(const UniCone& cone, const std::vector<int>& i, int n) {
  const std::size_t d = cone.size();
  const std::size_t m = cone.ambient_dim();
  const int k = static_cast<int>(i.size());
  if (n < 0) throw InvalidArgument("operator index must be non-negative");
  MultiPoly y(d);
  if (!(n >= 1 && (k == 0 || k > n))) {
    for (auto nu : positive_compositions(i, d, n)) {
      MultiIndex mi;
      for (int e : i) mi[e] = nu[static_cast<std::size_t>(e)];
      Exponent ex(d, 0);
      for (int e : i) ex[static_cast<std::size_t>(e)] = nu[static_cast<std::size_t>(e)] - 1;
      y.add_term(ex, p_I_of_nu(mi));
    }
    if (n % 2) y = -y;
  }
  MatQ a(d, m);
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t x = 0; x < m; ++x) a(e, x) = cone.generators[e][x];
  return DiffOp{m, y.substitute_linear(a), n - k, {}};
}

}  // namespace eml
