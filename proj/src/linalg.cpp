#include "emlattice/linalg.hpp"

#include <algorithm>
#include <utility>

namespace eml {

MatQ::MatQ(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatQ MatQ::from_columns(const std::vector<VecQ>& columns, std::size_t dim) {
  MatQ m(dim, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != dim) throw InvalidArgument("column dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

MatQ MatQ::from_rows(const std::vector<VecQ>& rows, std::size_t dim) {
  return from_columns(rows, dim).transpose();
}

VecQ MatQ::row(std::size_t i) const { return VecQ(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

VecQ MatQ::col(std::size_t j) const {
  VecQ v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatQ MatQ::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  MatQ s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  MatQ c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

VecQ operator*(const MatQ& a, const VecQ& v) {
  if (a.cols() != v.size()) throw InvalidArgument("matrix-vector dimension mismatch");
  VecQ r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

MatQ operator+(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum dimension mismatch");
  MatQ c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

MatQ operator-(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix difference dimension mismatch");
  MatQ c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Rational dot(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw InvalidArgument("dot product dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational qdot(const MatQ& q, const VecQ& a, const VecQ& b) { return dot(a, q * b); }

VecQ add(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector dimension mismatch");
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

VecQ sub(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector dimension mismatch");
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VecQ scale(const Rational& s, const VecQ& v) {
  VecQ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const VecQ& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

VecQ to_q(const VecZ& v) {
  VecQ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

VecZ to_z(const VecQ& v) {
  VecZ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_integer(v[i]);
  return r;
}

VecZ primitive(const VecQ& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  VecZ r(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = Integer(v[i].get_num() * (l / v[i].get_den()));
    g = gcd(g, r[i]);
  }
  if (g == 0) throw InvalidArgument("zero vector has no primitive representative");
  for (auto& x : r) x /= g;
  return r;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(MatQ& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational det(const MatQ& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("determinant of a non-square matrix");
  MatQ m = a;
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

std::size_t rank(const MatQ& a) {
  MatQ m = a;
  return rref(m).size();
}

MatQ inverse(const MatQ& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InvalidArgument("inverse of a non-square matrix");
  MatQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InvalidArgument("matrix is singular");
  MatQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

VecQ solve(const MatQ& a, const VecQ& b) { return inverse(a) * b; }

std::vector<VecQ> nullspace(const MatQ& a) {
  MatQ m = a;
  auto piv = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<VecQ> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    VecQ v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_symmetric(const MatQ& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

bool is_spd(const MatQ& a) {
  if (!is_symmetric(a)) return false;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (det(a.submatrix(idx, idx)) <= 0) return false;
  }
  return true;
}

namespace {

// Unimodular row reduction pivoting only on the first `ncols` columns.
// Returns the number of pivot rows; those come first.
std::size_t integer_echelon(std::vector<VecZ>& rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      have_pivot = true;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  return r;
}

bool all_zero(const VecZ& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

std::vector<VecZ> hermite_rows(std::vector<VecZ> rows) {
  if (rows.empty()) return rows;
  const std::size_t m = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != m) throw InvalidArgument("generator dimension mismatch");
  const std::size_t r = integer_echelon(rows, m);
  rows.resize(r);
  return rows;
}

std::vector<VecZ> kernel_lattice(const std::vector<VecZ>& rows, std::size_t m) {
  const std::size_t k = rows.size();
  std::vector<VecZ> aug(m, VecZ(k + m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (rows[j].size() != m) throw InvalidArgument("kernel_lattice: row dimension mismatch");
      aug[i][j] = rows[j][i];
    }
    aug[i][k + i] = 1;
  }
  const std::size_t r = integer_echelon(aug, k);
  std::vector<VecZ> ker;
  for (std::size_t i = r; i < m; ++i) {
    VecZ left(aug[i].begin(), aug[i].begin() + static_cast<std::ptrdiff_t>(k));
    if (!all_zero(left)) throw InternalError("kernel_lattice: echelon form left a nonzero row");
    ker.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(k), aug[i].end());
  }
  return hermite_rows(std::move(ker));
}

std::vector<VecZ> saturated_basis(const std::vector<VecQ>& vectors, std::size_t m) {
  std::vector<VecQ> nonzero;
  for (const auto& v : vectors) {
    if (v.size() != m) throw InvalidArgument("saturated_basis: dimension mismatch");
    if (!is_zero(v)) nonzero.push_back(v);
  }
  if (nonzero.empty()) return {};
  const auto annihilator = nullspace(MatQ::from_rows(nonzero, m));
  std::vector<VecZ> rows;
  for (const auto& a : annihilator) rows.push_back(primitive(a));
  return kernel_lattice(rows, m);
}

VecQ coordinates_in(const std::vector<VecQ>& basis, const VecQ& v) {
  const std::size_t m = v.size();
  const std::size_t k = basis.size();
  MatQ aug(m, k + 1);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < m; ++i) aug(i, j) = basis[j].at(i);
  for (std::size_t i = 0; i < m; ++i) aug(i, k) = v[i];
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == k) throw InvalidArgument("vector is outside the span of the basis");
  if (piv.size() != k) throw InvalidArgument("basis vectors are dependent");
  VecQ c(k);
  for (std::size_t j = 0; j < k; ++j) c[j] = aug(j, k);
  return c;
}

LatticeBasis hnf_lattice_basis(const std::vector<VecZ>& generators) {
  if (generators.empty()) throw InvalidArgument("empty generating set");
  auto basis = hermite_rows(generators);
  if (basis.empty()) throw InvalidArgument("generators span the zero lattice");
  const std::size_t m = generators.front().size();
  std::vector<VecQ> bq;
  for (const auto& b : basis) bq.push_back(to_q(b));
  const auto sat = saturated_basis(bq, m);
  std::vector<VecQ> satq;
  for (const auto& s : sat) satq.push_back(to_q(s));
  MatQ coords(basis.size(), sat.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto c = coordinates_in(satq, bq[i]);
    for (std::size_t j = 0; j < c.size(); ++j) coords(i, j) = c[j];
  }
  Rational d = det(coords);
  return {std::move(basis), to_integer(abs(d))};
}

MatQ orth_project(const MatQ& q, const std::vector<VecQ>& subspace_basis) {
  const std::size_t m = q.rows();
  if (!is_spd(q)) throw InvalidArgument("inner product matrix is not symmetric positive definite");
  if (subspace_basis.empty()) return MatQ::identity(m);
  MatQ b = MatQ::from_columns(subspace_basis, m);
  if (rank(b) != subspace_basis.size()) throw InvalidArgument("subspace basis is linearly dependent");
  MatQ bt_q = b.transpose() * q;
  MatQ gram = bt_q * b;
  return MatQ::identity(m) - b * (inverse(gram) * bt_q);
}

}  // namespace eml
