// Dense exact linear algebra over Q and lattice utilities over Z.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "emlattice/rational.hpp"

namespace eml {

using VecQ = std::vector<Rational>;
using VecZ = std::vector<Integer>;

class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MatQ(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatQ identity(std::size_t n);
  /// Builds the matrix whose columns are the given vectors.
  static MatQ from_columns(const std::vector<VecQ>& columns, std::size_t dim);
  static MatQ from_rows(const std::vector<VecQ>& rows, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  VecQ row(std::size_t i) const;
  VecQ col(std::size_t j) const;
  MatQ transpose() const;
  MatQ submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool operator==(const MatQ& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

MatQ operator*(const MatQ& a, const MatQ& b);
VecQ operator*(const MatQ& a, const VecQ& v);
MatQ operator+(const MatQ& a, const MatQ& b);
MatQ operator-(const MatQ& a, const MatQ& b);

Rational dot(const VecQ& a, const VecQ& b);
/// a^T Q b
Rational qdot(const MatQ& q, const VecQ& a, const VecQ& b);
VecQ add(const VecQ& a, const VecQ& b);
VecQ sub(const VecQ& a, const VecQ& b);
VecQ scale(const Rational& s, const VecQ& v);
bool is_zero(const VecQ& v);

VecQ to_q(const VecZ& v);
/// Throws if an entry is not integral.
VecZ to_z(const VecQ& v);
/// Smallest positive multiple with integer entries, divided by the gcd.
VecZ primitive(const VecQ& v);

Rational det(const MatQ& a);
std::size_t rank(const MatQ& a);
MatQ inverse(const MatQ& a);
/// Solves a x = b for square nonsingular a.
VecQ solve(const MatQ& a, const VecQ& b);
/// Basis of {x : a x = 0}, one vector per free column of the reduced echelon form.
std::vector<VecQ> nullspace(const MatQ& a);
bool is_symmetric(const MatQ& a);
/// Sylvester criterion on leading principal minors.
bool is_spd(const MatQ& a);

struct LatticeBasis {
  std::vector<VecZ> basis;
  Integer index;
};

/// Hermite normal form of the lattice spanned by `generators`, plus the index of
/// that lattice inside the saturation (span ∩ Z^m).
LatticeBasis hnf_lattice_basis(const std::vector<VecZ>& generators);

/// Row Hermite normal form; zero rows are dropped.
std::vector<VecZ> hermite_rows(std::vector<VecZ> rows);

/// Integer basis of {x ∈ Z^m : a x = 0} for an integer matrix given by rows.
std::vector<VecZ> kernel_lattice(const std::vector<VecZ>& rows, std::size_t m);

/// Basis of span(vectors) ∩ Z^m.
std::vector<VecZ> saturated_basis(const std::vector<VecQ>& vectors, std::size_t m);

/// Coordinates of v in the (independent) basis; throws if v is outside the span.
VecQ coordinates_in(const std::vector<VecQ>& basis, const VecQ& v);

/// Q-orthogonal projection of Q^m onto the Q-orthogonal complement of span(basis).
MatQ orth_project(const MatQ& q, const std::vector<VecQ>& subspace_basis);

}  // namespace eml
