// Sparse multivariate polynomials with exact rational coefficients.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "emlattice/linalg.hpp"
#include "emlattice/rational.hpp"

namespace eml {

using Exponent = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, GrLex>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  static MultiPoly monomial(const Exponent& e, const Rational& c = 1);
  /// Σ_i coeffs[i] x_i
  static MultiPoly linear_form(const VecQ& coeffs);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;
  MultiPoly homogeneous_part(int d) const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  MultiPoly operator-() const;

  MultiPoly pow(int k) const;
  MultiPoly derivative(std::size_t var) const;
  /// ∂^beta applied to this polynomial.
  MultiPoly partial(const Exponent& beta) const;
  Rational evaluate(const VecQ& point) const;
  /// Replaces x_i by images[i]; all images share one variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Replaces x_i by Σ_j a(i,j) y_j; the result has a.cols() variables.
  MultiPoly substitute_linear(const MatQ& a) const;
  /// Exact quotient by the monomial x^e; throws if some term is not divisible.
  MultiPoly divide_by_monomial(const Exponent& e) const;

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_same(const MultiPoly& o) const;

  std::size_t nvars_;
  Terms terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Rational& s, MultiPoly a);

struct UniDivision {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Long division of univariate polynomials.
UniDivision divide_univariate(const MultiPoly& a, const MultiPoly& b);

}  // namespace eml
