#include "emlattice/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eml {

bool GrLex::operator()(const Exponent& a, const Exponent& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InvalidArgument("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::linear_form(const VecQ& coeffs) {
  MultiPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto& lo = terms_.begin()->first;
  return std::accumulate(lo.begin(), lo.end(), 0) == degree();
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
  return r;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw InvalidArgument("exponent length does not match variable count");
  for (int x : e)
    if (x < 0) throw InvalidArgument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw InvalidArgument("polynomials have different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw InvalidArgument("polynomials have different variable counts");
  MultiPoly r(a.nvars());
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw InvalidArgument("negative polynomial power");
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  Exponent beta(nvars_, 0);
  if (var >= nvars_) throw InvalidArgument("variable index out of range");
  beta[var] = 1;
  return partial(beta);
}

MultiPoly MultiPoly::partial(const Exponent& beta) const {
  if (beta.size() != nvars_) throw InvalidArgument("derivative multi-index length mismatch");
  MultiPoly r(nvars_);
  Exponent e(nvars_);
  for (const auto& [a, c] : terms_) {
    Rational coeff = c;
    bool survives = true;
    for (std::size_t i = 0; i < nvars_ && survives; ++i) {
      if (a[i] < beta[i]) {
        survives = false;
        break;
      }
      for (int k = 0; k < beta[i]; ++k) coeff *= a[i] - k;
      e[i] = a[i] - beta[i];
    }
    if (survives) r.add_term(e, coeff);
  }
  return r;
}

Rational MultiPoly::evaluate(const VecQ& point) const {
  if (point.size() != nvars_) throw InvalidArgument("evaluation point dimension mismatch");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= eml::pow(point[i], e[i]);
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_) throw InvalidArgument("substitution needs one image per variable");
  const std::size_t n = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != n) throw InvalidArgument("substitution images have different variable counts");
  // powers[i][k] = images[i]^k, built lazily
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(constant(n, 1));
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * images[i]);
    return p[static_cast<std::size_t>(k)];
  };
  MultiPoly r(n);
  if (nvars_ == 0) {
    for (const auto& [e, c] : terms_) r.add_term(Exponent{}, c);
    return r;
  }
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(n, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::substitute_linear(const MatQ& a) const {
  if (a.rows() != nvars_) throw InvalidArgument("linear substitution dimension mismatch");
  std::vector<MultiPoly> images;
  images.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) images.push_back(linear_form(a.row(i)));
  if (nvars_ == 0) {
    MultiPoly r(a.cols());
    for (const auto& [e, c] : terms_) r.add_term(Exponent(a.cols(), 0), c);
    return r;
  }
  return substitute(images);
}

MultiPoly MultiPoly::divide_by_monomial(const Exponent& d) const {
  if (d.size() != nvars_) throw InvalidArgument("monomial length mismatch");
  MultiPoly r(nvars_);
  Exponent e(nvars_);
  for (const auto& [a, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (a[i] < d[i]) throw InvalidArgument("polynomial is not divisible by the monomial");
      e[i] = a[i] - d[i];
    }
    r.add_term(e, c);
  }
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool need_star = false;
    if (mag != 1 || is_const) {
      os << eml::to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

UniDivision divide_univariate(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != 1 || b.nvars() != 1) throw InvalidArgument("univariate division needs one variable");
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  MultiPoly q(1), r = a;
  const int db = b.degree();
  const Rational lead = b.coefficient({db});
  while (!r.is_zero() && r.degree() >= db) {
    const int dr = r.degree();
    MultiPoly t = MultiPoly::monomial({dr - db}, r.coefficient({dr}) / lead);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

}  // namespace eml
