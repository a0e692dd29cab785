#include "emlattice/fourier_motzkin.hpp"

#include <set>
#include <string>

namespace eml {

namespace {

// Scales so the first nonzero entry of (a, b) has absolute value 1.
void normalize(LinearInequality& ineq) {
  Rational pivot = 0;
  for (const auto& x : ineq.a)
    if (x != 0) {
      pivot = abs(x);
      break;
    }
  if (pivot == 0) return;
  for (auto& x : ineq.a) x /= pivot;
  ineq.b /= pivot;
}

std::string key(const LinearInequality& ineq) {
  std::string k;
  for (const auto& x : ineq.a) k += x.get_str() + ",";
  return k + ">=" + ineq.b.get_str();
}

}  // namespace

bool fm_feasible(std::vector<LinearInequality> system, std::size_t nvars) {
  for (const auto& ineq : system)
    if (ineq.a.size() != nvars) throw InvalidArgument("inequality dimension mismatch");
  for (std::size_t var = 0; var < nvars; ++var) {
    std::vector<LinearInequality> pos, neg, next;
    for (auto& ineq : system) {
      if (ineq.a[var] > 0)
        pos.push_back(std::move(ineq));
      else if (ineq.a[var] < 0)
        neg.push_back(std::move(ineq));
      else
        next.push_back(std::move(ineq));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // p.a[var] * x >= ..., n.a[var] * x >= ...: eliminate x.
        const Rational sp = -n.a[var], sn = p.a[var];
        LinearInequality c{VecQ(nvars), sp * p.b + sn * n.b};
        for (std::size_t j = 0; j < nvars; ++j) c.a[j] = sp * p.a[j] + sn * n.a[j];
        c.a[var] = 0;
        next.push_back(std::move(c));
      }
    std::set<std::string> seen;
    system.clear();
    for (auto& ineq : next) {
      normalize(ineq);
      if (is_zero(ineq.a)) {
        if (ineq.b > 0) return false;
        continue;
      }
      if (seen.insert(key(ineq)).second) system.push_back(std::move(ineq));
    }
  }
  for (const auto& ineq : system)
    if (ineq.b > 0) return false;
  return true;
}

bool is_pointed(const std::vector<VecQ>& generators) {
  if (generators.empty()) return true;
  const std::size_t n = generators.front().size();
  std::vector<LinearInequality> sys;
  for (const auto& g : generators) {
    if (is_zero(g)) continue;
    sys.push_back({g, Rational(1)});
  }
  return fm_feasible(std::move(sys), n);
}

bool outside_cone(const VecQ& g, const std::vector<VecQ>& others) {
  // Farkas: g ∉ cone(others) iff some y has <y,h> >= 0 for all h and <y,g> < 0.
  const std::size_t n = g.size();
  std::vector<LinearInequality> sys;
  for (const auto& h : others) sys.push_back({h, Rational(0)});
  sys.push_back({scale(-1, g), Rational(1)});
  return fm_feasible(std::move(sys), n);
}

}  // namespace eml
