#include "softgraph/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace softgraph {

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Rat(*it);
  return r;
}

double IntPoly::eval(double x) const {
  double r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + it->get_d();
  return r;
}

IntPoly IntPoly::derivative() const {
  if (degree() == 0) return IntPoly({Int(0)});
  std::vector<Int> d(c.size() - 1);
  for (size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * Int(static_cast<long>(k));
  return IntPoly(std::move(d));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return IntPoly(std::move(r));
}

std::string poly_str(const IntPoly& p) {
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    if (p.c[k] == 0 && p.degree() > 0) continue;
    if (!s.empty()) s += (p.c[k] > 0) ? " + " : " - ";
    else if (p.c[k] < 0) s += "-";
    Int a = abs(p.c[k]);
    if (a != 1 || k == 0) s += a.get_str();
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero() || abs(d.leading()) != 1)
    throw std::invalid_argument("divisor must be monic up to sign");
  if (p.degree() < d.degree()) return std::nullopt;
  std::vector<Int> rem = p.c;
  std::vector<Int> quo(p.degree() - d.degree() + 1, Int(0));
  for (int k = p.degree() - d.degree(); k >= 0; --k) {
    Int f = rem[k + d.degree()] / d.leading();
    quo[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= f * d.c[j];
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

IntPoly char_poly(const Mat<Rat>& M) {
  if (M.rows != M.cols) throw std::invalid_argument("char_poly needs square");
  int n = M.rows;
  Mat<Int> A(0, 0);
  A.rows = A.cols = n;
  A.v.assign(static_cast<size_t>(n) * n, Int(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& x = M.at(i, j);
      if (!is_integer(x))
        throw std::invalid_argument("char_poly needs integer entries");
      A.at(i, j) = x.get_num();
    }
  // Faddeev-LeVerrier: N_1 = A, a_{n-1} = -tr(N_1)/1,
  // N_{k+1} = A (N_k + a_{n-k} I), a_{n-k-1} = -tr(N_{k+1})/(k+1).
  std::vector<Int> coef(n + 1, Int(0));
  coef[n] = 1;
  Mat<Int> N = A;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      Mat<Int> shifted = N;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += coef[n - k + 1];
      N = A * shifted;
    }
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += N.at(i, i);
    coef[n - k] = -tr / Int(k);  // exact division by construction
  }
  return IntPoly(std::move(coef));
}

namespace {

std::vector<Int> positive_divisors(Int v) {
  v = abs(v);
  std::vector<Int> divs;
  for (Int d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d * d != v) divs.push_back(v / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

IntegerRoots integer_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots of zero polynomial");
  IntegerRoots out;
  IntPoly q = p;
  // strip x^k first
  while (q.degree() >= 1 && q.c[0] == 0) {
    out.roots.push_back(Int(0));
    ++out.zero_multiplicity;
    q.c.erase(q.c.begin());
  }
  bool progressed = true;
  while (progressed && q.degree() >= 1) {
    progressed = false;
    for (const Int& d : positive_divisors(q.c[0])) {
      for (int sign : {1, -1}) {
        Int cand = d * sign;
        if (q.eval(cand) == 0) {
          out.roots.push_back(cand);
          IntPoly lin({-cand, Int(1)});
          q = *divide_exact(q, lin);
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.quotient = q;
  return out;
}

bool has_noninteger_rational_root(const IntPoly& p) {
  IntPoly q = p;
  while (q.degree() >= 1 && q.c[0] == 0) q.c.erase(q.c.begin());
  if (q.degree() < 1) return false;
  for (const Int& num : positive_divisors(q.c[0])) {
    for (const Int& den : positive_divisors(q.leading())) {
      if (den == 1) continue;
      if (gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        Rat cand(num * sign, den);
        cand.canonicalize();
        if (q.eval(cand) == 0) return true;
      }
    }
  }
  return false;
}

namespace {

// Builds the monic integer polynomial with the given approximate roots,
// rounding each symmetric-function coefficient to the nearest integer.
IntPoly poly_from_roots(const std::vector<double>& roots) {
  std::vector<double> coeff{1.0};
  for (double r : roots) {
    std::vector<double> next(coeff.size() + 1, 0.0);
    for (size_t i = 0; i < coeff.size(); ++i) {
      next[i + 1] += coeff[i];
      next[i] -= coeff[i] * r;
    }
    coeff = std::move(next);
  }
  std::vector<Int> c(coeff.size());
  for (size_t i = 0; i < coeff.size(); ++i)
    c[i] = Int(static_cast<long>(std::llround(coeff[i])));
  return IntPoly(std::move(c));
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::pair<IntPoly, int>> factor_irreducible(
    const IntPoly& p, const std::vector<double>& root_hints) {
  std::vector<std::pair<IntPoly, int>> factors;
  IntPoly rest = p;

  auto add_factor = [&](const IntPoly& f) {
    int mult = 0;
    while (true) {
      auto q = divide_exact(rest, f);
      if (!q) break;
      rest = *q;
      ++mult;
    }
    if (mult > 0) factors.emplace_back(f, mult);
    return mult > 0;
  };

  // linear factors from integer roots
  IntegerRoots ir = integer_roots(rest);
  {
    std::map<Int, int> mult;
    for (const Int& r : ir.roots) ++mult[r];
    for (auto& [r, m] : mult) factors.emplace_back(IntPoly({-r, Int(1)}), m);
    rest = ir.quotient;
  }

  // Low-degree factors are assembled from subsets of the numeric roots;
  // exact division is the certificate, so stray candidates are harmless.
  int max_deg = rest.degree() / 2;
  for (int deg = 2; deg <= max_deg && rest.degree() > deg; ++deg) {
    std::vector<std::vector<int>> subs;
    subsets_of_size(static_cast<int>(root_hints.size()), deg, subs);
    for (const auto& sub : subs) {
      if (rest.degree() <= deg) break;
      std::vector<double> roots;
      for (int i : sub) roots.push_back(root_hints[i]);
      IntPoly cand = poly_from_roots(roots);
      if (cand.degree() != deg) continue;
      add_factor(cand);
    }
  }
  if (rest.degree() >= 1) factors.emplace_back(rest, 1);
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              return a.first.c < b.first.c;
            });
  return factors;
}

}  // namespace softgraph
