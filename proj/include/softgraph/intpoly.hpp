#pragma once

#include <optional>
#include <string>
#include <vector>

#include "softgraph/matrix.hpp"
#include "softgraph/rational.hpp"

namespace softgraph {

// Integer-coefficient polynomial, coefficients ascending (c[k] * x^k).
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.push_back(Int(0));
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.size() == 1 && c[0] == 0; }
  const Int& leading() const { return c.back(); }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  double eval(double x) const;
  IntPoly derivative() const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
};

std::string poly_str(const IntPoly& p);

// Exact quotient when `monic_divisor` (leading coefficient +-1) divides p.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& monic_divisor);

// det(xI - M): exact, Faddeev-LeVerrier with big integers. M must have
// integer entries (unit-weight Laplacians).
IntPoly char_poly(const Mat<Rat>& M);

struct IntegerRoots {
  std::vector<Int> roots;  // with multiplicity, ascending
  IntPoly quotient;        // p with all integer-root factors removed
  int zero_multiplicity = 0;
};

// All integer roots via divisors of the trailing nonzero coefficient.
IntegerRoots integer_roots(const IntPoly& p);

// True when some rational non-integer root exists (rational root test on
// p against all divisor pairs).
bool has_noninteger_rational_root(const IntPoly& p);

// Factors p into irreducible integer factors. `root_hints` must contain
// accurate approximations of all real roots (from the numeric solver);
// candidate low-degree factors are assembled from root subsets and
// certified by exact division.
std::vector<std::pair<IntPoly, int>> factor_irreducible(
    const IntPoly& p, const std::vector<double>& root_hints);

}  // namespace softgraph
