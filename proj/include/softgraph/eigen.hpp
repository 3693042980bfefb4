#pragma once

#include <string>
#include <vector>

#include "softgraph/graph.hpp"
#include "softgraph/intpoly.hpp"
#include "softgraph/rational.hpp"

namespace softgraph {

enum class EvKind { Integer, Quadratic, Numeric };

// (p + q*sqrt(d))/r with r > 0, gcd(p,q,r) = 1, d squarefree > 1, q != 0.
struct QuadForm {
  Int p, q, r;
  long d = 0;

  static QuadForm make(Int p, Int q, long d, Int r);
  Quad value() const;
  double approx() const;
  IntPoly min_poly() const;  // primitive integer quadratic it satisfies
  QuadForm conj() const { return {p, -q, r, d}; }
  friend bool operator==(const QuadForm& a, const QuadForm& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r && a.d == b.d;
  }
};

struct Eigenvalue {
  EvKind kind = EvKind::Integer;
  Int integer;      // Integer kind
  QuadForm quad;    // Quadratic kind
  IntPoly factor;   // Numeric kind: the irreducible factor it satisfies
  double approx = 0;
  int multiplicity = 1;

  static Eigenvalue of_integer(Int v, int mult = 1);
  static Eigenvalue of_quad(QuadForm q, int mult = 1);
  static Eigenvalue of_numeric(double approx, IntPoly factor, int mult = 1);
  bool is_zero() const { return kind == EvKind::Integer && integer == 0; }
  std::string str() const;
};

// Eigenvector in whichever arithmetic matches the eigenvalue kind.
struct VecAny {
  std::vector<Rat> r;
  std::vector<Quad> q;
  std::vector<double> n;

  bool exact() const { return n.empty(); }
  size_t size() const { return std::max(r.size(), std::max(q.size(), n.size())); }
  std::vector<double> approx() const;
};

struct EigenPair {
  Eigenvalue value;
  VecAny vec;
  bool exact = true;      // residual identically zero
  double residual = 0.0;  // max-norm of L*x - lambda*x when not exact
};

// Complete exact spectrum of a connected unit-weight graph. Integer roots
// exact, quadratic factors solved in closed form, higher-degree irreducible
// factors reported numerically with their certified factor. Throws
// std::domain_error on disconnected input.
std::vector<Eigenvalue> classify_spectrum(const Graph& g);

// Same classification for an arbitrary symmetric integer matrix (used for
// remainder graphs that may be disconnected). No connectivity checks.
std::vector<Eigenvalue> classify_symmetric_integer_matrix(const Mat<Rat>& M);

// Basis of null(L - lambda I) over Q, scaled to coprime integer vectors,
// first nonzero entry positive. Throws std::domain_error when lambda is
// not an eigenvalue.
std::vector<std::vector<Rat>> rational_eigenspace(const Graph& g, const Int& lambda);

std::vector<std::vector<Quad>> quadratic_eigenspace(const Graph& g, const QuadForm& lambda);

std::vector<std::vector<double>> numeric_eigenspace(const Graph& g, double lambda,
                                                    double tol = 1e-9);

struct SoftNodeReport {
  std::string graph_label;
  Eigenvalue eigenvalue;
  std::vector<int> soft_vertices;            // ascending
  std::vector<EigenPair> witnesses;          // parallel to soft_vertices
};

SoftNodeReport soft_nodes(const Graph& g, const Eigenvalue& ev, double tol = 1e-7);

// Degree-(n-1) zero-component check over the whole spectrum; returns
// violation descriptions (expected empty).
std::vector<std::string> merris_degree_zero_check(const Graph& g);

// Exact re-multiplication check L*x == lambda*x with x nonzero; the
// independent verifier used by transforms and table harnesses.
template <class S>
bool exact_eigen_check(const Graph& g, const S& lambda, const std::vector<S>& x) {
  if (static_cast<int>(x.size()) != g.n) return false;
  bool nonzero = false;
  for (const S& v : x) nonzero = nonzero || !scalar_is_zero(v);
  if (!nonzero) return false;
  std::vector<Rat> wdeg = g.weighted_degrees();
  for (int i = 1; i <= g.n; ++i) {
    S acc = S(wdeg[i - 1]) * x[i - 1];
    for (int j = 1; j <= g.n; ++j) {
      if (i == j) continue;
      Rat w = g.weight(i, j);
      if (w != 0) acc -= S(w) * x[j - 1];
    }
    acc -= lambda * x[i - 1];
    if (!scalar_is_zero(acc)) return false;
  }
  return true;
}

double numeric_eigen_residual(const Graph& g, double lambda,
                              const std::vector<double>& x);

std::vector<Quad> to_quad_vector(const std::vector<Rat>& v);
std::vector<Quad> normalize_quad_vector(std::vector<Quad> v);

}  // namespace softgraph
