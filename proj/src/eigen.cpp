#include "softgraph/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "softgraph/jacobi.hpp"

namespace softgraph {

QuadForm QuadForm::make(Int p, Int q, long d, Int r) {
  if (q == 0) throw std::invalid_argument("quadratic form needs q != 0");
  if (d <= 1) throw std::invalid_argument("radicand must be squarefree > 1");
  if (r == 0) throw std::invalid_argument("zero denominator");
  if (r < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  Int g = gcd(gcd(abs(p), abs(q)), r);
  if (g > 1) {
    p /= g;
    q /= g;
    r /= g;
  }
  return {p, q, r, d};
}

Quad QuadForm::value() const {
  Rat a(p, r), b(q, r);
  a.canonicalize();
  b.canonicalize();
  return Quad(a, b, d);
}

double QuadForm::approx() const {
  return (p.get_d() + q.get_d() * std::sqrt(static_cast<double>(d))) / r.get_d();
}

IntPoly QuadForm::min_poly() const {
  // root of r^2 x^2 - 2 p r x + (p^2 - q^2 d)
  std::vector<Int> c{p * p - q * q * Int(d), Int(-2) * p * r, r * r};
  Int content = gcd(gcd(abs(c[0]), abs(c[1])), abs(c[2]));
  if (content > 1)
    for (Int& x : c) x /= content;
  return IntPoly(std::move(c));
}

Eigenvalue Eigenvalue::of_integer(Int v, int mult) {
  Eigenvalue e;
  e.kind = EvKind::Integer;
  e.approx = v.get_d();
  e.integer = std::move(v);
  e.multiplicity = mult;
  return e;
}

Eigenvalue Eigenvalue::of_quad(QuadForm q, int mult) {
  Eigenvalue e;
  e.kind = EvKind::Quadratic;
  e.quad = std::move(q);
  e.approx = e.quad.approx();
  e.multiplicity = mult;
  return e;
}

Eigenvalue Eigenvalue::of_numeric(double approx, IntPoly factor, int mult) {
  Eigenvalue e;
  e.kind = EvKind::Numeric;
  e.approx = approx;
  e.factor = std::move(factor);
  e.multiplicity = mult;
  return e;
}

std::string Eigenvalue::str() const {
  switch (kind) {
    case EvKind::Integer:
      return integer.get_str();
    case EvKind::Quadratic: {
      std::ostringstream s;
      s << "(" << quad.p.get_str();
      if (quad.q > 0 && quad.q != 1) s << "+" << quad.q.get_str() << "*";
      else if (quad.q == 1) s << "+";
      else if (quad.q == -1) s << "-";
      else s << quad.q.get_str() << "*";
      s << "sqrt(" << quad.d << "))";
      if (quad.r != 1) s << "/" << quad.r.get_str();
      return s.str();
    }
    case EvKind::Numeric: {
      std::ostringstream s;
      s.precision(10);
      s << approx << " [root of " << poly_str(factor) << "]";
      return s.str();
    }
  }
  return "?";
}

std::vector<double> VecAny::approx() const {
  if (!n.empty()) return n;
  std::vector<double> out;
  if (!r.empty())
    for (const Rat& x : r) out.push_back(to_double(x));
  else
    for (const Quad& x : q) out.push_back(x.approx());
  return out;
}

std::vector<Eigenvalue> classify_symmetric_integer_matrix(const Mat<Rat>& L) {
  IntPoly cp = char_poly(L);
  std::vector<double> hints = numeric_spectrum(L).values;
  auto factors = factor_irreducible(cp, hints);

  std::vector<Eigenvalue> evs;
  for (auto& [f, mult] : factors) {
    if (f.degree() == 1) {
      // monic linear: x + c0  ->  root -c0
      evs.push_back(Eigenvalue::of_integer(-f.c[0] / f.c[1], mult));
    } else if (f.degree() == 2 && f.leading() == 1) {
      Int u = f.c[1], v = f.c[0];
      Int disc = u * u - 4 * v;
      if (disc <= 0)
        throw std::domain_error("complex roots in Laplacian factor");
      Int s;
      long d = squarefree_part(disc, &s);
      if (d == 1)
        throw std::domain_error("unexpected rational root in quadratic factor");
      evs.push_back(Eigenvalue::of_quad(QuadForm::make(-u, s, d, 2), mult));
      evs.push_back(Eigenvalue::of_quad(QuadForm::make(-u, -s, d, 2), mult));
    } else {
      // irreducible factor of degree >= 3: report each real root
      std::vector<double> roots;
      IntPoly fd = f.derivative();
      for (double h : hints) {
        double val = std::abs(f.eval(h));
        double near = std::abs(f.eval(h + 0.25)) + std::abs(f.eval(h - 0.25));
        if (val > 1e-6 * std::max(1.0, near)) continue;
        double x = h;
        for (int it = 0; it < 8; ++it) {
          double der = fd.eval(x);
          if (der == 0) break;
          x -= f.eval(x) / der;
        }
        roots.push_back(x);
      }
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end(),
                              [](double a, double b) { return std::abs(a - b) < 1e-7; }),
                  roots.end());
      if (static_cast<int>(roots.size()) != f.degree())
        throw std::domain_error("failed to isolate all roots of factor " +
                                poly_str(f));
      for (double r : roots) evs.push_back(Eigenvalue::of_numeric(r, f, mult));
    }
  }
  std::sort(evs.begin(), evs.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return a.approx < b.approx; });
  int total = 0;
  for (const auto& e : evs) total += e.multiplicity;
  if (total != L.rows) throw std::domain_error("multiplicities do not sum to n");
  return evs;
}

std::vector<Eigenvalue> classify_spectrum(const Graph& g) {
  if (!g.unit_weights())
    throw std::invalid_argument("classify_spectrum needs unit weights");
  if (!g.connected())
    throw std::domain_error(
        "disconnected graph: zero eigenvalue multiplicity != 1");
  auto evs = classify_symmetric_integer_matrix(g.laplacian());
  int zero_mult = 0;
  for (const auto& e : evs)
    if (e.is_zero()) zero_mult = e.multiplicity;
  if (zero_mult != 1)
    throw std::domain_error(
        "disconnected graph: zero eigenvalue multiplicity != 1");
  return evs;
}

std::vector<std::vector<Rat>> rational_eigenspace(const Graph& g, const Int& lambda) {
  Mat<Rat> A = g.laplacian();
  for (int i = 0; i < A.rows; ++i) A.at(i, i) -= Rat(lambda);
  auto basis = nullspace(A);
  if (basis.empty())
    throw std::domain_error(lambda.get_str() + " is not an eigenvalue");
  for (auto& v : basis) v = to_coprime_integers(std::move(v));
  return basis;
}

std::vector<Quad> to_quad_vector(const std::vector<Rat>& v) {
  std::vector<Quad> q;
  q.reserve(v.size());
  for (const Rat& x : v) q.emplace_back(x);
  return q;
}

std::vector<Quad> normalize_quad_vector(std::vector<Quad> v) {
  Int den_lcm = 1;
  for (const Quad& x : v) {
    den_lcm = lcm(den_lcm, Int(x.a.get_den()));
    den_lcm = lcm(den_lcm, Int(x.b.get_den()));
  }
  Int num_gcd = 0;
  for (Quad& x : v) {
    x.a *= Rat(den_lcm);
    x.a.canonicalize();
    x.b *= Rat(den_lcm);
    x.b.canonicalize();
    num_gcd = gcd(num_gcd, Int(x.a.get_num()));
    num_gcd = gcd(num_gcd, Int(x.b.get_num()));
  }
  if (num_gcd == 0) return v;
  int sign = 0;
  for (const Quad& x : v)
    if (!x.is_zero()) {
      sign = x.approx() > 0 ? 1 : -1;
      break;
    }
  Rat f(num_gcd * sign);
  for (Quad& x : v) {
    x.a /= f;
    x.a.canonicalize();
    x.b /= f;
    x.b.canonicalize();
  }
  return v;
}

std::vector<std::vector<Quad>> quadratic_eigenspace(const Graph& g,
                                                    const QuadForm& lambda) {
  Mat<Rat> L = g.laplacian();
  Mat<Quad> A(L.rows, L.cols);
  Quad lv = lambda.value();
  for (int i = 0; i < L.rows; ++i)
    for (int j = 0; j < L.cols; ++j) {
      A.at(i, j) = Quad(L.at(i, j));
      if (i == j) A.at(i, j) -= lv;
    }
  auto basis = nullspace(A);
  if (basis.empty())
    throw std::domain_error("quadratic value is not an eigenvalue");
  for (auto& v : basis) v = normalize_quad_vector(std::move(v));
  return basis;
}

std::vector<std::vector<double>> numeric_eigenspace(const Graph& g, double lambda,
                                                    double tol) {
  NumericEigen ne = numeric_spectrum(g.laplacian());
  double scale = std::max(1.0, std::abs(ne.values.back()));
  std::vector<std::vector<double>> basis;
  for (size_t k = 0; k < ne.values.size(); ++k)
    if (std::abs(ne.values[k] - lambda) < std::max(tol, 1e-9 * scale))
      basis.push_back(ne.vectors[k]);
  return basis;
}

double numeric_eigen_residual(const Graph& g, double lambda,
                              const std::vector<double>& x) {
  auto wd = g.weighted_degrees();
  double worst = 0.0;
  for (int i = 1; i <= g.n; ++i) {
    double acc = to_double(wd[i - 1]) * x[i - 1] - lambda * x[i - 1];
    for (int j = 1; j <= g.n; ++j) {
      if (i == j) continue;
      Rat w = g.weight(i, j);
      if (w != 0) acc -= to_double(w) * x[j - 1];
    }
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

namespace {

// Witness inside span(basis) vanishing at vertex s (0-based), exact kinds.
template <class S>
std::vector<S> vanishing_witness(const std::vector<std::vector<S>>& basis, int s) {
  for (const auto& b : basis)
    if (scalar_is_zero(b[s])) return b;
  if (basis.size() < 2) return {};
  // w = b1[s]*b0 - b0[s]*b1 is nonzero (independent basis) and zero at s
  std::vector<S> w(basis[0].size(), S(0));
  for (size_t i = 0; i < w.size(); ++i)
    w[i] = basis[1][s] * basis[0][i] - basis[0][s] * basis[1][i];
  return w;
}

}  // namespace

SoftNodeReport soft_nodes(const Graph& g, const Eigenvalue& ev, double tol) {
  SoftNodeReport rep;
  rep.graph_label = g.label;
  rep.eigenvalue = ev;
  switch (ev.kind) {
    case EvKind::Integer: {
      auto basis = rational_eigenspace(g, ev.integer);
      for (int s = 0; s < g.n; ++s) {
        auto w = vanishing_witness(basis, s);
        if (w.empty()) continue;
        rep.soft_vertices.push_back(s + 1);
        EigenPair p;
        p.value = ev;
        p.vec.r = to_coprime_integers(std::move(w));
        p.exact = true;
        rep.witnesses.push_back(std::move(p));
      }
      break;
    }
    case EvKind::Quadratic: {
      auto basis = quadratic_eigenspace(g, ev.quad);
      for (int s = 0; s < g.n; ++s) {
        auto w = vanishing_witness(basis, s);
        if (w.empty()) continue;
        rep.soft_vertices.push_back(s + 1);
        EigenPair p;
        p.value = ev;
        p.vec.q = normalize_quad_vector(std::move(w));
        p.exact = true;
        rep.witnesses.push_back(std::move(p));
      }
      break;
    }
    case EvKind::Numeric: {
      auto basis = numeric_eigenspace(g, ev.approx);
      if (basis.empty()) throw std::domain_error("not an eigenvalue");
      for (int s = 0; s < g.n; ++s) {
        std::vector<double> w;
        if (basis.size() >= 2) {
          w.assign(g.n, 0.0);
          for (int i = 0; i < g.n; ++i)
            w[i] = basis[1][s] * basis[0][i] - basis[0][s] * basis[1][i];
        } else {
          w = basis[0];
        }
        // normalize to unit max-norm before the zero test
        double mx = 0.0;
        for (double x : w) mx = std::max(mx, std::abs(x));
        if (mx == 0.0) continue;
        for (double& x : w) x /= mx;
        if (std::abs(w[s]) >= tol) continue;
        rep.soft_vertices.push_back(s + 1);
        EigenPair p;
        p.value = ev;
        p.vec.n = w;
        p.exact = false;
        p.residual = numeric_eigen_residual(g, ev.approx, w);
        rep.witnesses.push_back(std::move(p));
      }
      break;
    }
  }
  return rep;
}

std::vector<std::string> merris_degree_zero_check(const Graph& g) {
  std::vector<std::string> violations;
  std::vector<int> full_degree;
  auto deg = g.degrees();
  for (int i = 1; i <= g.n; ++i)
    if (deg[i - 1] == g.n - 1) full_degree.push_back(i);
  if (full_degree.empty()) return violations;

  for (const Eigenvalue& ev : classify_spectrum(g)) {
    if (ev.is_zero()) continue;
    if (ev.kind == EvKind::Integer && ev.integer == g.n) continue;  // needs lambda < n
    for (int s : full_degree) {
      bool all_zero = true;
      switch (ev.kind) {
        case EvKind::Integer:
          for (const auto& b : rational_eigenspace(g, ev.integer))
            all_zero = all_zero && b[s - 1] == 0;
          break;
        case EvKind::Quadratic:
          for (const auto& b : quadratic_eigenspace(g, ev.quad))
            all_zero = all_zero && b[s - 1].is_zero();
          break;
        case EvKind::Numeric:
          for (const auto& b : numeric_eigenspace(g, ev.approx))
            all_zero = all_zero && std::abs(b[s - 1]) < 1e-8;
          break;
      }
      if (!all_zero)
        violations.push_back("graph " + (g.label.empty() ? "?" : g.label) +
                             ": eigenvalue " + ev.str() + " vertex " +
                             std::to_string(s));
    }
  }
  return violations;
}

}  // namespace softgraph
