#include "softgraph/closed_forms.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace softgraph {

namespace {
constexpr double kPi = 3.14159265358979323846;

Eigenvalue exact_value_near(const std::vector<Eigenvalue>& spectrum, double x) {
  for (const Eigenvalue& ev : spectrum)
    if (std::abs(ev.approx - x) < 1e-9 * std::max(1.0, std::abs(x))) return ev;
  throw std::domain_error("closed-form value missing from exact spectrum");
}

EigenPair exact_pair(Eigenvalue ev, std::vector<Rat> v) {
  EigenPair p;
  p.value = std::move(ev);
  p.vec.r = std::move(v);
  p.exact = true;
  return p;
}

EigenPair numeric_pair(const Graph& g, Eigenvalue ev, std::vector<double> v) {
  EigenPair p;
  p.value = std::move(ev);
  p.exact = false;
  p.residual = numeric_eigen_residual(g, p.value.approx, v);
  p.vec.n = std::move(v);
  return p;
}

std::vector<Rat> ones(int n) { return std::vector<Rat>(n, Rat(1)); }

std::vector<Rat> unit_diff(int n, int i, int j) {  // e_i - e_j, 1-based
  std::vector<Rat> v(n, Rat(0));
  v[i - 1] = 1;
  v[j - 1] = -1;
  return v;
}
}  // namespace

Graph clique_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph::build(n, std::move(e), {}, "K" + std::to_string(n));
}

Graph star_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int k = 2; k <= n; ++k) e.emplace_back(1, k);
  return Graph::build(n, std::move(e), {}, "S" + std::to_string(n));
}

Graph bipartite_graph(int n1, int n2) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n1; ++i)
    for (int j = n1 + 1; j <= n1 + n2; ++j) e.emplace_back(i, j);
  return Graph::build(n1 + n2, std::move(e), {},
                      "K" + std::to_string(n1) + "," + std::to_string(n2));
}

Graph multipartite_graph(const std::vector<int>& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> start(parts.size());
  int acc = 1;
  for (size_t p = 0; p < parts.size(); ++p) {
    start[p] = acc;
    acc += parts[p];
  }
  std::vector<std::pair<int, int>> e;
  for (size_t p = 0; p < parts.size(); ++p)
    for (size_t q = p + 1; q < parts.size(); ++q)
      for (int i = 0; i < parts[p]; ++i)
        for (int j = 0; j < parts[q]; ++j)
          e.emplace_back(start[p] + i, start[q] + j);
  return Graph::build(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n, 1);
  return Graph::build(n, std::move(e), {}, "cycle" + std::to_string(n));
}

Graph chain_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, std::move(e), {}, "chain" + std::to_string(n));
}

std::vector<EigenPair> clique_spectrum(int n) {
  if (n < 1) throw std::invalid_argument("invalid size");
  std::vector<EigenPair> out;
  out.push_back(exact_pair(Eigenvalue::of_integer(0), ones(n)));
  for (int k = 2; k <= n; ++k)
    out.push_back(exact_pair(Eigenvalue::of_integer(n, n - 1), unit_diff(n, 1, k)));
  return out;
}

std::vector<EigenPair> star_spectrum(int n) {
  if (n < 1) throw std::invalid_argument("invalid size");
  std::vector<EigenPair> out;
  out.push_back(exact_pair(Eigenvalue::of_integer(0), ones(n)));
  if (n == 1) return out;
  for (int k = 3; k <= n; ++k)
    out.push_back(exact_pair(Eigenvalue::of_integer(1, n - 2), unit_diff(n, 2, k)));
  std::vector<Rat> v(n, Rat(-1));
  v[0] = n - 1;  // center value; re-multiplication fixes the closed form
  out.push_back(exact_pair(Eigenvalue::of_integer(n), std::move(v)));
  return out;
}

std::vector<EigenPair> bipartite_spectrum(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("invalid sizes");
  int n = n1 + n2;
  std::vector<EigenPair> out;
  out.push_back(exact_pair(Eigenvalue::of_integer(0), ones(n)));
  for (int i = n1 + 2; i <= n; ++i)
    out.push_back(exact_pair(Eigenvalue::of_integer(n1, n2 - 1),
                             unit_diff(n, n1 + 1, i)));
  for (int i = 2; i <= n1; ++i)
    out.push_back(exact_pair(Eigenvalue::of_integer(n2, n1 - 1), unit_diff(n, 1, i)));
  std::vector<Rat> v(n);
  for (int i = 0; i < n1; ++i) v[i] = n2;
  for (int i = n1; i < n; ++i) v[i] = -n1;
  out.push_back(exact_pair(Eigenvalue::of_integer(n), std::move(v)));
  return out;
}

std::vector<EigenPair> multipartite_spectrum(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty partition");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("invalid part size");
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  int p = static_cast<int>(parts.size());
  std::vector<int> start(parts.size());
  int acc = 1;
  for (size_t i = 0; i < parts.size(); ++i) {
    start[i] = acc;
    acc += parts[i];
  }
  std::vector<EigenPair> out;
  out.push_back(exact_pair(Eigenvalue::of_integer(0), ones(n)));
  for (int i = 0; i < p; ++i)
    for (int j = 1; j < parts[i]; ++j)
      out.push_back(exact_pair(Eigenvalue::of_integer(n - parts[i], parts[i] - 1),
                               unit_diff(n, start[i], start[i] + j)));
  // eigenvalue n has multiplicity p-1 (checked against char_poly; the
  // printed exponent p double counts the zero eigenvalue slot)
  for (int i = 0; i + 1 < p; ++i) {
    std::vector<Rat> v(n, Rat(0));
    for (int a = 0; a < parts[i]; ++a) v[start[i] - 1 + a] = parts[i + 1];
    for (int a = 0; a < parts[i + 1]; ++a) v[start[i + 1] - 1 + a] = -parts[i];
    out.push_back(exact_pair(Eigenvalue::of_integer(n, p - 1), std::move(v)));
  }
  return out;
}

std::vector<EigenPair> cycle_spectrum(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = cycle_graph(n);
  auto exact = classify_spectrum(g);
  std::vector<EigenPair> out;
  out.push_back(exact_pair(Eigenvalue::of_integer(0), ones(n)));
  for (int k = 2; 2 * (k - 1) < n; ++k) {
    double mu = 4.0 * std::pow(std::sin((k - 1) * kPi / n), 2);
    Eigenvalue ev = exact_value_near(exact, mu);
    double a = 2.0 * (k - 1) * kPi / n;
    std::vector<double> w(n), x(n);
    for (int j = 0; j < n; ++j) {
      w[j] = std::sin(j * a);
      x[j] = std::cos(j * a);
    }
    out.push_back(numeric_pair(g, ev, std::move(w)));
    out.push_back(numeric_pair(g, ev, std::move(x)));
  }
  if (n % 2 == 0) {
    std::vector<Rat> alt(n);
    for (int j = 0; j < n; ++j) alt[j] = (j % 2 == 0) ? 1 : -1;
    out.push_back(exact_pair(Eigenvalue::of_integer(4), std::move(alt)));
  }
  return out;
}

std::vector<EigenPair> chain_spectrum(int n) {
  if (n < 1) throw std::invalid_argument("invalid size");
  std::vector<EigenPair> out;
  if (n == 1) {
    out.push_back(exact_pair(Eigenvalue::of_integer(0), ones(1)));
    return out;
  }
  Graph g = chain_graph(n);
  auto exact = classify_spectrum(g);
  out.push_back(exact_pair(Eigenvalue::of_integer(0), ones(n)));
  for (int k = 2; k <= n; ++k) {
    double lam = 4.0 * std::pow(std::sin((k - 1) * kPi / (2.0 * n)), 2);
    Eigenvalue ev = exact_value_near(exact, lam);
    std::vector<double> v(n);
    for (int j = 1; j <= n; ++j)
      v[j - 1] = std::cos(kPi * (k - 1) / n * (j - 0.5));
    out.push_back(numeric_pair(g, ev, std::move(v)));
  }
  return out;
}

std::vector<int> chain_soft_condition(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  std::vector<int> soft;
  for (int j = 1; j <= n; ++j) {
    long num = static_cast<long>(k - 1) * (2 * j - 1);
    if (num % n != 0) continue;
    long q = num / n;
    if (q >= 1 && q % 2 == 1) soft.push_back(j);
  }
  return soft;
}

}  // namespace softgraph
