#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "softgraph/eigen.hpp"
#include "softgraph/graph.hpp"

namespace softgraph {

enum class TransformKind {
  Link,
  LinkJoin,
  Articulation,
  Soldering,
  RegularExpansion,
  SquareGadget,
  InsertSoftNodes,
  AddGlobalSoftNode,
  MatchingToggle,
  CartesianPair,
  ComplementPair,
};

std::string kind_name(TransformKind k);
bool kind_preserves_eigenvalue(TransformKind k);

// Eigenpair in exact arithmetic (S is Rat or Quad).
template <class S>
struct EPair {
  S lambda;
  std::vector<S> x;
};

template <class S>
struct TransformRecord {
  TransformKind kind;
  std::string params;
  Graph input;
  EPair<S> in_pair;
  Graph output;
  EPair<S> out_pair;
  bool verified = false;
  std::vector<std::string> flags;
};

using RatRecord = TransformRecord<Rat>;
using QuadRecord = TransformRecord<Quad>;

namespace detail {

template <class S>
void finish(TransformRecord<S>& rec) {
  rec.verified = exact_eigen_check(rec.output, rec.out_pair.lambda, rec.out_pair.x);
  if (!rec.output.connected()) rec.flags.push_back("output disconnected");
}

template <class S>
void require_pair(const Graph& g, const EPair<S>& p) {
  if (static_cast<int>(p.x.size()) != g.n)
    throw std::invalid_argument("eigenvector length != vertex count");
}

inline std::string lineage(const Graph& g, TransformKind k) {
  std::string base = g.label.empty() ? "g" : g.label;
  return base + "|" + kind_name(k);
}

}  // namespace detail

// ---- preserving transforms -------------------------------------------

// Toggle edge ij; requires x_i = x_j. Added edges get weight `w`.
template <class S>
TransformRecord<S> link_toggle(const Graph& g, const EPair<S>& p, int i, int j,
                               const Rat& w = Rat(1)) {
  detail::require_pair(g, p);
  TransformRecord<S> rec{TransformKind::Link,
                         "i=" + std::to_string(i) + " j=" + std::to_string(j),
                         g,
                         p,
                         {},
                         p,
                         false,
                         {}};
  if (i == j || i < 1 || j < 1 || i > g.n || j > g.n)
    throw std::invalid_argument("bad vertex pair");
  if (!(p.x[i - 1] == p.x[j - 1]))
    throw std::invalid_argument("link needs x_i = x_j");
  auto edges = g.edges;
  auto weights = g.weights;
  if (auto idx = g.edge_index(i, j)) {
    edges.erase(edges.begin() + *idx);
    weights.erase(weights.begin() + *idx);
  } else {
    edges.emplace_back(std::min(i, j), std::max(i, j));
    weights.push_back(w);
  }
  rec.output = Graph::build(g.n, std::move(edges), std::move(weights),
                            detail::lineage(g, rec.kind));
  detail::finish(rec);
  return rec;
}

// Disjoint union of g1,g2 plus edge (i in g1, j in g2); both graphs must
// afford lambda; y = x2_j*(x1,0) + x1_i*(0,x2), nonzero when x1_i or x2_j is.
template <class S>
TransformRecord<S> link_join(const Graph& g1, const EPair<S>& p1, int i,
                             const Graph& g2, const EPair<S>& p2, int j) {
  detail::require_pair(g1, p1);
  detail::require_pair(g2, p2);
  if (!(p1.lambda == p2.lambda))
    throw std::invalid_argument("link join needs matching eigenvalues");
  if (scalar_is_zero(p1.x[i - 1]) && scalar_is_zero(p2.x[j - 1]))
    throw std::invalid_argument("link join needs x1_i != 0 or x2_j != 0");
  std::vector<std::pair<int, int>> edges = g1.edges;
  std::vector<Rat> weights = g1.weights;
  for (size_t k = 0; k < g2.edges.size(); ++k) {
    edges.emplace_back(g2.edges[k].first + g1.n, g2.edges[k].second + g1.n);
    weights.push_back(g2.weights[k]);
  }
  edges.emplace_back(i, j + g1.n);
  weights.push_back(Rat(1));
  TransformRecord<S> rec;
  rec.kind = TransformKind::LinkJoin;
  rec.params = "i=" + std::to_string(i) + " j=" + std::to_string(j);
  rec.input = g1;
  rec.in_pair = p1;
  rec.output = Graph::build(g1.n + g2.n, std::move(edges), std::move(weights),
                            detail::lineage(g1, rec.kind));
  EPair<S> out;
  out.lambda = p1.lambda;
  out.x.assign(g1.n + g2.n, S(0));
  for (int v = 0; v < g1.n; ++v) out.x[v] = p2.x[j - 1] * p1.x[v];
  for (int v = 0; v < g2.n; ++v) out.x[g1.n + v] = p1.x[i - 1] * p2.x[v];
  rec.out_pair = std::move(out);
  detail::finish(rec);
  return rec;
}

// Pendant vertex n+1 attached to soft vertex i; eigenvector extended by 0.
template <class S>
TransformRecord<S> articulation(const Graph& g, const EPair<S>& p, int i,
                                const Rat& w = Rat(1)) {
  detail::require_pair(g, p);
  if (i < 1 || i > g.n) throw std::invalid_argument("bad vertex");
  if (!scalar_is_zero(p.x[i - 1]))
    throw std::invalid_argument("articulation needs x_i = 0");
  auto edges = g.edges;
  auto weights = g.weights;
  edges.emplace_back(i, g.n + 1);
  weights.push_back(w);
  TransformRecord<S> rec;
  rec.kind = TransformKind::Articulation;
  rec.params = "i=" + std::to_string(i);
  rec.input = g;
  rec.in_pair = p;
  rec.output = Graph::build(g.n + 1, std::move(edges), std::move(weights),
                            detail::lineage(g, rec.kind));
  rec.out_pair = p;
  rec.out_pair.x.push_back(S(0));
  detail::finish(rec);
  return rec;
}

// Contract soft vertices i and j (x_i = x_j = 0, no common neighbors, not
// adjacent); j is removed and higher vertices shift down.
template <class S>
TransformRecord<S> soldering(const Graph& g, const EPair<S>& p, int i, int j) {
  detail::require_pair(g, p);
  if (i == j || i < 1 || j < 1 || i > g.n || j > g.n)
    throw std::invalid_argument("bad vertex pair");
  if (i > j) std::swap(i, j);
  if (!scalar_is_zero(p.x[i - 1]) || !scalar_is_zero(p.x[j - 1]))
    throw std::invalid_argument("soldering needs x_i = x_j = 0");
  if (g.has_edge(i, j))
    throw std::invalid_argument("soldering of adjacent vertices would create a loop");
  for (int v = 1; v <= g.n; ++v)
    if (v != i && v != j && g.has_edge(i, v) && g.has_edge(j, v))
      throw std::invalid_argument("soldering needs no common neighbors");
  auto relabel = [&](int v) {
    if (v == j) return i;
    return v > j ? v - 1 : v;
  };
  std::vector<std::pair<int, int>> edges;
  std::vector<Rat> weights;
  for (size_t k = 0; k < g.edges.size(); ++k) {
    int a = relabel(g.edges[k].first);
    int b = relabel(g.edges[k].second);
    edges.emplace_back(a, b);
    weights.push_back(g.weights[k]);
  }
  TransformRecord<S> rec;
  rec.kind = TransformKind::Soldering;
  rec.params = "i=" + std::to_string(i) + " j=" + std::to_string(j);
  rec.input = g;
  rec.in_pair = p;
  rec.output = Graph::build(g.n - 1, std::move(edges), std::move(weights),
                            detail::lineage(g, rec.kind));
  rec.out_pair.lambda = p.lambda;
  for (int v = 1; v <= g.n; ++v)
    if (v != j) rec.out_pair.x.push_back(p.x[v - 1]);
  detail::finish(rec);
  return rec;
}

// Replace vertex i (adjacent only to p soft nodes, lambda = p) by a
// d-regular graph on k vertices, all tied to those soft nodes. New values
// default to x_i/k; explicit `values` must satisfy the general-solution
// conditions (d*y_v = sum of internal neighbors, sum y = x_i).
template <class S>
TransformRecord<S> regular_expansion(const Graph& g, const EPair<S>& p, int i,
                                     int k, int d, const Graph& adj,
                                     const std::vector<S>& values = {}) {
  detail::require_pair(g, p);
  if (i < 1 || i > g.n) throw std::invalid_argument("bad vertex");
  if (adj.n != k) throw std::invalid_argument("adjacency graph must have k vertices");
  for (int deg : adj.degrees())
    if (deg != d) throw std::invalid_argument("adjacency graph is not d-regular");
  if (!adj.unit_weights())
    throw std::invalid_argument("expansion adjacency must be unit weighted");
  std::vector<int> soft_neigh;
  for (int v = 1; v <= g.n; ++v) {
    if (v == i || !g.has_edge(i, v)) continue;
    if (!scalar_is_zero(p.x[v - 1]))
      throw std::invalid_argument("vertex has a non-soft neighbor");
    if (g.weight(i, v) != 1)
      throw std::invalid_argument("expansion needs unit weights at the vertex");
    soft_neigh.push_back(v);
  }
  int pcount = static_cast<int>(soft_neigh.size());
  if (!(p.lambda == S(pcount)))
    throw std::invalid_argument("expansion needs lambda = number of soft neighbors");

  std::vector<S> newvals = values;
  if (newvals.empty()) {
    newvals.assign(k, p.x[i - 1] / S(k));
  } else {
    if (static_cast<int>(newvals.size()) != k)
      throw std::invalid_argument("value list length != k");
    S total(0);
    for (const S& y : newvals) total += y;
    if (!(total == p.x[i - 1]))
      throw std::invalid_argument("values must sum to x_i");
    for (int v = 1; v <= k; ++v) {
      S acc(0);
      for (int u = 1; u <= k; ++u)
        if (adj.has_edge(v, u)) acc += newvals[u - 1];
      if (!(S(d) * newvals[v - 1] == acc))
        throw std::invalid_argument("values violate the regularity condition");
    }
  }

  auto relabel = [&](int v) { return v > i ? v - 1 : v; };
  std::vector<std::pair<int, int>> edges;
  std::vector<Rat> weights;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    if (a == i || b == i) continue;
    edges.emplace_back(relabel(a), relabel(b));
    weights.push_back(g.weights[e]);
  }
  int base = g.n - 1;
  for (int v = 1; v <= k; ++v)
    for (int s : soft_neigh) {
      edges.emplace_back(relabel(s), base + v);
      weights.push_back(Rat(1));
    }
  for (auto [a, b] : adj.edges) {
    edges.emplace_back(base + a, base + b);
    weights.push_back(Rat(1));
  }
  TransformRecord<S> rec;
  rec.kind = TransformKind::RegularExpansion;
  rec.params = "i=" + std::to_string(i) + " k=" + std::to_string(k) +
               " d=" + std::to_string(d);
  rec.input = g;
  rec.in_pair = p;
  rec.output = Graph::build(base + k, std::move(edges), std::move(weights),
                            detail::lineage(g, rec.kind));
  rec.out_pair.lambda = p.lambda;
  for (int v = 1; v <= g.n; ++v)
    if (v != i) rec.out_pair.x.push_back(p.x[v - 1]);
  for (const S& y : newvals) rec.out_pair.x.push_back(y);
  detail::finish(rec);
  return rec;
}

// Replace edge ij (x_i = -x_j) by a square through two new soft vertices.
// The two parallel routes carry weights 2*alpha*w and 2*(1-alpha)*w, the
// split that keeps the eigen-relation exact on both endpoints; alpha=1/2
// reproduces the unit square for a unit edge. alpha in (0,1) strictly.
template <class S>
TransformRecord<S> square_gadget(const Graph& g, const EPair<S>& p, int i, int j,
                                 const Rat& alpha) {
  detail::require_pair(g, p);
  auto idx = g.edge_index(i, j);
  if (!idx) throw std::invalid_argument("square gadget needs an existing edge");
  if (!(p.x[i - 1] == -p.x[j - 1]))
    throw std::invalid_argument("square gadget needs x_i = -x_j");
  if (alpha <= 0 || alpha >= 1)
    throw std::invalid_argument("alpha must lie strictly inside (0,1)");
  Rat w = g.weights[*idx];
  auto edges = g.edges;
  auto weights = g.weights;
  edges.erase(edges.begin() + *idx);
  weights.erase(weights.begin() + *idx);
  int kv = g.n + 1, lv = g.n + 2;
  Rat wk = 2 * alpha * w, wl = 2 * (1 - alpha) * w;
  edges.emplace_back(i, kv);
  weights.push_back(wk);
  edges.emplace_back(j, kv);
  weights.push_back(wk);
  edges.emplace_back(i, lv);
  weights.push_back(wl);
  edges.emplace_back(j, lv);
  weights.push_back(wl);
  TransformRecord<S> rec;
  rec.kind = TransformKind::SquareGadget;
  rec.params = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
               " alpha=" + rat_str(alpha);
  rec.input = g;
  rec.in_pair = p;
  rec.output = Graph::build(g.n + 2, std::move(edges), std::move(weights),
                            detail::lineage(g, rec.kind));
  rec.out_pair = p;
  rec.out_pair.x.push_back(S(0));
  rec.out_pair.x.push_back(S(0));
  detail::finish(rec);
  return rec;
}

// ---- shifting transforms ---------------------------------------------

// k soft vertices between every pair of an antisymmetric pairing of the
// nonzero entries; edges carry weight w. New eigenvalue lambda + k*w.
template <class S>
TransformRecord<S> insert_soft_nodes(const Graph& g, const EPair<S>& p,
                                     const std::vector<std::pair<int, int>>& pairing,
                                     int k, const Rat& w = Rat(1)) {
  detail::require_pair(g, p);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (w <= 0) throw std::invalid_argument("weight must be positive");
  std::vector<bool> covered(g.n + 1, false);
  for (auto [i, j] : pairing) {
    if (i < 1 || j < 1 || i > g.n || j > g.n || i == j)
      throw std::invalid_argument("bad pairing");
    if (covered[i] || covered[j]) throw std::invalid_argument("pairing not disjoint");
    covered[i] = covered[j] = true;
    if (!(p.x[i - 1] == -p.x[j - 1]) || scalar_is_zero(p.x[i - 1]))
      throw std::invalid_argument("pairing needs x_i = -x_j != 0");
  }
  for (int v = 1; v <= g.n; ++v)
    if (!covered[v] && !scalar_is_zero(p.x[v - 1]))
      throw std::invalid_argument("pairing must cover every nonzero vertex");
  auto edges = g.edges;
  auto weights = g.weights;
  int next = g.n;
  for (auto [i, j] : pairing)
    for (int c = 0; c < k; ++c) {
      ++next;
      edges.emplace_back(i, next);
      weights.push_back(w);
      edges.emplace_back(j, next);
      weights.push_back(w);
    }
  TransformRecord<S> rec;
  rec.kind = TransformKind::InsertSoftNodes;
  std::ostringstream ps;
  ps << "k=" << k;
  if (w != 1) ps << " w=" << rat_str(w);
  for (auto [i, j] : pairing) ps << " " << i << "-" << j;
  rec.params = ps.str();
  rec.input = g;
  rec.in_pair = p;
  rec.output = Graph::build(next, std::move(edges), std::move(weights),
                            detail::lineage(g, rec.kind));
  rec.out_pair.lambda = p.lambda + S(Rat(k) * w);
  rec.out_pair.x = p.x;
  rec.out_pair.x.resize(next, S(0));
  detail::finish(rec);
  return rec;
}

// New vertex adjacent to every old vertex; lambda != 0 becomes lambda + 1.
template <class S>
TransformRecord<S> add_global_soft_node(const Graph& g, const EPair<S>& p) {
  detail::require_pair(g, p);
  if (scalar_is_zero(p.lambda))
    throw std::invalid_argument("addition of a soft node needs lambda != 0");
  auto edges = g.edges;
  auto weights = g.weights;
  for (int v = 1; v <= g.n; ++v) {
    edges.emplace_back(v, g.n + 1);
    weights.push_back(Rat(1));
  }
  TransformRecord<S> rec;
  rec.kind = TransformKind::AddGlobalSoftNode;
  rec.input = g;
  rec.in_pair = p;
  rec.output = Graph::build(g.n + 1, std::move(edges), std::move(weights),
                            detail::lineage(g, rec.kind));
  rec.out_pair.lambda = p.lambda + S(1);
  rec.out_pair.x = p.x;
  rec.out_pair.x.push_back(S(0));
  detail::finish(rec);
  return rec;
}

// Add (mode=true) or delete an alternate perfect matching; lambda +- 2.
template <class S>
TransformRecord<S> matching_toggle(const Graph& g, const EPair<S>& p,
                                   const std::vector<std::pair<int, int>>& matching,
                                   bool add) {
  detail::require_pair(g, p);
  std::vector<bool> covered(g.n + 1, false);
  for (auto [i, j] : matching) {
    if (i < 1 || j < 1 || i > g.n || j > g.n || i == j)
      throw std::invalid_argument("bad matching pair");
    if (covered[i] || covered[j])
      throw std::invalid_argument("matching pairs must be disjoint");
    covered[i] = covered[j] = true;
    if (scalar_is_zero(p.x[i - 1]) || !(p.x[i - 1] == -p.x[j - 1]))
      throw std::invalid_argument("matching needs v_i = -v_j != 0");
    if (add && g.has_edge(i, j))
      throw std::invalid_argument("matching edge already present");
    if (!add && !g.has_edge(i, j))
      throw std::invalid_argument("matching edge not present");
    if (!add && g.weight(i, j) != 1)
      throw std::invalid_argument("matching toggle needs unit edges");
  }
  for (int v = 1; v <= g.n; ++v)
    if (!covered[v] && !scalar_is_zero(p.x[v - 1]))
      throw std::invalid_argument("matching must cover every nonzero vertex");
  auto edges = g.edges;
  auto weights = g.weights;
  for (auto [i, j] : matching) {
    if (add) {
      edges.emplace_back(std::min(i, j), std::max(i, j));
      weights.push_back(Rat(1));
    } else {
      auto idx = Graph::build(g.n, edges, weights).edge_index(i, j);
      edges.erase(edges.begin() + *idx);
      weights.erase(weights.begin() + *idx);
    }
  }
  TransformRecord<S> rec;
  rec.kind = TransformKind::MatchingToggle;
  std::ostringstream ps;
  ps << (add ? "+" : "-");
  for (auto [i, j] : matching) ps << " " << i << "-" << j;
  rec.params = ps.str();
  rec.input = g;
  rec.in_pair = p;
  rec.output = Graph::build(g.n, std::move(edges), std::move(weights),
                            detail::lineage(g, rec.kind));
  rec.out_pair.lambda = add ? S(p.lambda + S(2)) : S(p.lambda - S(2));
  rec.out_pair.x = p.x;
  detail::finish(rec);
  return rec;
}

// Kronecker eigenpair x (x) y on the cartesian product, eigenvalue mu+nu.
template <class S>
TransformRecord<S> product_eigenpair(const Graph& g, const EPair<S>& pg,
                                     const Graph& h, const EPair<S>& ph) {
  detail::require_pair(g, pg);
  detail::require_pair(h, ph);
  TransformRecord<S> rec;
  rec.kind = TransformKind::CartesianPair;
  rec.input = g;
  rec.in_pair = pg;
  rec.output = cartesian_product(g, h);
  rec.output.label = detail::lineage(g, rec.kind);
  rec.out_pair.lambda = pg.lambda + ph.lambda;
  rec.out_pair.x.assign(g.n * h.n, S(0));
  for (int v = 1; v <= g.n; ++v)
    for (int w = 1; w <= h.n; ++w)
      rec.out_pair.x[product_vertex(g, h, v, w) - 1] = pg.x[v - 1] * ph.x[w - 1];
  detail::finish(rec);
  return rec;
}

// Same eigenvector on the complement, eigenvalue n - lambda (lambda != 0).
template <class S>
TransformRecord<S> complement_eigenpair(const Graph& g, const EPair<S>& p) {
  detail::require_pair(g, p);
  if (scalar_is_zero(p.lambda))
    throw std::invalid_argument("complement pair needs lambda != 0");
  TransformRecord<S> rec;
  rec.kind = TransformKind::ComplementPair;
  rec.input = g;
  rec.in_pair = p;
  rec.output = g.complement();
  rec.output.label = detail::lineage(g, rec.kind);
  rec.out_pair.lambda = S(g.n) - p.lambda;
  rec.out_pair.x = p.x;
  if (rec.out_pair.lambda == S(0))
    rec.flags.push_back("degenerate: n - lambda = 0");
  detail::finish(rec);
  return rec;
}

// All antisymmetric perfect pairings of the nonzero entries of x
// (brute force, intended for up to ~12 nonzero entries).
template <class S>
void collect_pairings(const std::vector<S>& x, std::vector<bool>& used,
                      std::vector<std::pair<int, int>>& cur,
                      std::vector<std::vector<std::pair<int, int>>>& out) {
  int n = static_cast<int>(x.size());
  int first = -1;
  for (int v = 0; v < n; ++v)
    if (!used[v] && !scalar_is_zero(x[v])) {
      first = v;
      break;
    }
  if (first < 0) {
    out.push_back(cur);
    return;
  }
  used[first] = true;
  for (int w = first + 1; w < n; ++w) {
    if (used[w] || scalar_is_zero(x[w])) continue;
    if (!(x[w] == -x[first])) continue;
    used[w] = true;
    cur.emplace_back(first + 1, w + 1);
    collect_pairings(x, used, cur, out);
    cur.pop_back();
    used[w] = false;
  }
  used[first] = false;
}

template <class S>
std::vector<std::vector<std::pair<int, int>>> antisymmetric_pairings(
    const std::vector<S>& x) {
  std::vector<bool> used(x.size(), false);
  std::vector<std::pair<int, int>> cur;
  std::vector<std::vector<std::pair<int, int>>> out;
  collect_pairings(x, used, cur, out);
  return out;
}

// ---- transformation scripts ------------------------------------------

struct ScriptStep {
  std::string op;  // LINK, ART, SOLDER, EXPAND, SQUARE, INSERT, ADDSOFT,
                   // MATCH, COMPLEMENT
  std::vector<int> ints;
  std::vector<std::pair<int, int>> pairs;
  Rat ratio;        // SQUARE alpha
  bool add = true;  // MATCH direction
};

std::vector<ScriptStep> parse_transform_script(const std::string& text);

// Applies a script to (graph, rational eigenpair), one record per step.
std::vector<RatRecord> apply_script(const Graph& g, const EPair<Rat>& start,
                                    const std::vector<ScriptStep>& steps);

// Canonical d-regular adjacency used by scripted EXPAND: empty (d=0),
// perfect matching (d=1), cycle (d=2), complement patterns above that.
Graph circulant_regular(int k, int d);

}  // namespace softgraph
