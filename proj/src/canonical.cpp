#include "softgraph/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "softgraph/parallel.hpp"

namespace softgraph {

namespace {

// Adjacency as per-vertex bitmasks over 0-based vertices.
std::vector<uint8_t> adjacency_masks(const Graph& g) {
  std::vector<uint8_t> adj(g.n, 0);
  for (auto [i, j] : g.edges) {
    adj[i - 1] |= static_cast<uint8_t>(1u << (j - 1));
    adj[j - 1] |= static_cast<uint8_t>(1u << (i - 1));
  }
  return adj;
}

// Pair (a,b), a<b (0-based positions) has pair index k = b(b-1)/2 + a and
// is packed at bit M-1-k, so integer order equals lexicographic order of
// the bit-string read from the first pair.
struct CanonSearch {
  int n;
  int total_pairs;
  const std::vector<uint8_t>* adj;
  uint32_t best;
  std::vector<int> perm;  // perm[pos] = original vertex placed at pos
  std::vector<bool> used;

  void place(int pos, uint32_t bits) {
    if (pos == n) {
      if (bits < best) best = bits;
      return;
    }
    int placed_pairs = pos * (pos - 1) / 2;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      uint32_t nb = bits;
      for (int a = 0; a < pos; ++a)
        if ((*adj)[perm[a]] & (1u << v))
          nb |= 1u << (total_pairs - 1 - (placed_pairs + a));
      int undecided = total_pairs - (placed_pairs + pos);
      uint32_t decided_mask = ~((undecided >= 32) ? 0xffffffffu
                                                  : ((1u << undecided) - 1u));
      if ((nb & decided_mask) > (best & decided_mask)) continue;
      used[v] = true;
      perm[pos] = v;
      place(pos + 1, nb);
      used[v] = false;
    }
  }
};

}  // namespace

uint32_t canonical_bits(const Graph& g) {
  if (g.n > kCanonicalCap)
    throw std::invalid_argument("canonical form capped at n <= 8");
  if (!g.unit_weights())
    throw std::invalid_argument("canonical form needs unit weights");
  if (g.n <= 1) return 0;
  auto adj = adjacency_masks(g);
  CanonSearch s;
  s.n = g.n;
  s.total_pairs = g.n * (g.n - 1) / 2;
  s.adj = &adj;
  s.best = 0xffffffffu;
  s.perm.assign(g.n, -1);
  s.used.assign(g.n, false);
  s.place(0, 0);
  return s.best;
}

std::string canonical_form(const Graph& g) {
  uint32_t bits = canonical_bits(g);
  int m = g.n * (g.n - 1) / 2;
  std::string s = std::to_string(g.n) + ":";
  for (int k = 0; k < m; ++k) s += (bits & (1u << (m - 1 - k))) ? '1' : '0';
  return s;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_bits(a) == canonical_bits(b);
}

Graph graph_from_canonical_bits(int n, uint32_t bits) {
  int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  int k = 0;
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a, ++k)
      if (bits & (1u << (m - 1 - k))) edges.emplace_back(a + 1, b + 1);
  return Graph::build(n, std::move(edges));
}

namespace {

bool extend_map(const std::vector<uint8_t>& big_adj,
                const std::vector<std::vector<int>>& small_neigh, int pos,
                int small_n, std::vector<int>& map, std::vector<bool>& used) {
  if (pos == small_n) return true;
  int nb = static_cast<int>(big_adj.size());
  for (int w = 0; w < nb; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u : small_neigh[pos]) {
      if (u < pos && !(big_adj[w] & (1u << map[u]))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[pos] = w;
    used[w] = true;
    if (extend_map(big_adj, small_neigh, pos + 1, small_n, map, used)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool subgraph_contains(const Graph& big, const Graph& small) {
  if (small.n > big.n || small.edge_count() > big.edge_count()) return false;
  auto big_adj = adjacency_masks(big);
  std::vector<std::vector<int>> small_neigh(small.n);
  for (auto [i, j] : small.edges) {
    small_neigh[i - 1].push_back(j - 1);
    small_neigh[j - 1].push_back(i - 1);
  }
  std::vector<int> map(small.n, -1);
  std::vector<bool> used(big.n, false);
  return extend_map(big_adj, small_neigh, 0, small.n, map, used);
}

std::vector<Graph> enumerate_connected_graphs(int n, int threads) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > kCanonicalCap)
    throw std::invalid_argument("enumeration capped at n <= 8");
  std::vector<uint32_t> classes = {0};  // K1
  for (int size = 2; size <= n; ++size) {
    std::vector<Graph> parents;
    parents.reserve(classes.size());
    for (uint32_t bits : classes)
      parents.push_back(graph_from_canonical_bits(size - 1, bits));
    // every connected graph arises by attaching a new vertex to a
    // nonempty neighborhood of some connected graph one vertex smaller
    uint32_t subsets = (1u << (size - 1)) - 1;
    auto expand = [&](const Graph& p) {
      std::vector<uint32_t> out;
      out.reserve(subsets);
      for (uint32_t s = 1; s <= subsets; ++s) {
        auto edges = p.edges;
        for (int v = 0; v < size - 1; ++v)
          if (s & (1u << v)) edges.emplace_back(v + 1, size);
        out.push_back(canonical_bits(Graph::build(size, edges)));
      }
      return out;
    };
    auto chunks = parallel_map<Graph, std::vector<uint32_t>>(parents, expand, threads);
    std::vector<uint32_t> next;
    for (auto& c : chunks) next.insert(next.end(), c.begin(), c.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    classes = std::move(next);
  }
  std::vector<Graph> result;
  result.reserve(classes.size());
  for (uint32_t bits : classes) result.push_back(graph_from_canonical_bits(n, bits));
  return result;
}

}  // namespace softgraph
