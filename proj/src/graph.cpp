#include "softgraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace softgraph {

Graph Graph::build(int n, std::vector<std::pair<int, int>> edges,
                   std::vector<Rat> weights, std::string label) {
  if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
  if (!weights.empty() && weights.size() != edges.size())
    throw std::invalid_argument("weight list length != edge list length");
  Graph g;
  g.n = n;
  g.label = std::move(label);
  std::map<std::pair<int, int>, Rat> norm;
  for (size_t k = 0; k < edges.size(); ++k) {
    auto [i, j] = edges[k];
    if (i == j) throw std::invalid_argument("loop edge " + std::to_string(i));
    if (i < 1 || i > n || j < 1 || j > n)
      throw std::invalid_argument("vertex out of range in edge " +
                                  std::to_string(i) + "-" + std::to_string(j));
    if (i > j) std::swap(i, j);
    Rat w = weights.empty() ? Rat(1) : weights[k];
    if (w <= 0) throw std::invalid_argument("non-positive edge weight");
    if (norm.count({i, j}))
      throw std::invalid_argument("duplicate edge " + std::to_string(i) + "-" +
                                  std::to_string(j));
    norm[{i, j}] = w;
  }
  for (auto& [e, w] : norm) {
    g.edges.push_back(e);
    g.weights.push_back(w);
  }
  return g;
}

bool Graph::unit_weights() const {
  for (const Rat& w : weights)
    if (w != 1) return false;
  return true;
}

std::optional<int> Graph::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
  if (it != edges.end() && *it == std::make_pair(i, j))
    return static_cast<int>(it - edges.begin());
  return std::nullopt;
}

bool Graph::has_edge(int i, int j) const { return edge_index(i, j).has_value(); }

Rat Graph::weight(int i, int j) const {
  auto idx = edge_index(i, j);
  return idx ? weights[*idx] : Rat(0);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n + 1, 0);
  for (auto [i, j] : edges) {
    ++d[i];
    ++d[j];
  }
  d.erase(d.begin());
  return d;
}

std::vector<Rat> Graph::weighted_degrees() const {
  std::vector<Rat> d(n + 1, Rat(0));
  for (size_t k = 0; k < edges.size(); ++k) {
    d[edges[k].first] += weights[k];
    d[edges[k].second] += weights[k];
  }
  d.erase(d.begin());
  return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

bool Graph::connected() const {
  if (n == 1) return true;
  auto adj = adjacency();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

Mat<Rat> Graph::laplacian() const {
  Mat<Rat> L(n, n);
  for (size_t k = 0; k < edges.size(); ++k) {
    auto [i, j] = edges[k];
    const Rat& w = weights[k];
    L.at(i - 1, j - 1) -= w;
    L.at(j - 1, i - 1) -= w;
    L.at(i - 1, i - 1) += w;
    L.at(j - 1, j - 1) += w;
  }
  return L;
}

Graph Graph::complement() const {
  if (!unit_weights())
    throw std::invalid_argument("complement is defined for unit weights only");
  std::vector<std::pair<int, int>> ce;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!has_edge(i, j)) ce.emplace_back(i, j);
  return build(n, std::move(ce), {}, label.empty() ? "" : label + "^c");
}

int product_vertex(const Graph& /*g*/, const Graph& h, int v, int w) {
  return (v - 1) * h.n + w;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (!g.unit_weights() || !h.unit_weights())
    throw std::invalid_argument("cartesian product needs unit weights");
  std::vector<std::pair<int, int>> pe;
  for (int v = 1; v <= g.n; ++v)
    for (auto [w1, w2] : h.edges)
      pe.emplace_back(product_vertex(g, h, v, w1), product_vertex(g, h, v, w2));
  for (int w = 1; w <= h.n; ++w)
    for (auto [v1, v2] : g.edges)
      pe.emplace_back(product_vertex(g, h, v1, w), product_vertex(g, h, v2, w));
  return Graph::build(g.n * h.n, std::move(pe));
}

Graph parse_graph_text(const std::string& text, const std::string& label) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rat> weights;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (ls >> n) continue;
      continue;  // skip leading blank lines
    }
    int i, j;
    if (!(ls >> i >> j)) continue;
    std::string w;
    if (ls >> w) {
      weights.resize(edges.size(), Rat(1));
      weights.push_back(parse_rational(w));
    } else if (!weights.empty()) {
      weights.push_back(Rat(1));
    }
    edges.emplace_back(i, j);
  }
  if (n < 1) throw std::invalid_argument("graph text missing vertex count");
  return Graph::build(n, std::move(edges), std::move(weights), label);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str(), path);
}

std::string graph_file_text(const Graph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (size_t k = 0; k < g.edges.size(); ++k) {
    out << g.edges[k].first << " " << g.edges[k].second;
    if (g.weights[k] != 1) out << " " << rat_str(g.weights[k]);
    out << "\n";
  }
  return out.str();
}

std::string to_dot(const Graph& g, const std::vector<std::string>& vertex_values,
                   const std::vector<int>& bold_vertices) {
  std::ostringstream out;
  out << "graph \"" << (g.label.empty() ? "G" : g.label) << "\" {\n";
  std::vector<bool> bold(g.n + 1, false);
  for (int v : bold_vertices) bold[v] = true;
  for (int i = 1; i <= g.n; ++i) {
    out << "  " << i << " [label=\"" << i;
    if (static_cast<int>(vertex_values.size()) >= i && !vertex_values[i - 1].empty())
      out << "\\n" << vertex_values[i - 1];
    out << "\"";
    if (bold[i]) out << ", style=bold, penwidth=2";
    out << "];\n";
  }
  for (size_t k = 0; k < g.edges.size(); ++k) {
    out << "  " << g.edges[k].first << " -- " << g.edges[k].second;
    if (g.weights[k] != 1) out << " [label=\"" << rat_str(g.weights[k]) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace softgraph
