#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "softgraph/matrix.hpp"
#include "softgraph/rational.hpp"

namespace softgraph {

// Weighted simple graph. Vertices are 1-indexed (1..n) at every interface;
// edges are stored normalized as (i,j) with i<j, sorted, duplicate free.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rat> weights;  // parallel to edges, every entry > 0
  std::string label;

  // Validates and normalizes. Throws std::invalid_argument on loops,
  // duplicates, out-of-range vertices or non-positive weights.
  static Graph build(int n, std::vector<std::pair<int, int>> edges,
                     std::vector<Rat> weights = {}, std::string label = {});

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool unit_weights() const;
  bool has_edge(int i, int j) const;
  std::optional<int> edge_index(int i, int j) const;
  Rat weight(int i, int j) const;  // 0 when not adjacent

  std::vector<int> degrees() const;            // incident edge counts
  std::vector<Rat> weighted_degrees() const;   // incident weight sums
  std::vector<std::vector<int>> adjacency() const;
  bool connected() const;

  Mat<Rat> laplacian() const;

  // Unit-weight graphs only (throws otherwise); result may be disconnected.
  Graph complement() const;
};

// Cartesian product; both factors must be unit weighted. Vertex (v,w) maps
// to index (v-1)*|W| + w, i.e. lexicographic in (v,w).
Graph cartesian_product(const Graph& g, const Graph& h);

int product_vertex(const Graph& g, const Graph& h, int v, int w);

// File format: first line "n", then one edge per line "i j" or "i j p/q".
Graph read_graph_file(const std::string& path);
Graph parse_graph_text(const std::string& text, const std::string& label = {});
std::string graph_file_text(const Graph& g);

// DOT export; optional per-vertex value annotations and bold vertex set.
std::string to_dot(const Graph& g,
                   const std::vector<std::string>& vertex_values = {},
                   const std::vector<int>& bold_vertices = {});

}  // namespace softgraph
