#pragma once

#include <string>
#include <vector>

#include "softgraph/catalog.hpp"
#include "softgraph/eigen.hpp"
#include "softgraph/graph.hpp"
#include "softgraph/transforms.hpp"

namespace softgraph {

struct SoftFamilyEntry {
  Graph graph;             // canonical representative, unit weights
  std::string catalog_id;  // matched classification id, "" when none
  Int lambda;
  std::vector<int> soft_vertices;
  std::vector<std::vector<Rat>> witnesses;  // one per soft vertex, exact
  std::vector<std::vector<Rat>> eigenspace; // full basis at lambda
  bool is_minimal = false;
};

struct ProvenanceEdge {
  int from = -1;
  int to = -1;
  TransformKind kind;
  std::string params;
  int lambda_shift = 0;  // 0 for preserving transforms
};

struct Family {
  Int lambda;
  int n_max = 6;
  std::vector<SoftFamilyEntry> entries;  // sorted by (n, canonical bits)
  std::vector<ProvenanceEdge> edges;
};

// Every connected graph class up to n_max whose Laplacian affords the
// integer eigenvalue lambda with at least one soft node.
Family lambda_soft_family(const Int& lambda, int n_max, const Catalog* catalog,
                          int threads = 0);

// Minimality under "subgraph by vertex/edge deletions, connected".
void mark_minimal(Family& family);
std::vector<const SoftFamilyEntry*> minimal_members(const Family& family);

// Single-step transform edges between family members (preserving kinds,
// plus two-copy link joins); appended to family.edges and returned.
std::vector<ProvenanceEdge>& discover_edges(Family& family, int threads = 0);

// Cross-family edges for the shifting transforms (insert +k, add soft +1,
// matching +-2, complement n-lambda).
std::vector<ProvenanceEdge> discover_shift_edges(const Family& from,
                                                 const Family& to);

// Hop distances from `root` (entry index) along family.edges; -1 when
// unreachable.
std::vector<int> reachability(const Family& family, int root);

std::string emit_landscape_json(const Family& family);
std::string emit_landscape_dot(const Family& family);
std::string emit_landscape_text(const Family& family);

// All d-regular adjacency patterns (possibly disconnected) on k vertices,
// one per isomorphism class; used by expansion parameter sweeps.
std::vector<Graph> regular_graphs(int k, int d);

}  // namespace softgraph
