#pragma once

#include <map>
#include <string>
#include <vector>

#include "softgraph/graph.hpp"

namespace softgraph {

// One classification row: `id&n&m&t1~t2~...`, each token two digits, each
// digit a vertex label ("42" is the edge {4,2}).
struct CatalogEntry {
  std::string id;       // verbatim row id, e.g. "16", "87B", "103"
  std::string full_id;  // "5.16" for the <=5-node file, "6.87B" for 6-node
  int n = 0;
  int m = 0;  // link count claimed by the row
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> flags;  // typos detected, never corrected
  bool parse_ok = true;            // edges usable (graph() will succeed)

  Graph graph() const;
};

std::vector<CatalogEntry> parse_catalog(const std::string& text);

struct Catalog {
  std::vector<CatalogEntry> small;  // graphs on 2..5 vertices, ids 1..30
  std::vector<CatalogEntry> six;    // 6-vertex graphs, ids 1..112 (+anomalies)

  static Catalog load(const std::string& data_dir);

  // Accepts "5.16", "6.35", "6.87B" or a bare small-table id like "16".
  const CatalogEntry* find(const std::string& id) const;
  Graph graph(const std::string& id) const;  // throws when unknown
};

std::string default_data_dir();

}  // namespace softgraph
