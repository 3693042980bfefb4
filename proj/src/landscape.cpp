#include "softgraph/landscape.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "softgraph/canonical.hpp"
#include "softgraph/parallel.hpp"

namespace softgraph {

Family lambda_soft_family(const Int& lambda, int n_max, const Catalog* catalog,
                          int threads) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  Family fam;
  fam.lambda = lambda;
  fam.n_max = n_max;

  std::map<uint32_t, std::string> small_ids, six_ids;
  if (catalog) {
    for (const auto& e : catalog->small)
      if (e.parse_ok) small_ids.emplace(canonical_bits(e.graph()), e.full_id);
    for (const auto& e : catalog->six)
      if (e.parse_ok) six_ids.emplace(canonical_bits(e.graph()), e.full_id);
  }

  for (int n = 1; n <= n_max; ++n) {
    auto classes = enumerate_connected_graphs(n, threads);
    auto probe = [&](const Graph& g) -> SoftFamilyEntry {
      SoftFamilyEntry entry;
      IntPoly cp = char_poly(g.laplacian());
      if (cp.eval(lambda) != 0) return entry;  // lambda not an eigenvalue
      Eigenvalue ev = Eigenvalue::of_integer(lambda);
      SoftNodeReport rep = soft_nodes(g, ev);
      if (rep.soft_vertices.empty()) return entry;
      entry.graph = g;
      entry.lambda = lambda;
      entry.soft_vertices = rep.soft_vertices;
      for (auto& w : rep.witnesses) entry.witnesses.push_back(w.vec.r);
      entry.eigenspace = rational_eigenspace(g, lambda);
      return entry;
    };
    auto found = parallel_map<Graph, SoftFamilyEntry>(classes, probe, threads);
    for (auto& entry : found) {
      if (entry.graph.n == 0) continue;
      uint32_t bits = canonical_bits(entry.graph);
      if (entry.graph.n <= 5 && small_ids.count(bits))
        entry.catalog_id = small_ids[bits];
      else if (entry.graph.n == 6 && six_ids.count(bits))
        entry.catalog_id = six_ids[bits];
      entry.graph.label = entry.catalog_id.empty()
                              ? "n" + std::to_string(entry.graph.n)
                              : entry.catalog_id;
      fam.entries.push_back(std::move(entry));
    }
  }
  mark_minimal(fam);
  return fam;
}

void mark_minimal(Family& fam) {
  for (auto& e : fam.entries) e.is_minimal = true;
  for (size_t i = 0; i < fam.entries.size(); ++i) {
    const Graph& big = fam.entries[i].graph;
    for (size_t j = 0; j < fam.entries.size(); ++j) {
      if (i == j) continue;
      const Graph& small = fam.entries[j].graph;
      bool proper = small.n < big.n ||
                    (small.n == big.n && small.edge_count() < big.edge_count());
      if (!proper) continue;
      if (subgraph_contains(big, small)) {
        fam.entries[i].is_minimal = false;
        break;
      }
    }
  }
}

std::vector<const SoftFamilyEntry*> minimal_members(const Family& fam) {
  std::vector<const SoftFamilyEntry*> out;
  for (const auto& e : fam.entries)
    if (e.is_minimal) out.push_back(&e);
  return out;
}

std::vector<Graph> regular_graphs(int k, int d) {
  std::vector<Graph> out;
  std::vector<uint32_t> seen;
  int pairs = k * (k - 1) / 2;
  for (uint32_t bits = 0; bits < (1u << pairs); ++bits) {
    Graph g = graph_from_canonical_bits(k, bits);
    bool ok = true;
    for (int deg : g.degrees()) ok = ok && deg == d;
    if (!ok) continue;
    uint32_t canon = canonical_bits(g);
    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
    seen.push_back(canon);
    out.push_back(graph_from_canonical_bits(k, canon));
  }
  return out;
}

namespace {

// Deterministic witness set: the per-soft-vertex witnesses plus the
// eigenspace basis, deduplicated.
std::vector<std::vector<Rat>> witness_set(const SoftFamilyEntry& e) {
  std::vector<std::vector<Rat>> ws = e.witnesses;
  for (const auto& b : e.eigenspace) ws.push_back(b);
  std::sort(ws.begin(), ws.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rat& x, const Rat& y) { return x < y; });
  });
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

}  // namespace

std::vector<ProvenanceEdge>& discover_edges(Family& fam, int threads) {
  std::map<uint32_t, int> index;
  for (size_t i = 0; i < fam.entries.size(); ++i)
    index.emplace(canonical_bits(fam.entries[i].graph), static_cast<int>(i));

  std::vector<int> order(fam.entries.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

  auto probe = [&](int ei) {
    std::vector<ProvenanceEdge> found;
    const SoftFamilyEntry& e = fam.entries[ei];
    const Graph& g = e.graph;
    auto record = [&](const RatRecord& rec) {
      if (!rec.verified || !rec.output.connected()) return;
      if (rec.output.n > fam.n_max || !rec.output.unit_weights()) return;
      // the carried eigenvector must witness softness in the result
      bool has_zero = false;
      for (const Rat& v : rec.out_pair.x) has_zero = has_zero || v == 0;
      if (!has_zero) return;
      auto it = index.find(canonical_bits(rec.output));
      if (it == index.end() || it->second == ei) return;
      found.push_back({ei, it->second, rec.kind, rec.params, 0});
    };
    for (const auto& w : witness_set(e)) {
      EPair<Rat> pair{Rat(e.lambda), w};
      for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j) {
          if (w[i - 1] == w[j - 1]) {
            try { record(link_toggle(g, pair, i, j)); } catch (const std::exception&) {}
          }
          if (w[i - 1] == -w[j - 1] && w[i - 1] != 0 && g.has_edge(i, j) &&
              g.n + 2 <= fam.n_max) {
            try { record(square_gadget(g, pair, i, j, Rat(1, 2))); } catch (const std::exception&) {}
          }
          if (w[i - 1] == 0 && w[j - 1] == 0 && g.n - 1 >= 1) {
            try { record(soldering(g, pair, i, j)); } catch (const std::exception&) {}
          }
        }
      for (int i = 1; i <= g.n; ++i) {
        if (w[i - 1] == 0 && g.n + 1 <= fam.n_max) {
          try { record(articulation(g, pair, i)); } catch (const std::exception&) {}
        }
        // expansion: vertex adjacent only to soft vertices, lambda = degree
        bool all_soft = true;
        int deg = 0;
        for (int v = 1; v <= g.n; ++v)
          if (g.has_edge(i, v)) {
            ++deg;
            all_soft = all_soft && w[v - 1] == 0;
          }
        if (!all_soft || Rat(e.lambda) != deg) continue;
        for (int k = 2; g.n - 1 + k <= fam.n_max; ++k)
          for (int d = 0; d < k; ++d)
            for (const Graph& adj : regular_graphs(k, d)) {
              try { record(regular_expansion(g, pair, i, k, d, adj)); } catch (const std::exception&) {}
            }
      }
    }
    // two-copy link joins (the paper's "link between two X" notes)
    for (size_t oj = 0; oj < fam.entries.size(); ++oj) {
      const SoftFamilyEntry& o = fam.entries[oj];
      if (g.n + o.graph.n > fam.n_max) continue;
      for (const auto& w1 : witness_set(e))
        for (const auto& w2 : witness_set(o)) {
          EPair<Rat> p1{Rat(e.lambda), w1}, p2{Rat(o.lambda), w2};
          for (int i = 1; i <= g.n; ++i)
            for (int j = 1; j <= o.graph.n; ++j) {
              if (w1[i - 1] == 0 && w2[j - 1] == 0) continue;
              try {
                RatRecord rec = link_join(g, p1, i, o.graph, p2, j);
                rec.params += " with " + (o.catalog_id.empty() ? "entry" : o.catalog_id);
                record(rec);
              } catch (const std::exception&) {}
            }
        }
    }
    return found;
  };

  auto chunks = parallel_map<int, std::vector<ProvenanceEdge>>(order, probe, threads);
  std::vector<ProvenanceEdge> all;
  for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
  // dedupe by (from, to, kind); keep the first parameter set
  std::vector<ProvenanceEdge> dedup;
  for (auto& e : all) {
    bool seen = false;
    for (auto& d : dedup)
      seen = seen || (d.from == e.from && d.to == e.to && d.kind == e.kind);
    if (!seen) dedup.push_back(e);
  }
  fam.edges = std::move(dedup);
  return fam.edges;
}

std::vector<ProvenanceEdge> discover_shift_edges(const Family& from, const Family& to) {
  std::map<uint32_t, int> index;
  for (size_t i = 0; i < to.entries.size(); ++i)
    index.emplace(canonical_bits(to.entries[i].graph), static_cast<int>(i));
  long shift = Int(to.lambda - from.lambda).get_si();
  std::vector<ProvenanceEdge> out;
  auto record = [&](int ei, const RatRecord& rec) {
    if (!rec.verified || !rec.output.connected()) return;
    if (rec.output.n > to.n_max || !rec.output.unit_weights()) return;
    bool has_zero = false;
    for (const Rat& v : rec.out_pair.x) has_zero = has_zero || v == 0;
    if (!has_zero) return;
    auto it = index.find(canonical_bits(rec.output));
    if (it == index.end()) return;
    ProvenanceEdge edge{ei, it->second, rec.kind, rec.params,
                        static_cast<int>(shift)};
    for (auto& d : out)
      if (d.from == edge.from && d.to == edge.to && d.kind == edge.kind) return;
    out.push_back(edge);
  };
  for (size_t ei = 0; ei < from.entries.size(); ++ei) {
    const SoftFamilyEntry& e = from.entries[ei];
    const Graph& g = e.graph;
    for (const auto& w : witness_set(e)) {
      EPair<Rat> pair{Rat(e.lambda), w};
      if (shift == 1) {
        try { record(ei, add_global_soft_node(g, pair)); } catch (const std::exception&) {}
      }
      if (shift >= 1) {
        for (const auto& pairing : antisymmetric_pairings(w)) {
          if (pairing.empty()) continue;
          try { record(ei, insert_soft_nodes(g, pair, pairing, static_cast<int>(shift))); } catch (const std::exception&) {}
        }
      }
      if (shift == 2 || shift == -2) {
        for (const auto& pairing : antisymmetric_pairings(w)) {
          if (pairing.empty()) continue;
          try { record(ei, matching_toggle(g, pair, pairing, shift == 2)); } catch (const std::exception&) {}
        }
      }
      if (Rat(g.n) - Rat(e.lambda) == Rat(to.lambda)) {
        try { record(ei, complement_eigenpair(g, pair)); } catch (const std::exception&) {}
      }
    }
  }
  return out;
}

std::vector<int> reachability(const Family& fam, int root) {
  std::vector<int> dist(fam.entries.size(), -1);
  if (root < 0 || root >= static_cast<int>(fam.entries.size())) return dist;
  std::queue<int> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (const auto& e : fam.edges) {
      if (e.from == u && dist[e.to] < 0) {
        dist[e.to] = dist[u] + 1;
        q.push(e.to);
      }
      // preserving transforms run both ways (link toggles, contraction
      // vs expansion), so treat discovery edges as undirected for reach
      if (e.to == u && dist[e.from] < 0) {
        dist[e.from] = dist[u] + 1;
        q.push(e.from);
      }
    }
  }
  return dist;
}

std::string emit_landscape_text(const Family& fam) {
  std::ostringstream out;
  out << "lambda=" << fam.lambda.get_str() << " n_max=" << fam.n_max << " entries="
      << fam.entries.size() << "\n";
  for (size_t i = 0; i < fam.entries.size(); ++i) {
    const auto& e = fam.entries[i];
    out << "[" << i << "] n=" << e.graph.n << " m=" << e.graph.edge_count()
        << " catalog=" << (e.catalog_id.empty() ? "-" : e.catalog_id)
        << (e.is_minimal ? " MINIMAL" : "") << " soft={";
    for (size_t s = 0; s < e.soft_vertices.size(); ++s)
      out << (s ? "," : "") << e.soft_vertices[s];
    out << "}\n";
  }
  for (const auto& e : fam.edges)
    out << "edge " << e.from << " -> " << e.to << " [" << kind_name(e.kind)
        << (e.lambda_shift ? (e.lambda_shift > 0 ? " +" : " ") +
                                 std::to_string(e.lambda_shift)
                           : "")
        << "] " << e.params << "\n";
  return out.str();
}

std::string emit_landscape_dot(const Family& fam) {
  std::ostringstream out;
  out << "digraph landscape {\n  rankdir=LR;\n";
  std::map<int, std::vector<int>> by_n;
  for (size_t i = 0; i < fam.entries.size(); ++i)
    by_n[fam.entries[i].graph.n].push_back(static_cast<int>(i));
  for (auto& [n, ids] : by_n) {
    out << "  subgraph cluster_n" << n << " {\n    label=\"n=" << n << "\";\n";
    for (int i : ids) {
      const auto& e = fam.entries[i];
      out << "    e" << i << " [label=\""
          << (e.catalog_id.empty() ? "#" + std::to_string(i) : e.catalog_id)
          << "\\nsoft ";
      for (size_t s = 0; s < e.soft_vertices.size(); ++s)
        out << (s ? "," : "") << e.soft_vertices[s];
      out << "\"" << (e.is_minimal ? ", style=bold, penwidth=2" : "") << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& e : fam.edges)
    out << "  e" << e.from << " -> e" << e.to << " [label=\"" << kind_name(e.kind)
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace softgraph
