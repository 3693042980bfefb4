#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "softgraph/graph.hpp"

namespace softgraph {

inline constexpr int kCanonicalCap = 8;

// Minimum adjacency bit-string over all n! vertex orderings (branch and
// bound over prefixes). Pairs are ordered (1,2),(1,3),(2,3),(1,4),... so a
// prefix of placed vertices fixes a prefix of bits. Unit weights, n <= 8.
uint32_t canonical_bits(const Graph& g);

// "n:bits" string form; equal labels iff isomorphic.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// True when some injective vertex map sends every edge of `small` to an
// edge of `big` (subgraph after vertex/edge deletions, not induced).
bool subgraph_contains(const Graph& big, const Graph& small);

// One representative per isomorphism class of connected simple graphs,
// deterministic order (sorted canonical bits). n <= 8.
std::vector<Graph> enumerate_connected_graphs(int n, int threads = 0);

Graph graph_from_canonical_bits(int n, uint32_t bits);

}  // namespace softgraph
