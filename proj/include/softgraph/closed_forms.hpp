#pragma once

#include <vector>

#include "softgraph/eigen.hpp"
#include "softgraph/graph.hpp"

namespace softgraph {

Graph clique_graph(int n);
Graph star_graph(int n);  // vertex 1 is the center
Graph bipartite_graph(int n1, int n2);
Graph multipartite_graph(const std::vector<int>& parts);
Graph cycle_graph(int n);  // n >= 3
Graph chain_graph(int n);

// Full spectra with eigenvectors. Clique/star/partite vectors are exact
// integer vectors; cycle and chain vectors are the trigonometric ones,
// except the all-ones vector and the even-cycle (1,-1,...) pair which stay
// exact. Eigenvalues are always exact kinds whenever the value lies in a
// quadratic field (they come from the exact classifier of the built graph).
std::vector<EigenPair> clique_spectrum(int n);
std::vector<EigenPair> star_spectrum(int n);
std::vector<EigenPair> bipartite_spectrum(int n1, int n2);
std::vector<EigenPair> multipartite_spectrum(const std::vector<int>& parts);
std::vector<EigenPair> cycle_spectrum(int n);
std::vector<EigenPair> chain_spectrum(int n);

// Chain vertices j (1..n) whose k-th eigenvector component vanishes:
// solutions of (k-1)(2j-1) = n(1+2m) for some integer m >= 0.
std::vector<int> chain_soft_condition(int n, int k);

}  // namespace softgraph
