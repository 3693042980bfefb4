#pragma once

#include <string>
#include <vector>

#include "softgraph/eigen.hpp"
#include "softgraph/graph.hpp"
#include "softgraph/matrix.hpp"

namespace softgraph {

// Block decomposition of an embedding G inside G''. Vertices of G are
// reordered interior-first/boundary-last, vertices of the remainder G'
// boundary-first, matching the bordered form
//   L'' = diag(L, L') + (0 0; 0 [a -b; -b^T c]; 0 0)
// with a (p x p) and c (p' x p') diagonal, a_ii = sum_j b_ij,
// c_jj = sum_i b_ij.
struct EmbeddingSplit {
  Graph whole;               // G''
  std::vector<int> sub;      // V(G) as vertex ids of G'', ascending
  std::vector<int> g_order;  // ids of G'' : G interior then G boundary
  std::vector<int> rest_order;  // G' boundary then G' interior
  int p = 0;
  int p_prime = 0;
  Graph g;        // induced G, relabeled along g_order
  Graph g_prime;  // induced G', relabeled along rest_order
  Mat<Rat> a, b, c;

  Mat<Rat> permuted_whole_laplacian() const;  // order g_order ++ rest_order
};

// Throws on an empty side or a disconnected G.
EmbeddingSplit split_embedding(const Graph& whole, const std::vector<int>& sub_vertices);

// Delta = -b^T a^{-1} b + c; exact, symmetric, zero row sums.
Mat<Rat> schur_delta(const EmbeddingSplit& split);

enum class SubgraphCase {
  ZeroEigenvalue,   // (i)
  Articulation,     // (ii), X' = 0
  LinkConnection,   // (ii), Delta = 0
  TwoUnresolved,    // lambda in spec(L') but neither sub-structure
  SharedShift,      // (iii)
  NoSolution,       // (iv), conjectured
};

std::string case_name(SubgraphCase c);

struct VectorCaseReport {
  std::vector<Rat> x;  // eigenvector of G in g_order coordinates
  SubgraphCase label = SubgraphCase::NoSolution;
  bool boundary_zero = false;     // articulation extension is consistent
  bool extension_exists = false;  // some X' completes (X,X') on L''
  std::vector<Rat> extension;     // one completing X' (rest_order coords)
  std::vector<Rat> gpg1_boundary;  // a^{-1} b X'(1:p') for that X'
  std::vector<std::string> notes;
};

struct DeltaAnalysis {
  EmbeddingSplit split;
  Mat<Rat> delta;      // p' x p'
  Mat<Rat> delta_bar;  // n' x n'
  Rat lambda;
  bool lambda_in_l_prime = false;
  bool link_structure = false;  // Delta == 0 plus the structural conditions
  std::vector<std::string> link_structure_notes;
  // case (iii) search over spec(L'): shared eigenvector of L' and Delta-bar
  bool shared_found = false;
  Eigenvalue lambda_prime;
  std::vector<Quad> shared_x_prime;
  bool shared_exact = true;  // false when established only numerically
  std::vector<VectorCaseReport> per_vector;
  std::vector<std::string> dichotomy_report;
  std::vector<std::string> notes;

  SubgraphCase overall() const;  // first per-vector label by precedence
};

// Case classification for integer (rational) lambda; unit-weight G''.
DeltaAnalysis classify_case(const Graph& whole, const std::vector<int>& sub_vertices,
                            const Rat& lambda);

// Restriction dichotomy "either X = X''(1:n) or X(1:n-p) = 0" over the
// rational eigenvectors of L'' for lambda; asserts for p = 1 with simple
// lambda, reports candidate violations for p > 1.
std::vector<std::string> dichotomy_check(const Graph& whole,
                                         const std::vector<int>& sub_vertices,
                                         const Rat& lambda);

}  // namespace softgraph
