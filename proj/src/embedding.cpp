#include "softgraph/embedding.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace softgraph {

namespace {

Graph induced_relabel(const Graph& whole, const std::vector<int>& order,
                      const std::string& label) {
  std::vector<int> pos(whole.n + 1, 0);
  for (size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k) + 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rat> weights;
  for (size_t e = 0; e < whole.edges.size(); ++e) {
    auto [i, j] = whole.edges[e];
    if (pos[i] && pos[j]) {
      edges.emplace_back(pos[i], pos[j]);
      weights.push_back(whole.weights[e]);
    }
  }
  return Graph::build(static_cast<int>(order.size()), std::move(edges),
                      std::move(weights), label);
}

std::vector<Rat> nonneg_row_sums_check(const Mat<Rat>& m) {
  std::vector<Rat> sums(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) sums[i] += m.at(i, j);
  return sums;
}

}  // namespace

Mat<Rat> EmbeddingSplit::permuted_whole_laplacian() const {
  std::vector<int> order = g_order;
  order.insert(order.end(), rest_order.begin(), rest_order.end());
  Graph perm = induced_relabel(whole, order, "permuted");
  return perm.laplacian();
}

EmbeddingSplit split_embedding(const Graph& whole, const std::vector<int>& sub_vertices) {
  std::set<int> subset(sub_vertices.begin(), sub_vertices.end());
  if (subset.empty()) throw std::invalid_argument("empty subgraph side");
  if (static_cast<int>(subset.size()) == whole.n)
    throw std::invalid_argument("empty remainder side");
  for (int v : subset)
    if (v < 1 || v > whole.n) throw std::invalid_argument("subgraph vertex out of range");

  EmbeddingSplit s;
  s.whole = whole;
  s.sub.assign(subset.begin(), subset.end());

  std::vector<int> rest;
  for (int v = 1; v <= whole.n; ++v)
    if (!subset.count(v)) rest.push_back(v);

  std::set<int> g_boundary, r_boundary;
  for (auto [i, j] : whole.edges) {
    bool si = subset.count(i) > 0, sj = subset.count(j) > 0;
    if (si && !sj) {
      g_boundary.insert(i);
      r_boundary.insert(j);
    } else if (!si && sj) {
      g_boundary.insert(j);
      r_boundary.insert(i);
    }
  }
  s.p = static_cast<int>(g_boundary.size());
  s.p_prime = static_cast<int>(r_boundary.size());

  for (int v : s.sub)
    if (!g_boundary.count(v)) s.g_order.push_back(v);
  s.g_order.insert(s.g_order.end(), g_boundary.begin(), g_boundary.end());
  for (int v : r_boundary) s.rest_order.push_back(v);
  for (int v : rest)
    if (!r_boundary.count(v)) s.rest_order.push_back(v);

  s.g = induced_relabel(whole, s.g_order, "G");
  if (!s.g.connected()) throw std::invalid_argument("subgraph G must be connected");
  s.g_prime = induced_relabel(whole, s.rest_order, "G'");

  int n = s.g.n;
  s.a = Mat<Rat>(s.p, s.p);
  s.b = Mat<Rat>(s.p, s.p_prime);
  s.c = Mat<Rat>(s.p_prime, s.p_prime);
  std::vector<int> gb(s.g_order.end() - s.p, s.g_order.end());
  std::vector<int> rb(s.rest_order.begin(), s.rest_order.begin() + s.p_prime);
  for (int i = 0; i < s.p; ++i)
    for (int j = 0; j < s.p_prime; ++j) {
      Rat w = whole.weight(gb[i], rb[j]);
      if (w == 0) continue;
      s.b.at(i, j) = w;
      s.a.at(i, i) += w;
      s.c.at(j, j) += w;
    }

  // exact reconstruction: L'' = diag(L, L') + bordered delta
  Mat<Rat> expect = s.permuted_whole_laplacian();
  Mat<Rat> lg = s.g.laplacian();
  Mat<Rat> lp = s.g_prime.laplacian();
  Mat<Rat> built(expect.rows, expect.cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) built.at(i, j) = lg.at(i, j);
  for (int i = 0; i < s.g_prime.n; ++i)
    for (int j = 0; j < s.g_prime.n; ++j) built.at(n + i, n + j) += lp.at(i, j);
  for (int i = 0; i < s.p; ++i) built.at(n - s.p + i, n - s.p + i) += s.a.at(i, i);
  for (int j = 0; j < s.p_prime; ++j) built.at(n + j, n + j) += s.c.at(j, j);
  for (int i = 0; i < s.p; ++i)
    for (int j = 0; j < s.p_prime; ++j) {
      built.at(n - s.p + i, n + j) -= s.b.at(i, j);
      built.at(n + j, n - s.p + i) -= s.b.at(i, j);
    }
  if (!(built == expect))
    throw std::logic_error("embedding block reconstruction failed");
  return s;
}

Mat<Rat> schur_delta(const EmbeddingSplit& s) {
  Mat<Rat> ainv(s.p, s.p);
  for (int i = 0; i < s.p; ++i) ainv.at(i, i) = Rat(1) / s.a.at(i, i);
  Mat<Rat> delta = s.c - s.b.transpose() * ainv * s.b;
  if (!delta.is_symmetric()) throw std::logic_error("Delta must be symmetric");
  for (const Rat& sum : nonneg_row_sums_check(delta))
    if (sum != 0) throw std::logic_error("Delta must have zero row sums");
  return delta;
}

std::string case_name(SubgraphCase c) {
  switch (c) {
    case SubgraphCase::ZeroEigenvalue: return "(i) zero eigenvalue";
    case SubgraphCase::Articulation: return "(ii) articulation";
    case SubgraphCase::LinkConnection: return "(ii) link";
    case SubgraphCase::TwoUnresolved: return "(ii) unresolved";
    case SubgraphCase::SharedShift: return "(iii) shared eigenvector";
    case SubgraphCase::NoSolution: return "(iv) no solution (conjectured)";
  }
  return "?";
}

SubgraphCase DeltaAnalysis::overall() const {
  if (per_vector.empty()) return SubgraphCase::NoSolution;
  SubgraphCase best = per_vector.front().label;
  for (const auto& r : per_vector)
    if (static_cast<int>(r.label) < static_cast<int>(best)) best = r.label;
  return best;
}

namespace {

// Extension system for a fixed eigenvector X of L(G): unknown X' with
//   (L' + diag(c,0) - lambda I) X' = b^T X_bd   (rows of G')
//   b X'(1:p') = a X_bd                          (boundary rows of G)
LinearSolution<Rat> solve_extension(const EmbeddingSplit& s, const Mat<Rat>& lp,
                                    const Rat& lambda, const std::vector<Rat>& x) {
  int np = s.g_prime.n;
  int n = s.g.n;
  Mat<Rat> m(np + s.p, np);
  std::vector<Rat> rhs(np + s.p, Rat(0));
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) m.at(i, j) = lp.at(i, j);
    if (i < s.p_prime) m.at(i, i) += s.c.at(i, i);
    m.at(i, i) -= lambda;
  }
  for (int i = 0; i < s.p; ++i) {
    for (int j = 0; j < s.p_prime; ++j) rhs[j] += s.b.at(i, j) * x[n - s.p + i];
    for (int j = 0; j < s.p_prime; ++j) m.at(np + i, j) = s.b.at(i, j);
    rhs[np + i] = s.a.at(i, i) * x[n - s.p + i];
  }
  return solve_linear(m, rhs);
}

}  // namespace

DeltaAnalysis classify_case(const Graph& whole, const std::vector<int>& sub_vertices,
                            const Rat& lambda) {
  if (!whole.unit_weights())
    throw std::invalid_argument("case classification needs unit weights");
  DeltaAnalysis an;
  an.split = split_embedding(whole, sub_vertices);
  an.delta = schur_delta(an.split);
  an.lambda = lambda;
  const EmbeddingSplit& s = an.split;
  int np = s.g_prime.n;
  an.delta_bar = Mat<Rat>(np, np);
  for (int i = 0; i < s.p_prime; ++i)
    for (int j = 0; j < s.p_prime; ++j) an.delta_bar.at(i, j) = an.delta.at(i, j);

  // eigenspace of G at lambda
  Mat<Rat> lg = s.g.laplacian();
  Mat<Rat> shifted = lg;
  for (int i = 0; i < lg.rows; ++i) shifted.at(i, i) -= lambda;
  auto basis = nullspace(shifted);
  if (basis.empty())
    throw std::domain_error("lambda is not an eigenvalue of the subgraph");
  for (auto& v : basis) v = to_coprime_integers(std::move(v));

  Mat<Rat> lp = s.g_prime.laplacian();
  Mat<Rat> lp_shift = lp;
  for (int i = 0; i < np; ++i) lp_shift.at(i, i) -= lambda;
  an.lambda_in_l_prime = !nullspace(lp_shift).empty();

  // link structure: Delta = 0 and the theorem's consequences
  bool delta_zero = true;
  for (const Rat& v : an.delta.v) delta_zero = delta_zero && v == 0;
  if (delta_zero) {
    an.link_structure = true;
    if (s.p != s.p_prime) {
      an.link_structure = false;
      an.link_structure_notes.push_back("p != p'");
    }
    for (int i = 0; i < s.p; ++i)
      if (s.a.at(i, i) != 1) {
        an.link_structure = false;
        an.link_structure_notes.push_back("a not unit diagonal");
        break;
      }
    for (int j = 0; j < s.p_prime; ++j)
      if (s.c.at(j, j) != 1) {
        an.link_structure = false;
        an.link_structure_notes.push_back("c not unit diagonal");
        break;
      }
    for (int i = 0; i < s.p; ++i) {
      int nz = 0;
      for (int j = 0; j < s.p_prime; ++j) nz += s.b.at(i, j) != 0;
      if (nz != 1) {
        an.link_structure = false;
        an.link_structure_notes.push_back("b row with several cross edges");
        break;
      }
    }
  }

  // case (iii): shared eigenvector of L' and Delta-bar, lambda' + mu = lambda
  if (!an.lambda_in_l_prime && lambda != 0) {
    auto lp_spectrum = classify_symmetric_integer_matrix(lp);
    for (const Eigenvalue& evp : lp_spectrum) {
      if (an.shared_found) break;
      if (evp.approx >= to_double(lambda) - 1e-12) continue;  // needs lambda-lambda' > 0
      if (evp.kind == EvKind::Integer) {
        Rat lam_p(evp.integer);
        Mat<Rat> joint(2 * np, np);
        for (int i = 0; i < np; ++i)
          for (int j = 0; j < np; ++j) {
            joint.at(i, j) = lp.at(i, j) - (i == j ? lam_p : Rat(0));
            joint.at(np + i, j) =
                an.delta_bar.at(i, j) - (i == j ? lambda - lam_p : Rat(0));
          }
        auto shared = nullspace(joint);
        if (!shared.empty()) {
          an.shared_found = true;
          an.lambda_prime = evp;
          an.shared_x_prime = to_quad_vector(to_coprime_integers(shared.front()));
        }
      } else if (evp.kind == EvKind::Quadratic) {
        Quad lam_p = evp.quad.value();
        Quad shift = Quad(lambda) - lam_p;
        Mat<Quad> joint(2 * np, np);
        for (int i = 0; i < np; ++i)
          for (int j = 0; j < np; ++j) {
            joint.at(i, j) = Quad(lp.at(i, j)) - (i == j ? lam_p : Quad(0));
            joint.at(np + i, j) =
                Quad(an.delta_bar.at(i, j)) - (i == j ? shift : Quad(0));
          }
        auto shared = nullspace(joint);
        if (!shared.empty()) {
          an.shared_found = true;
          an.lambda_prime = evp;
          an.shared_x_prime = normalize_quad_vector(shared.front());
        }
      } else {
        // numeric kind (simple root): check Delta-bar action on the
        // numeric eigenvector; no exact confirmation available
        auto vecs = numeric_eigenspace(s.g_prime, evp.approx);
        for (const auto& v : vecs) {
          double worst = 0;
          for (int i = 0; i < np; ++i) {
            double acc = -(to_double(lambda) - evp.approx) * v[i];
            for (int j = 0; j < np; ++j)
              acc += to_double(an.delta_bar.at(i, j)) * v[j];
            worst = std::max(worst, std::abs(acc));
          }
          if (worst < 1e-9) {
            an.shared_found = true;
            an.shared_exact = false;
            an.lambda_prime = evp;
            an.notes.push_back(
                "shared eigenvector established numerically only (tol 1e-9)");
            break;
          }
        }
      }
    }
  }

  for (const auto& x : basis) {
    VectorCaseReport rep;
    rep.x = x;
    rep.boundary_zero = true;
    for (int i = 0; i < s.p; ++i)
      rep.boundary_zero = rep.boundary_zero && x[s.g.n - s.p + i] == 0;

    auto sol = solve_extension(s, lp, lambda, x);
    rep.extension_exists = sol.consistent;
    if (sol.consistent) {
      rep.extension = sol.particular;
      rep.gpg1_boundary.assign(s.p, Rat(0));
      for (int i = 0; i < s.p; ++i) {
        Rat acc(0);
        for (int j = 0; j < s.p_prime; ++j)
          acc += s.b.at(i, j) * sol.particular[j];
        rep.gpg1_boundary[i] = acc / s.a.at(i, i);
      }
    }

    if (lambda == 0) {
      rep.label = SubgraphCase::ZeroEigenvalue;
    } else if (an.lambda_in_l_prime) {
      if (rep.boundary_zero) {
        rep.label = SubgraphCase::Articulation;
        rep.notes.push_back("X' = 0 extends X; remainder hangs from soft nodes");
      } else if (an.link_structure) {
        rep.label = SubgraphCase::LinkConnection;
      } else {
        rep.label = SubgraphCase::TwoUnresolved;
        rep.notes.push_back(
            "lambda in spec(L') but neither articulation nor link structure");
      }
    } else if (an.shared_found) {
      rep.label = SubgraphCase::SharedShift;
    } else {
      rep.label = SubgraphCase::NoSolution;
      rep.notes.push_back(
          rep.extension_exists
              ? "falsification solve FOUND an extension (conjecture counterexample candidate)"
              : "falsification solve: no extension exists");
    }
    an.per_vector.push_back(std::move(rep));
  }

  an.dichotomy_report = dichotomy_check(whole, sub_vertices, lambda);
  return an;
}

std::vector<std::string> dichotomy_check(const Graph& whole,
                                         const std::vector<int>& sub_vertices,
                                         const Rat& lambda) {
  std::vector<std::string> report;
  EmbeddingSplit s = split_embedding(whole, sub_vertices);
  Mat<Rat> lw = s.permuted_whole_laplacian();
  for (int i = 0; i < lw.rows; ++i) lw.at(i, i) -= lambda;
  auto big_basis = nullspace(lw);
  if (big_basis.empty()) {
    report.push_back("lambda is not an eigenvalue of the whole graph");
    return report;
  }
  Mat<Rat> lg = s.g.laplacian();
  int n = s.g.n;
  int interior = n - s.p;
  int idx = 0;
  for (auto& xw : big_basis) {
    xw = to_coprime_integers(std::move(xw));
    ++idx;
    std::vector<Rat> restr(xw.begin(), xw.begin() + n);
    std::vector<Rat> lr = lg * restr;
    bool is_eig = true;
    bool restr_zero = true;
    for (int i = 0; i < n; ++i) {
      is_eig = is_eig && lr[i] == lambda * restr[i];
      restr_zero = restr_zero && restr[i] == 0;
    }
    if (restr_zero) is_eig = false;  // zero restriction is not an eigenvector
    bool interior_zero = true;
    for (int i = 0; i < interior; ++i)
      interior_zero = interior_zero && restr[i] == 0;
    if (is_eig || interior_zero) {
      report.push_back("vector " + std::to_string(idx) + ": " +
                       (is_eig ? "restriction is an eigenvector of G"
                               : "restriction vanishes on the interior"));
    } else {
      std::string msg = "vector " + std::to_string(idx) +
                        ": dichotomy VIOLATION candidate (p=" + std::to_string(s.p) + ")";
      if (s.p == 1) throw std::logic_error(msg + " with p = 1");
      report.push_back(msg);
    }
  }
  return report;
}

}  // namespace softgraph
