#include "softgraph/transforms.hpp"

#include <sstream>
#include <stdexcept>

namespace softgraph {

std::string kind_name(TransformKind k) {
  switch (k) {
    case TransformKind::Link: return "link";
    case TransformKind::LinkJoin: return "link-join";
    case TransformKind::Articulation: return "articulation";
    case TransformKind::Soldering: return "soldering";
    case TransformKind::RegularExpansion: return "regular-expansion";
    case TransformKind::SquareGadget: return "square-gadget";
    case TransformKind::InsertSoftNodes: return "insert-soft-nodes";
    case TransformKind::AddGlobalSoftNode: return "add-soft-node";
    case TransformKind::MatchingToggle: return "matching-toggle";
    case TransformKind::CartesianPair: return "cartesian-product";
    case TransformKind::ComplementPair: return "complement";
  }
  return "?";
}

bool kind_preserves_eigenvalue(TransformKind k) {
  switch (k) {
    case TransformKind::Link:
    case TransformKind::LinkJoin:
    case TransformKind::Articulation:
    case TransformKind::Soldering:
    case TransformKind::RegularExpansion:
    case TransformKind::SquareGadget:
      return true;
    default:
      return false;
  }
}

Graph circulant_regular(int k, int d) {
  if (k < 1 || d < 0 || d >= k)
    throw std::invalid_argument("bad regular graph parameters");
  if ((k * d) % 2 != 0)
    throw std::invalid_argument("no d-regular graph on k vertices (odd product)");
  std::vector<std::pair<int, int>> edges;
  int half = d / 2;
  for (int off = 1; off <= half; ++off)
    for (int v = 0; v < k; ++v) {
      int u = (v + off) % k;
      if (off * 2 == k && v >= u) continue;  // avoid doubling the diameter pairs
      edges.emplace_back(std::min(v, u) + 1, std::max(v, u) + 1);
    }
  if (d % 2 == 1)  // k even: add the perfect matching across
    for (int v = 0; v < k / 2; ++v) edges.emplace_back(v + 1, v + k / 2 + 1);
  Graph g = Graph::build(k, std::move(edges));
  for (int deg : g.degrees())
    if (deg != d) throw std::invalid_argument("circulant construction failed");
  return g;
}

namespace {

std::pair<int, int> parse_pair(const std::string& tok) {
  auto dash = tok.find('-');
  auto comma = tok.find(',');
  auto sep = dash != std::string::npos ? dash : comma;
  if (sep == std::string::npos)
    throw std::invalid_argument("expected pair 'i-j': " + tok);
  return {std::stoi(tok.substr(0, sep)), std::stoi(tok.substr(sep + 1))};
}

}  // namespace

std::vector<ScriptStep> parse_transform_script(const std::string& text) {
  std::vector<ScriptStep> steps;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    ScriptStep st;
    if (!(ls >> st.op)) continue;
    if (st.op == "LINK" || st.op == "SOLDER") {
      int i, j;
      if (!(ls >> i >> j)) throw std::invalid_argument("usage: " + st.op + " i j");
      st.ints = {i, j};
    } else if (st.op == "ART") {
      int i;
      if (!(ls >> i)) throw std::invalid_argument("usage: ART i");
      st.ints = {i};
    } else if (st.op == "EXPAND") {
      int i, k, d;
      if (!(ls >> i >> k >> d)) throw std::invalid_argument("usage: EXPAND i k d");
      st.ints = {i, k, d};
    } else if (st.op == "SQUARE") {
      int i, j;
      std::string a;
      if (!(ls >> i >> j >> a)) throw std::invalid_argument("usage: SQUARE i j a/b");
      st.ints = {i, j};
      st.ratio = parse_rational(a);
    } else if (st.op == "INSERT") {
      int k;
      if (!(ls >> k)) throw std::invalid_argument("usage: INSERT k i-j ...");
      st.ints = {k};
      std::string tok;
      while (ls >> tok) st.pairs.push_back(parse_pair(tok));
    } else if (st.op == "ADDSOFT" || st.op == "COMPLEMENT") {
      // no arguments
    } else if (st.op == "MATCH") {
      std::string dir;
      if (!(ls >> dir) || (dir != "+" && dir != "-"))
        throw std::invalid_argument("usage: MATCH +|- i-j ...");
      st.add = dir == "+";
      std::string tok;
      while (ls >> tok) st.pairs.push_back(parse_pair(tok));
    } else {
      throw std::invalid_argument("unknown script op: " + st.op);
    }
    steps.push_back(std::move(st));
  }
  return steps;
}

std::vector<RatRecord> apply_script(const Graph& g, const EPair<Rat>& start,
                                    const std::vector<ScriptStep>& steps) {
  std::vector<RatRecord> records;
  Graph cur = g;
  EPair<Rat> pair = start;
  for (const ScriptStep& st : steps) {
    RatRecord rec;
    if (st.op == "LINK") {
      rec = link_toggle(cur, pair, st.ints[0], st.ints[1]);
    } else if (st.op == "ART") {
      rec = articulation(cur, pair, st.ints[0]);
    } else if (st.op == "SOLDER") {
      rec = soldering(cur, pair, st.ints[0], st.ints[1]);
    } else if (st.op == "EXPAND") {
      rec = regular_expansion(cur, pair, st.ints[0], st.ints[1], st.ints[2],
                              circulant_regular(st.ints[1], st.ints[2]));
    } else if (st.op == "SQUARE") {
      rec = square_gadget(cur, pair, st.ints[0], st.ints[1], st.ratio);
    } else if (st.op == "INSERT") {
      auto pairs = st.pairs;
      if (pairs.empty()) {
        auto all = antisymmetric_pairings(pair.x);
        if (all.empty())
          throw std::invalid_argument("no antisymmetric pairing exists");
        pairs = all.front();
      }
      rec = insert_soft_nodes(cur, pair, pairs, st.ints[0]);
    } else if (st.op == "ADDSOFT") {
      rec = add_global_soft_node(cur, pair);
    } else if (st.op == "MATCH") {
      rec = matching_toggle(cur, pair, st.pairs, st.add);
    } else if (st.op == "COMPLEMENT") {
      rec = complement_eigenpair(cur, pair);
    } else {
      throw std::invalid_argument("unknown script op: " + st.op);
    }
    cur = rec.output;
    pair = rec.out_pair;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace softgraph
