#include "softgraph/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace softgraph {

Graph CatalogEntry::graph() const {
  if (!parse_ok)
    throw std::invalid_argument("catalog entry " + full_id + " is unusable: " +
                                (flags.empty() ? "?" : flags.front()));
  return Graph::build(n, edges, {}, full_id);
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> entries;
  std::map<std::string, int> id_seen;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    CatalogEntry e;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, '&')) fields.push_back(f);
    if (fields.size() != 4) {
      e.id = line;
      e.flags.push_back("malformed line");
      e.parse_ok = false;
      entries.push_back(e);
      continue;
    }
    e.id = fields[0];
    e.n = std::atoi(fields[1].c_str());
    e.m = std::atoi(fields[2].c_str());
    if (e.n < 1 || e.n > 9) {
      e.flags.push_back("bad vertex count");
      e.parse_ok = false;
      entries.push_back(e);
      continue;
    }
    std::set<std::pair<int, int>> seen_edges;
    std::istringstream ts(fields[3]);
    std::string tok;
    while (std::getline(ts, tok, '~')) {
      if (tok.empty()) continue;  // trailing '~' in the source tables
      if (tok.size() != 2 || !isdigit(tok[0]) || !isdigit(tok[1])) {
        e.flags.push_back("malformed token '" + tok + "'");
        continue;
      }
      int a = tok[0] - '0';
      int b = tok[1] - '0';
      if (a < 1 || b < 1 || a > e.n || b > e.n) {
        e.flags.push_back("vertex out of range in token '" + tok + "'");
        continue;
      }
      if (a == b) {
        e.flags.push_back("loop token '" + tok + "'");
        continue;
      }
      auto edge = std::minmax(a, b);
      if (!seen_edges.insert({edge.first, edge.second}).second) {
        e.flags.push_back("duplicate edge token '" + tok + "'");
        continue;
      }
      e.edges.emplace_back(edge.first, edge.second);
    }
    if (static_cast<int>(e.edges.size()) != e.m)
      e.flags.push_back("edge count mismatch: row claims " +
                        std::to_string(e.m) + ", parsed " +
                        std::to_string(e.edges.size()));
    if (++id_seen[e.id] > 1) e.flags.push_back("duplicate id");
    if (!e.id.empty() && !isdigit(e.id.back()))
      e.flags.push_back("suffixed id");
    entries.push_back(std::move(e));
  }
  // mark the first occurrence of a duplicated id as well
  for (auto& e : entries)
    if (id_seen[e.id] > 1) {
      bool already = false;
      for (const auto& fl : e.flags) already |= (fl == "duplicate id");
      if (!already) e.flags.push_back("duplicate id");
    }
  return entries;
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open data file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}
}  // namespace

std::string default_data_dir() {
  if (const char* env = std::getenv("SOFTGRAPH_DATA")) return env;
  return SOFTGRAPH_DATA_DIR;
}

Catalog Catalog::load(const std::string& data_dir) {
  Catalog c;
  c.small = parse_catalog(slurp(data_dir + "/catalog_upto5.txt"));
  c.six = parse_catalog(slurp(data_dir + "/catalog_6.txt"));
  for (auto& e : c.small) e.full_id = "5." + e.id;
  for (auto& e : c.six) e.full_id = "6." + e.id;
  return c;
}

const CatalogEntry* Catalog::find(const std::string& id) const {
  std::string key = id;
  const std::vector<CatalogEntry>* table = &small;
  if (id.rfind("6.", 0) == 0) {
    table = &six;
    key = id.substr(2);
  } else if (id.rfind("5.", 0) == 0) {
    key = id.substr(2);
  }
  for (const auto& e : *table)
    if (e.id == key) return &e;  // first occurrence wins for duplicate ids
  return nullptr;
}

Graph Catalog::graph(const std::string& id) const {
  const CatalogEntry* e = find(id);
  if (!e) throw std::invalid_argument("unknown catalog id: " + id);
  return e->graph();
}

}  // namespace softgraph
