#include <fstream>
#include <sstream>

#include "folmod/graph.hpp"

namespace folmod {

namespace {

struct PendingEdge {
  int u, v;
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw std::runtime_error("graph: line " + std::to_string(lineno) + ": " + what);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int declared_n = -1;
  int max_id = -1;
  std::vector<PendingEdge> edges;
  std::vector<std::pair<int, std::string>> labels;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(strip_comment(raw));
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> declared_n) || declared_n < 0) fail(lineno, "bad vertex count");
      continue;
    }
    if (first == "label") {
      int v;
      std::string label;
      if (!(ls >> v)) fail(lineno, "bad label line");
      std::getline(ls, label);
      auto start = label.find_first_not_of(" \t");
      labels.emplace_back(v, start == std::string::npos ? "" : label.substr(start));
      continue;
    }
    int u, v;
    try {
      u = std::stoi(first);
    } catch (...) {
      fail(lineno, "expected an edge 'u v'");
    }
    if (!(ls >> v)) fail(lineno, "expected an edge 'u v'");
    std::string extra;
    if (ls >> extra) fail(lineno, "trailing tokens after edge");
    if (u < 0 || v < 0) fail(lineno, "negative vertex id");
    if (u == v) fail(lineno, "loop " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back({u, v});
    max_id = std::max({max_id, u, v});
  }
  for (const auto& [v, label] : labels) max_id = std::max(max_id, v);
  int n = declared_n >= 0 ? declared_n : max_id + 1;
  if (max_id >= n) throw std::runtime_error("graph: vertex id exceeds declared count");
  Graph g(n);
  for (const auto& e : edges) {
    if (g.has_edge(e.u, e.v))
      throw std::runtime_error("graph: duplicate edge " + std::to_string(e.u) + " " +
                               std::to_string(e.v));
    g.add_edge(e.u, e.v);
  }
  for (auto& [v, label] : labels) g.set_label(v, label);
  return g;
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int n = -1, m = -1, seen = 0;
  Graph g;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
        fail(lineno, "bad problem line, expected 'p edge n m'");
      g = Graph(n);
      continue;
    }
    if (first == "e") {
      if (n < 0) fail(lineno, "edge before problem line");
      int u, v;
      if (!(ls >> u >> v)) fail(lineno, "bad edge line");
      if (u < 1 || v < 1 || u > n || v > n) fail(lineno, "vertex id out of range");
      if (u == v) fail(lineno, "loop " + std::to_string(u) + " " + std::to_string(v));
      if (g.has_edge(u - 1, v - 1)) fail(lineno, "duplicate edge");
      g.add_edge(u - 1, v - 1);
      ++seen;
      continue;
    }
    fail(lineno, "unrecognised line");
  }
  if (n < 0) throw std::runtime_error("graph: missing DIMACS problem line");
  if (seen != m) throw std::runtime_error("graph: edge count does not match header");
  return g;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::istringstream ls(strip_comment(raw));
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "p" || first == "c") return parse_dimacs(text);
    return parse_edge_list(text);
  }
  return parse_edge_list(text);
}

Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
  // Writing compacts ids to 0..n-1; labels follow their vertices.
  std::ostringstream os;
  const auto& vs = g.vertices();
  std::vector<int> compact(g.vertex_bound(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) compact[vs[i]] = static_cast<int>(i);
  os << "n " << vs.size() << "\n";
  for (auto [u, v] : g.edges()) os << compact[u] << " " << compact[v] << "\n";
  for (int v : vs)
    if (!g.label(v).empty()) os << "label " << compact[v] << " " << g.label(v) << "\n";
  return os.str();
}

std::string format_graph_dimacs(const Graph& g) {
  std::ostringstream os;
  const auto& vs = g.vertices();
  std::vector<int> compact(g.vertex_bound(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) compact[vs[i]] = static_cast<int>(i);
  os << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (auto [u, v] : g.edges()) os << "e " << compact[u] + 1 << " " << compact[v] + 1 << "\n";
  return os.str();
}

void write_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  bool dimacs = path.size() > 4 && (path.rfind(".col") == path.size() - 4 ||
                                    (path.size() > 7 && path.rfind(".dimacs") == path.size() - 7));
  out << (dimacs ? format_graph_dimacs(g) : format_graph(g));
}

std::string format_gadget_roles(const GadgetGraph& gg) {
  std::ostringstream os;
  for (int v : gg.graph.vertices()) {
    switch (gg.role[v]) {
      case GadgetRole::Branching:
        os << "branching " << v << " " << gg.origin_vertex[v] << "\n";
        break;
      case GadgetRole::Subdivision:
        os << "subdivision " << v << " " << gg.origin_edge[v].first << " "
           << gg.origin_edge[v].second << "\n";
        break;
      case GadgetRole::Pendant:
        os << "pendant " << v << " " << gg.origin_vertex[v] << "\n";
        break;
    }
  }
  return os.str();
}

void write_gadget_roles(const GadgetGraph& gg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write role table: " + path);
  out << format_gadget_roles(gg);
}

}  // namespace folmod
