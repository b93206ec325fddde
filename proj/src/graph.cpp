#include "folmod/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace folmod {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  active_.assign(n, 1);
  adj_.assign(n, {});
  labels_.assign(n, "");
  verts_.resize(n);
  for (int i = 0; i < n; ++i) verts_[i] = i;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::uint64_t Graph::edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  return edge_set_.count(edge_key(u, v)) != 0;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

const std::vector<int>& Graph::neighbors(int v) const {
  if (!has_vertex(v)) throw std::out_of_range("graph: no such vertex " + std::to_string(v));
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int v : verts_)
    for (int w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

void Graph::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v))
    throw std::invalid_argument("add_edge: vertex not in graph");
  if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
  if (!edge_set_.insert(edge_key(u, v)).second)
    throw std::invalid_argument("add_edge: duplicate edge " + std::to_string(u) + " " +
                                std::to_string(v));
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

void Graph::set_label(int v, std::string label) {
  if (!has_vertex(v)) throw std::invalid_argument("set_label: vertex not in graph");
  labels_[v] = std::move(label);
}

const std::string& Graph::label(int v) const {
  if (!has_vertex(v)) throw std::out_of_range("label: vertex not in graph");
  return labels_[v];
}

bool Graph::operator==(const Graph& other) const {
  return verts_ == other.verts_ && m_ == other.m_ && edge_set_ == other.edge_set_;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& removed) {
  for (int v : removed)
    if (!g.has_vertex(v))
      throw std::invalid_argument("delete_vertices: vertex " + std::to_string(v) +
                                  " not in graph");
  Graph out = g;
  for (int v : removed) {
    if (!out.active_[v]) continue;  // duplicates in the list are harmless
    out.active_[v] = 0;
    for (int w : out.adj_[v]) {
      auto& nw = out.adj_[w];
      nw.erase(std::lower_bound(nw.begin(), nw.end(), v));
      out.edge_set_.erase(Graph::edge_key(v, w));
      --out.m_;
    }
    out.adj_[v].clear();
  }
  out.verts_.clear();
  for (int v = 0; v < out.vertex_bound(); ++v)
    if (out.active_[v]) out.verts_.push_back(v);
  return out;
}

Graph edit_edges(const Graph& g, const std::vector<std::pair<int, int>>& pairs, EditMode mode) {
  Graph out = g;
  for (auto [u, v] : pairs) {
    if (!out.has_vertex(u) || !out.has_vertex(v))
      throw std::invalid_argument("edit_edges: vertex not in graph");
    if (u == v) throw std::invalid_argument("edit_edges: pair endpoints must be distinct");
    bool present = out.has_edge(u, v);
    switch (mode) {
      case EditMode::Remove:
        if (!present) throw std::invalid_argument("edit_edges: removing a non-edge");
        break;
      case EditMode::Add:
        if (present) throw std::invalid_argument("edit_edges: adding an existing edge");
        break;
      case EditMode::Toggle:
        break;
    }
    if (present) {
      // inline removal mirroring add_edge
      auto& nu = out.adj_[u];
      auto& nv = out.adj_[v];
      nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
      nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
      out.edge_set_.erase(Graph::edge_key(u, v));
      --out.m_;
    } else {
      out.add_edge(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out = g;
  out.edge_set_.clear();
  out.m_ = 0;
  for (int v : out.verts_) out.adj_[v].clear();
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) out.add_edge(vs[i], vs[j]);
  return out;
}

std::vector<int> GadgetGraph::vertices_with_role(GadgetRole r) const {
  std::vector<int> out;
  for (int v : graph.vertices())
    if (role[v] == r) out.push_back(v);
  return out;
}

GadgetGraph gadgetize(const Graph& g, int budget) {
  if (budget < 0) throw std::invalid_argument("gadgetize: negative budget");
  const auto base_edges = g.edges();
  const int bound = g.vertex_bound();
  const int m = static_cast<int>(base_edges.size());
  const int n_active = g.num_vertices();
  const int pendants_each = budget + 3;

  Graph gg(bound + m + n_active * pendants_each);
  GadgetGraph out;
  out.role.assign(gg.vertex_bound(), GadgetRole::Pendant);
  out.origin_vertex.assign(gg.vertex_bound(), -1);
  out.origin_edge.assign(gg.vertex_bound(), {-1, -1});

  // Branching vertices reuse the original ids; ids of deleted originals stay
  // unused in the gadget.
  std::vector<int> dead;
  for (int v = 0; v < bound; ++v)
    if (!g.has_vertex(v)) dead.push_back(v);
  for (int v : g.vertices()) {
    out.role[v] = GadgetRole::Branching;
    out.origin_vertex[v] = v;
  }

  int next = bound;
  for (auto [u, v] : base_edges) {
    int mid = next++;
    out.role[mid] = GadgetRole::Subdivision;
    out.origin_edge[mid] = {u, v};
    gg.add_edge(u, mid);
    gg.add_edge(mid, v);
  }
  for (int v : g.vertices()) {
    for (int i = 0; i < pendants_each; ++i) {
      int leaf = next++;
      out.role[leaf] = GadgetRole::Pendant;
      out.origin_vertex[leaf] = v;
      gg.add_edge(v, leaf);
    }
  }
  if (!dead.empty()) gg = delete_vertices(gg, dead);
  out.graph = std::move(gg);
  return out;
}

}  // namespace folmod
