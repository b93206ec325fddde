#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace folmod {

enum class EditMode : std::uint8_t { Remove, Add, Toggle };

// Finite simple undirected graph. Vertices are small integer ids, dense at
// construction; edit operations return new graphs and keep the surviving
// ids stable, so certificates remain comparable across edits. Instances are
// treated as immutable snapshots once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_bound() const { return static_cast<int>(active_.size()); }
  int num_vertices() const { return static_cast<int>(verts_.size()); }
  int num_edges() const { return m_; }

  bool has_vertex(int v) const {
    return v >= 0 && v < vertex_bound() && active_[v];
  }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  const std::vector<int>& vertices() const { return verts_; }
  std::vector<std::pair<int, int>> edges() const;  // canonical (min,max), sorted

  // Construction-phase mutation; loops and duplicate edges are rejected.
  void add_edge(int u, int v);
  void set_label(int v, std::string label);
  const std::string& label(int v) const;

  bool operator==(const Graph& other) const;

 private:
  friend Graph delete_vertices(const Graph&, const std::vector<int>&);
  friend Graph edit_edges(const Graph&, const std::vector<std::pair<int, int>>&, EditMode);
  friend Graph complement(const Graph&);
  static std::uint64_t edge_key(int u, int v);

  std::vector<char> active_;
  std::vector<int> verts_;
  std::vector<std::vector<int>> adj_;
  std::unordered_set<std::uint64_t> edge_set_;
  std::vector<std::string> labels_;
  int m_ = 0;
};

// Induced subgraph on the complement of `removed`; surviving ids unchanged.
Graph delete_vertices(const Graph& g, const std::vector<int>& removed);

// Remove requires every pair to be an edge, Add requires every pair to be a
// non-edge of distinct vertices; Toggle is the symmetric difference.
Graph edit_edges(const Graph& g, const std::vector<std::pair<int, int>>& pairs, EditMode mode);

Graph complement(const Graph& g);

enum class GadgetRole : std::uint8_t { Branching, Subdivision, Pendant };

// Subdivision gadget: original vertices become branching vertices, each edge
// is replaced by a degree-2 subdivision vertex, and every branching vertex
// receives budget+3 pendant leaves. After deleting any <= budget vertices a
// surviving branching vertex still has degree >= 3, and an isolated vertex
// can only arise from deleting a branching vertex.
struct GadgetGraph {
  Graph graph;
  std::vector<GadgetRole> role;                  // indexed by gadget vertex id
  std::vector<int> origin_vertex;                // branching/pendant: base vertex, else -1
  std::vector<std::pair<int, int>> origin_edge;  // subdivision: original edge, else (-1,-1)

  std::vector<int> vertices_with_role(GadgetRole r) const;
};

GadgetGraph gadgetize(const Graph& g, int budget);

// Edge-list format: optional "n <count>" header, one "u v" pair per line,
// optional "label <v> <text>" lines, '#' comments. DIMACS: "p edge n m"
// header, "e u v" lines, 1-indexed on disk. read_graph sniffs the format.
Graph read_graph(const std::string& path);
Graph parse_graph(const std::string& text);
void write_graph(const Graph& g, const std::string& path);
std::string format_graph(const Graph& g);
std::string format_graph_dimacs(const Graph& g);

// Role table sidecar for gadget graphs: one "<role> <vertex> <origin...>"
// line per vertex.
std::string format_gadget_roles(const GadgetGraph& gg);
void write_gadget_roles(const GadgetGraph& gg, const std::string& path);

}  // namespace folmod
