#include "folmod/reductions.hpp"

#include <algorithm>

#include "folmod/library.hpp"

namespace folmod {

std::vector<std::pair<int, int>> EdgeToVertexReduction::map_back(
    const std::vector<int>& vertex_solution) const {
  std::vector<std::pair<int, int>> edges;
  for (int v : vertex_solution) {
    if (v < 0 || v >= static_cast<int>(gadget.role.size()))
      throw std::invalid_argument("map_back: vertex is not in the gadget graph");
    if (gadget.role[v] == GadgetRole::Subdivision) edges.push_back(gadget.origin_edge[v]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

EdgeToVertexReduction edge_to_vertex(const Graph& g, const Formula& f, int k) {
  if (k < 0) throw std::invalid_argument("edge_to_vertex: negative budget");
  VertexFormula pipeline = build_vertex_formula(f);  // rejects non-forall-containing input
  GadgetGraph gadget = gadgetize(g, k);
  EdgeToVertexReduction out{
      ModificationInstance{Variant::VertexRemoval, gadget.graph, pipeline.result, k},
      std::move(gadget), std::move(pipeline.degree_guarded),
      std::move(pipeline.incidence_encoded)};
  return out;
}

ModificationInstance removal_to_completion(const ModificationInstance& inst) {
  if (inst.variant != Variant::EdgeRemoval)
    throw std::invalid_argument("removal_to_completion: instance is not edge removal");
  return ModificationInstance{Variant::EdgeCompletion, complement(inst.graph),
                              complement_formula(inst.formula), inst.k};
}

ModificationInstance completion_to_removal(const ModificationInstance& inst) {
  if (inst.variant != Variant::EdgeCompletion)
    throw std::invalid_argument("completion_to_removal: instance is not edge completion");
  return ModificationInstance{Variant::EdgeRemoval, complement(inst.graph),
                              complement_formula(inst.formula), inst.k};
}

CrossComposition cross_compose_clique(const std::vector<std::pair<Graph, int>>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("cross_compose_clique: no instances");
  const int n = inputs.front().first.num_vertices();
  const int k = inputs.front().second;
  for (const auto& [g, ki] : inputs) {
    if (g.num_vertices() != n || ki != k)
      throw std::invalid_argument(
          "cross_compose_clique: instances must share vertex count and budget");
    if (g.vertex_bound() != g.num_vertices())
      throw std::invalid_argument("cross_compose_clique: graphs must have dense vertex ids");
  }
  if (k < 1 || k > n)
    throw std::invalid_argument("cross_compose_clique: budget must satisfy 1 <= k <= n");

  const int apexes = n - k + 2;
  const int t = static_cast<int>(inputs.size());
  Graph composed(t * (n + apexes));
  std::vector<int> offsets;
  for (int i = 0; i < t; ++i) {
    int base = i * (n + apexes);
    offsets.push_back(base);
    for (auto [u, v] : inputs[i].first.edges()) composed.add_edge(base + u, base + v);
    for (int a = 0; a < apexes; ++a)
      for (int v = 0; v < n; ++v) composed.add_edge(base + n + a, base + v);
  }
  return CrossComposition{ModificationInstance{Variant::VertexRemoval, std::move(composed),
                                               formulas::clique_neighborhood(), n - k},
                          t, n, apexes, std::move(offsets)};
}

}  // namespace folmod
