#pragma once

#include "folmod/formula.hpp"
#include "folmod/graph.hpp"
#include "folmod/solvers.hpp"

namespace folmod {

// Edge removal rewritten as vertex removal on the subdivision gadget, same
// budget. A vertex solution maps back to the edges whose subdivision
// vertices were deleted; pendant deletions are discarded as wasted budget.
struct EdgeToVertexReduction {
  ModificationInstance instance;  // vertex removal over the gadget graph
  GadgetGraph gadget;
  Formula degree_guarded;    // original variables confined to branching vertices
  Formula incidence_encoded; // adjacency rewritten through subdivision midpoints

  std::vector<std::pair<int, int>> map_back(const std::vector<int>& vertex_solution) const;
};

EdgeToVertexReduction edge_to_vertex(const Graph& g, const Formula& f, int k);

// Removing F from g is adding F to the complement, judged by the rewritten
// formula; pair certificates transfer verbatim in both directions.
ModificationInstance removal_to_completion(const ModificationInstance& inst);
ModificationInstance completion_to_removal(const ModificationInstance& inst);

// OR-composition of same-size clique instances into one vertex-removal
// instance: disjoint copies, plus n-k+2 apex vertices per copy adjacent to
// that whole copy, budget n-k. The composed instance is a yes-instance
// exactly when some input graph has a clique of at least k vertices.
struct CrossComposition {
  ModificationInstance instance;
  int copies = 0;
  int vertices_per_copy = 0;
  int apexes_per_copy = 0;
  std::vector<int> copy_offset;  // id of the first original vertex of each copy
};

CrossComposition cross_compose_clique(const std::vector<std::pair<Graph, int>>& inputs);

}  // namespace folmod
