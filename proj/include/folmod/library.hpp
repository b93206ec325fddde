#pragma once

#include "folmod/formula.hpp"
#include "folmod/graph.hpp"

namespace folmod::formulas {

// A u. A v. !(u ~ v) -- edgeless target; vertex removal is Vertex Cover.
Formula vertex_cover();

// A u. A v. E w. (u = v) | (u ~ v) | ((u ~ w) & (v ~ w)) -- diameter <= 2.
Formula diameter_at_most_two();

// E x. A y. A z. ((x ~ y) & (x ~ z)) -> ((y = z) | (y ~ z)) -- some vertex
// whose neighbourhood is a clique.
Formula clique_neighborhood();

// A u. E v. u ~ v -- no isolated vertex.
Formula no_isolated_vertex();

// Every vertex roots an induced copy of the 5-vertex witness graph (K5 minus
// one edge). A Pi-2 formula with five variables; its edge problems are
// W[2]-hard, so it ships as an example only.
Formula witness_rooted_everywhere();

}  // namespace folmod::formulas

namespace folmod::graphs {

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph petersen();

// K5 minus one edge, the witness subgraph for witness_rooted_everywhere:
// vertex 0 is the root, vertices 1..4 its neighbours, 1-4 the missing edge.
Graph witness_graph();

}  // namespace folmod::graphs
