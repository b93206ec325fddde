#include "folmod/library.hpp"

namespace folmod::formulas {

Formula vertex_cover() { return parse("A u. A v. !(u ~ v)"); }

Formula diameter_at_most_two() {
  return parse("A u. A v. E w. (u = v) | (u ~ v) | ((u ~ w) & (v ~ w))");
}

Formula clique_neighborhood() {
  return parse("E x. A y. A z. ((x ~ y) & (x ~ z)) -> ((y = z) | (y ~ z))");
}

Formula no_isolated_vertex() { return parse("A u. E v. u ~ v"); }

Formula witness_rooted_everywhere() {
  return parse(
      "A x. E y1. E y2. E y3. E y4. "
      "(x ~ y1) & (x ~ y2) & (x ~ y3) & (x ~ y4) & "
      "(y1 ~ y2) & (y1 ~ y3) & (y2 ~ y3) & (y2 ~ y4) & (y3 ~ y4) & "
      "!(y1 = y4) & !(y1 ~ y4)");
}

}  // namespace folmod::formulas

namespace folmod::graphs {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);        // outer 5-cycle
    g.add_edge(i, i + 5);              // spokes
    g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner 5-cycle with step 2
  }
  return g;
}

Graph witness_graph() {
  Graph g = complete(5);
  return edit_edges(g, {{1, 4}}, EditMode::Remove);
}

}  // namespace folmod::graphs
