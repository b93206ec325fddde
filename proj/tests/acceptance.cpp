// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion cross-checks a solver path against an independent
// exhaustive oracle at desk scale. Run a subset by passing criterion numbers
// as arguments.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "folmod/library.hpp"
#include "folmod/reductions.hpp"
#include "folmod/solvers.hpp"
#include "test_support.hpp"

using namespace folmod;

namespace {

struct Check {
  int failures = 0;
  long long cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (failures <= 10) std::cout << "    mismatch: " << what << "\n";
    }
  }
};

std::vector<support::Corpus> vertex_corpus() { return support::corpus(); }

// Corpus members whose written prefix is exists*forall*, the shape the edge
// solver requires.
std::vector<support::Corpus> edge_corpus() {
  std::vector<support::Corpus> out;
  for (auto& c : support::corpus())
    if (match_exists_forall(c.formula)) out.push_back(c);
  return out;
}

bool criterion1(Check& check) {
  // Vertex solver vs exhaustive search: every edge subset of K5, the whole
  // corpus, budgets 0..3.
  for (const auto& c : vertex_corpus()) {
    support::for_all_graphs(5, [&](const Graph& g) {
      for (int k = 0; k <= 3; ++k) {
        ModificationInstance inst{Variant::VertexRemoval, g, c.formula, k};
        bool fast = solve_vertex_sigma3(g, c.formula, k).has_value();
        bool slow = brute_force(inst).has_value();
        check.expect(fast == slow, std::string(c.name) + " k=" + std::to_string(k));
      }
    });
  }
  return check.failures == 0;
}

bool criterion2(Check& check) {
  for (const auto& c : edge_corpus()) {
    for (int n = 0; n <= 4; ++n) {
      support::for_all_graphs(n, [&](const Graph& g) {
        for (int k = 0; k <= 3; ++k) {
          for (EdgeMode mode : {EdgeMode::Removal, EdgeMode::Editing}) {
            Variant variant =
                mode == EdgeMode::Removal ? Variant::EdgeRemoval : Variant::EdgeEditing;
            ModificationInstance inst{variant, g, c.formula, k};
            bool fast = solve_edge_sigma2(g, c.formula, k, mode).has_value();
            bool slow = brute_force(inst).has_value();
            check.expect(fast == slow, std::string(c.name) + " n=" + std::to_string(n) +
                                           " k=" + std::to_string(k));
          }
        }
      });
    }
  }
  return check.failures == 0;
}

bool criterion3(Check& check) {
  // Every YES outcome re-verifies once more from the certificate alone.
  std::mt19937 rng(333);
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = support::random_graph(2 + trial % 5, 0.5, rng);
    int k = trial % 4;
    for (const auto& c : support::corpus()) {
      for (Variant variant : {Variant::VertexRemoval, Variant::EdgeRemoval,
                              Variant::EdgeCompletion, Variant::EdgeEditing}) {
        DispatchResult res = dispatch({variant, g, c.formula, k}, DispatchOptions{true});
        if (res.outcome != Outcome::Yes) continue;
        check.expect(res.solution.has_value(), "yes outcome without certificate");
        check.expect(res.solution && res.solution->size() <= static_cast<std::size_t>(k),
                     "certificate exceeds budget");
        check.expect(res.solution && verify_certificate(g, c.formula, *res.solution),
                     std::string("certificate fails on ") + c.name);
      }
    }
  }
  return check.failures == 0;
}

bool criterion4(Check& check) {
  // Removal instances against their completion duals, both solved
  // independently of the transformation.
  std::mt19937 rng(444);
  int done = 0;
  while (done < 1000) {
    Graph g = support::random_graph(2 + done % 5, 0.45, rng);
    int k = done % 4;
    const auto corpus = support::corpus();
    const auto& c = corpus[done % corpus.size()];
    ModificationInstance removal{Variant::EdgeRemoval, g, c.formula, k};
    ModificationInstance completion = removal_to_completion(removal);

    bool removal_yes, completion_yes;
    if (match_exists_forall(c.formula)) {
      removal_yes = solve_edge_sigma2(g, c.formula, k, EdgeMode::Removal).has_value();
      DispatchResult dual = dispatch(completion);
      check.expect(dual.outcome != Outcome::Unsupported, "duality route unsupported");
      completion_yes = dual.outcome == Outcome::Yes;
    } else {
      removal_yes = brute_force(removal).has_value();
      completion_yes = brute_force(completion).has_value();
    }
    check.expect(removal_yes == completion_yes,
                 std::string(c.name) + " k=" + std::to_string(k));
    ++done;
  }
  return check.failures == 0;
}

bool criterion5(Check& check) {
  // Edge-removal instances against their vertex-removal reductions, both by
  // exhaustive search; plus the guarded-intermediate equivalence with random
  // pendant deletions.
  Formula f = formulas::no_isolated_vertex();
  for (int n = 0; n <= 4; ++n) {
    support::for_all_graphs(n, [&](const Graph& g) {
      for (int k = 0; k <= 2; ++k) {
        auto red = edge_to_vertex(g, f, k);
        bool input_yes = brute_force({Variant::EdgeRemoval, g, f, k}).has_value();
        bool output_yes = brute_force(red.instance).has_value();
        check.expect(input_yes == output_yes,
                     "n=" + std::to_string(n) + " m=" + std::to_string(g.num_edges()) +
                         " k=" + std::to_string(k));
      }
    });
  }

  std::mt19937 rng(555);
  std::uniform_int_distribution<int> pick_n(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int n = pick_n(rng);
    Graph g = support::random_graph(n, 0.5, rng);
    int k = 1 + trial % 2;
    auto red = edge_to_vertex(g, f, k);
    bool base = models(g, f);
    check.expect(models(red.instance.graph, red.degree_guarded) == base,
                 "guarded formula disagrees before deletion");
    auto pendants = red.gadget.vertices_with_role(GadgetRole::Pendant);
    std::vector<int> drop;
    std::sample(pendants.begin(), pendants.end(), std::back_inserter(drop),
                static_cast<std::size_t>(k), rng);
    Graph h = delete_vertices(red.instance.graph, drop);
    check.expect(models(h, red.degree_guarded) == base,
                 "guarded formula disagrees after pendant deletion");
  }
  return check.failures == 0;
}

bool criterion6(Check& check) {
  // The output formula is a member of the class one level above the input
  // with the same side. When the fresh quantifier blocks merge into existing
  // runs the minimal written class can stay at the input level, which the
  // higher class contains by subsumption; it never lands above level+1 and
  // never flips the side.
  auto all = support::corpus();
  all.push_back({formulas::witness_rooted_everywhere(), "witness"});
  for (const auto& c : all) {
    bool has_forall = false;
    for (const auto& e : c.formula.prefix())
      has_forall |= e.quantifier == Quantifier::ForAll;
    if (!has_forall) continue;
    PrefixClass before = classify(c.formula);
    PrefixClass after = classify(build_vertex_formula(c.formula).result);
    check.expect(in_prefix_class(after, before.level + 1, before.side),
                 std::string(c.name) + " membership one level up");
    check.expect(after.level <= before.level + 1, std::string(c.name) + " level bound");
    check.expect(after.side == before.side, std::string(c.name) + " side");
  }
  check.expect(classify(build_vertex_formula(formulas::vertex_cover()).result) ==
                   PrefixClass{2, Side::Pi, true},
               "edgeless target lands exactly in Pi 2");
  check.expect(classify(build_vertex_formula(formulas::clique_neighborhood()).result) ==
                   PrefixClass{3, Side::Sigma, true},
               "clique-neighborhood lands exactly in Sigma 3");
  return check.failures == 0;
}

bool criterion7(Check& check) {
  Formula vc = formulas::vertex_cover();
  for (int n = 1; n <= 5; ++n) {
    support::for_all_graphs(n, [&](const Graph& g) {
      HittingFamily fam = extract_hitting_family(g, vc);
      int hit = support::min_hitting_set_size(fam.universe, fam.sets);
      int del = support::min_certificate_size(
          ModificationInstance{Variant::VertexRemoval, g, vc, 0}, n);
      check.expect(hit == del, "hitting vs deletion n=" + std::to_string(n));
    });
  }

  std::mt19937 rng(777);
  std::uniform_int_distribution<int> universe_size(3, 9);
  std::uniform_int_distribution<int> set_count(1, 50);
  std::uniform_int_distribution<int> set_size(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    int u = universe_size(rng);
    std::uniform_int_distribution<int> elem(0, u - 1);
    HittingFamily fam;
    for (int i = 0; i < u; ++i) fam.universe.push_back(i);
    std::set<std::vector<int>> sets;
    int count = set_count(rng);
    for (int i = 0; i < count; ++i) {
      std::set<int> s;
      int size = set_size(rng);
      while (static_cast<int>(s.size()) < size) s.insert(elem(rng));
      sets.insert(std::vector<int>(s.begin(), s.end()));
    }
    fam.sets.assign(sets.begin(), sets.end());
    int k = trial % 4;
    auto kernel = kernelize_hitting_family(fam, k);
    int original = support::min_hitting_set_size(fam.universe, fam.sets);
    bool original_yes = original >= 0 && original <= k;
    bool kernel_yes = false;
    std::size_t kernel_sets = 0;
    if (!kernel.infeasible) {
      int reduced = support::min_hitting_set_size(kernel.family.universe, kernel.family.sets);
      kernel_yes = reduced >= 0 && reduced <= k;
      kernel_sets = kernel.family.sets.size();
    }
    check.expect(original_yes == kernel_yes, "kernel hittability trial " + std::to_string(trial));

    int r = std::max(fam.max_set_size(), 1);
    std::uint64_t bound = 1;
    for (int i = 2; i <= r; ++i) bound *= static_cast<std::uint64_t>(i);
    bound *= static_cast<std::uint64_t>(r);
    for (int i = 0; i < r; ++i) bound *= static_cast<std::uint64_t>(k) + 1;
    check.expect(kernel_sets <= bound, "kernel size bound trial " + std::to_string(trial));
  }
  return check.failures == 0;
}

bool criterion8(Check& check) {
  std::mt19937 rng(888);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = support::random_graph(2 + trial % 4, 0.5, rng);
    int k = trial % 4;
    std::uint64_t n = static_cast<std::uint64_t>(g.num_vertices());
    for (const auto& c : support::corpus()) {
      auto shape_eae = match_exists_forall_exists(c.formula);
      if (shape_eae) {
        SolveStats stats;
        solve_vertex_sigma3(g, c.formula, k, &stats);
        std::uint64_t outer_bound = 1;
        for (int i = 0; i < shape_eae->leading_exists; ++i) outer_bound *= std::max<std::uint64_t>(n, 1);
        check.expect(stats.depth_reached <= k, "vertex depth");
        check.expect(stats.max_branch <= shape_eae->forall_block, "vertex branch width");
        check.expect(stats.outer_tuples <= outer_bound, "vertex outer tuples");
      }
      auto shape_ea = match_exists_forall(c.formula);
      if (shape_ea) {
        int rs = shape_ea->leading_exists + shape_ea->forall_block;
        SolveStats stats;
        solve_edge_sigma2(g, c.formula, k, EdgeMode::Editing, &stats);
        check.expect(stats.depth_reached <= k, "edge depth");
        check.expect(stats.max_branch <= rs * (rs - 1) / 2, "edge branch width");
      }
    }
  }
  return check.failures == 0;
}

bool criterion9(Check& check) {
  std::mt19937 rng(999);
  std::uniform_int_distribution<int> pick_n(2, 5);
  std::uniform_int_distribution<int> pick_t(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_k(1, n);
    int k = pick_k(rng);
    int t = pick_t(rng);
    std::vector<std::pair<Graph, int>> inputs;
    bool any = false;
    for (int i = 0; i < t; ++i) {
      Graph g = support::random_graph(n, 0.5, rng);
      any = any || support::has_clique(g, k);
      inputs.emplace_back(std::move(g), k);
    }
    auto comp = cross_compose_clique(inputs);
    check.expect(comp.instance.k == n - k, "composed budget");
    bool solved =
        solve_vertex_sigma3(comp.instance.graph, comp.instance.formula, comp.instance.k)
            .has_value();
    check.expect(solved == any, "or-semantics trial " + std::to_string(trial));
  }
  return check.failures == 0;
}

bool criterion10(Check& check) {
  Graph petersen = graphs::petersen();
  Formula vc = formulas::vertex_cover();

  // Independent oracle: exhaustive minimum vertex cover via edge coverage.
  auto edges = petersen.edges();
  int minimum = -1;
  for (int k = 0; k <= 10 && minimum < 0; ++k) {
    std::vector<int> chosen;
    std::function<bool(int, int)> rec = [&](int start, int remaining) -> bool {
      bool covered = true;
      for (auto [a, b] : edges) {
        bool hit = false;
        for (int c : chosen) hit |= c == a || c == b;
        if (!hit) {
          covered = false;
          break;
        }
      }
      if (covered) return true;
      if (remaining == 0) return false;
      for (int v = start; v < 10; ++v) {
        chosen.push_back(v);
        if (rec(v + 1, remaining - 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (rec(0, k)) minimum = k;
  }
  check.expect(minimum == 6, "exhaustive minimum vertex cover of the Petersen graph");

  auto start = std::chrono::steady_clock::now();
  auto yes = solve_vertex_sigma3(petersen, vc, 6);
  auto no = solve_vertex_sigma3(petersen, vc, 5);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(yes.has_value(), "k=6 should be a yes-instance");
  check.expect(yes && yes->vertices.size() == 6, "k=6 certificate size");
  check.expect(!no.has_value(), "k=5 should be a no-instance");
  check.expect(secs < 60.0, "runtime within a minute");
  return check.failures == 0;
}

}  // namespace

int main(int argc, char** argv) {
  using Criterion = std::function<bool(Check&)>;
  std::vector<std::pair<std::string, Criterion>> criteria = {
      {"1 vertex solver agrees with exhaustive search (K5 corpus)", criterion1},
      {"2 edge solver agrees with exhaustive search (n<=4 corpus)", criterion2},
      {"3 every YES certificate re-verifies", criterion3},
      {"4 removal/completion duality, 1000 random instances", criterion4},
      {"5 edge-to-vertex reduction equivalence and guarded intermediate", criterion5},
      {"6 vertex formula raises the level by one, same side", criterion6},
      {"7 hitting-set pipeline: family equivalence and kernel soundness", criterion7},
      {"8 search-shape statistics within structural bounds", criterion8},
      {"9 cross-composition OR-semantics, 100 random batches", criterion9},
      {"10 Petersen graph spot check (6 yes / 5 no)", criterion10},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected.empty() && !selected.count(static_cast<int>(i) + 1)) continue;
    Check check;
    auto start = std::chrono::steady_clock::now();
    bool ok = criteria[i].second(check);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %s (%lld checks, %.1fs)\n", ok ? "PASS" : "FAIL",
                criteria[i].first.c_str(), check.cases, secs);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
