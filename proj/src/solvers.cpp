#include "folmod/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace folmod {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_sentence(const Formula& f, const char* who) {
  if (!f.is_sentence())
    throw std::invalid_argument(std::string(who) + ": formula must be a sentence");
}

void require_budget(int k, const char* who) {
  if (k < 0) throw std::invalid_argument(std::string(who) + ": negative budget");
}

// Lexicographic enumeration of all tuples of the given length over `domain`.
// Calls fn for each tuple; stops early when fn returns true.
bool for_each_tuple(const std::vector<int>& domain, int length,
                    const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(length);
  std::vector<int> index(length, 0);
  if (length == 0) return fn(tuple);
  if (domain.empty()) return false;
  for (;;) {
    for (int i = 0; i < length; ++i) tuple[i] = domain[index[i]];
    if (fn(tuple)) return true;
    int pos = length - 1;
    while (pos >= 0 && index[pos] + 1 == static_cast<int>(domain.size())) index[pos--] = 0;
    if (pos < 0) return false;
    ++index[pos];
  }
}

// Lexicographic enumeration of all size-`count` subsets of `items`.
template <typename T, typename Fn>
bool for_each_combination(const std::vector<T>& items, int count, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (count > n) return false;
  std::vector<int> idx(count);
  for (int i = 0; i < count; ++i) idx[i] = i;
  std::vector<T> chosen(count);
  for (;;) {
    for (int i = 0; i < count; ++i) chosen[i] = items[idx[i]];
    if (fn(chosen)) return true;
    int pos = count - 1;
    while (pos >= 0 && idx[pos] == n - count + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int i = pos + 1; i < count; ++i) idx[i] = idx[i - 1] + 1;
  }
}

std::vector<std::pair<int, int>> all_pairs(const std::vector<int>& verts) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) out.emplace_back(verts[i], verts[j]);
  return out;
}

void check_verified(bool ok, const char* who) {
  if (!ok)
    throw std::logic_error(std::string(who) +
                           ": certificate failed re-verification; solver bug");
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::VertexRemoval: return "vertex-removal";
    case Variant::EdgeRemoval: return "edge-removal";
    case Variant::EdgeCompletion: return "edge-completion";
    case Variant::EdgeEditing: return "edge-editing";
  }
  return "?";
}

std::optional<PrefixShape> match_exists_forall_exists(const Formula& f) {
  PrefixShape shape;
  std::size_t i = 0;
  const auto& p = f.prefix();
  while (i < p.size() && p[i].quantifier == Quantifier::Exists) ++i, ++shape.leading_exists;
  while (i < p.size() && p[i].quantifier == Quantifier::ForAll) ++i, ++shape.forall_block;
  while (i < p.size() && p[i].quantifier == Quantifier::Exists) ++i, ++shape.trailing_exists;
  if (i != p.size()) return std::nullopt;
  return shape;
}

std::optional<PrefixShape> match_exists_forall(const Formula& f) {
  auto shape = match_exists_forall_exists(f);
  if (!shape || shape->trailing_exists != 0) return std::nullopt;
  return shape;
}

Graph apply_certificate(const Graph& g, Variant variant, const std::vector<int>& vertices,
                        const std::vector<std::pair<int, int>>& pairs) {
  switch (variant) {
    case Variant::VertexRemoval: return delete_vertices(g, vertices);
    case Variant::EdgeRemoval: return edit_edges(g, pairs, EditMode::Remove);
    case Variant::EdgeCompletion: return edit_edges(g, pairs, EditMode::Add);
    case Variant::EdgeEditing: return edit_edges(g, pairs, EditMode::Toggle);
  }
  throw std::logic_error("apply_certificate: unreachable");
}

bool verify_certificate(const Graph& g, const Formula& f, const Solution& sol) {
  return models(apply_certificate(g, sol.variant, sol.vertices, sol.pairs), f);
}

std::optional<Solution> solve_vertex_sigma3(const Graph& g, const Formula& f, int k,
                                            SolveStats* stats_out) {
  require_sentence(f, "solve_vertex_sigma3");
  require_budget(k, "solve_vertex_sigma3");
  auto shape = match_exists_forall_exists(f);
  if (!shape)
    throw std::invalid_argument(
        "solve_vertex_sigma3: prefix is not of the form exists*forall*exists*");
  const int r = shape->leading_exists;
  const auto start = Clock::now();
  SolveStats stats;
  Formula opened = open_formula(f, r);

  std::optional<Solution> found;
  std::vector<int> protected_tuple;

  // Bounded search below one outer tuple; the protected vertices are never
  // deleted, so they stay valid in every derived graph.
  auto descend = [&](auto&& self, const Graph& current, std::vector<int>& chosen) -> bool {
    ++stats.nodes;
    stats.depth_reached = std::max(stats.depth_reached, static_cast<int>(chosen.size()));
    std::uint64_t examined = 0;
    auto violator = find_violating_tuple(current, opened, protected_tuple, nullptr, &examined);
    stats.tuples_examined += examined;
    if (!violator) {
      Solution sol;
      sol.variant = Variant::VertexRemoval;
      sol.vertices = chosen;
      std::sort(sol.vertices.begin(), sol.vertices.end());
      check_verified(models(delete_vertices(g, sol.vertices), f), "solve_vertex_sigma3");
      found = std::move(sol);
      return true;
    }
    if (static_cast<int>(chosen.size()) == k) return false;
    std::set<int> branch;
    for (int v : *violator)
      if (std::find(protected_tuple.begin(), protected_tuple.end(), v) == protected_tuple.end())
        branch.insert(v);
    if (branch.empty()) return false;
    stats.max_branch = std::max(stats.max_branch, static_cast<int>(branch.size()));
    for (int v : branch) {
      chosen.push_back(v);
      Graph next = delete_vertices(current, {v});
      bool done = self(self, next, chosen);
      chosen.pop_back();
      if (done) return true;
    }
    return false;
  };

  for_each_tuple(g.vertices(), r, [&](const std::vector<int>& u) {
    ++stats.outer_tuples;
    protected_tuple = u;
    std::vector<int> chosen;
    return descend(descend, g, chosen);
  });

  stats.wall_ms = elapsed_ms(start);
  if (found) found->stats = stats;
  if (stats_out) *stats_out = stats;
  return found;
}

std::optional<Solution> solve_edge_sigma2(const Graph& g, const Formula& f, int k, EdgeMode mode,
                                          SolveStats* stats_out) {
  require_sentence(f, "solve_edge_sigma2");
  require_budget(k, "solve_edge_sigma2");
  auto shape = match_exists_forall(f);
  if (!shape)
    throw std::invalid_argument("solve_edge_sigma2: prefix is not of the form exists*forall*");
  const int r = shape->leading_exists;
  const auto start = Clock::now();
  SolveStats stats;
  Formula opened = open_formula(f, r);
  const Variant variant = mode == EdgeMode::Removal ? Variant::EdgeRemoval : Variant::EdgeEditing;

  std::optional<Solution> found;
  std::vector<int> protected_tuple;

  auto descend = [&](auto&& self, std::vector<std::pair<int, int>>& edited) -> bool {
    ++stats.nodes;
    stats.depth_reached = std::max(stats.depth_reached, static_cast<int>(edited.size()));
    Graph current = apply_certificate(g, variant, {}, edited);
    std::uint64_t examined = 0;
    auto violator = find_violating_tuple(current, opened, protected_tuple, nullptr, &examined);
    stats.tuples_examined += examined;
    if (!violator) {
      Solution sol;
      sol.variant = variant;
      sol.pairs = edited;
      std::sort(sol.pairs.begin(), sol.pairs.end());
      check_verified(models(apply_certificate(g, variant, {}, sol.pairs), f),
                     "solve_edge_sigma2");
      found = std::move(sol);
      return true;
    }
    if (static_cast<int>(edited.size()) == k) return false;
    std::set<int> touched(protected_tuple.begin(), protected_tuple.end());
    touched.insert(violator->begin(), violator->end());
    std::vector<int> verts(touched.begin(), touched.end());
    std::vector<std::pair<int, int>> candidates;
    for (auto [a, b] : all_pairs(verts)) {
      if (mode == EdgeMode::Removal) {
        if (current.has_edge(a, b)) candidates.emplace_back(a, b);
      } else {
        // Toggling a pair twice on one path is never useful.
        if (std::find(edited.begin(), edited.end(), std::make_pair(a, b)) == edited.end())
          candidates.emplace_back(a, b);
      }
    }
    if (candidates.empty()) return false;
    stats.max_branch = std::max(stats.max_branch, static_cast<int>(candidates.size()));
    for (auto e : candidates) {
      edited.push_back(e);
      bool done = self(self, edited);
      edited.pop_back();
      if (done) return true;
    }
    return false;
  };

  for_each_tuple(g.vertices(), r, [&](const std::vector<int>& u) {
    ++stats.outer_tuples;
    protected_tuple = u;
    std::vector<std::pair<int, int>> edited;
    return descend(descend, edited);
  });

  stats.wall_ms = elapsed_ms(start);
  if (found) found->stats = stats;
  if (stats_out) *stats_out = stats;
  return found;
}

std::optional<Solution> solve_sigma1(const Graph& g, const Formula& f, int k, Variant variant,
                                     SolveStats* stats_out) {
  require_sentence(f, "solve_sigma1");
  require_budget(k, "solve_sigma1");
  auto shape = match_exists_forall_exists(f);
  if (!shape || shape->forall_block != 0 || shape->trailing_exists != 0)
    throw std::invalid_argument("solve_sigma1: formula is not purely existential");
  const int r = shape->leading_exists;
  const auto start = Clock::now();
  SolveStats stats;
  std::optional<Solution> found;

  if (variant == Variant::VertexRemoval) {
    // Induced subgraphs preserve all relations among surviving vertices, so
    // removal can never create a witness: yes exactly when g already models.
    ++stats.nodes;
    if (models(g, f)) {
      Solution sol;
      sol.variant = variant;
      check_verified(verify_certificate(g, f, sol), "solve_sigma1");
      found = std::move(sol);
    }
  } else {
    const int subset_size = std::min(r, g.num_vertices());
    for_each_combination(g.vertices(), subset_size, [&](const std::vector<int>& support) {
      ++stats.outer_tuples;
      std::vector<int> outside;
      for (int v : g.vertices())
        if (!std::binary_search(support.begin(), support.end(), v)) outside.push_back(v);
      Graph induced = delete_vertices(g, outside);
      std::vector<std::pair<int, int>> candidates;
      for (auto [a, b] : all_pairs(support)) {
        bool edge = induced.has_edge(a, b);
        if (variant == Variant::EdgeRemoval ? edge
            : variant == Variant::EdgeCompletion ? !edge
                                                 : true)
          candidates.emplace_back(a, b);
      }
      int limit = std::min<int>(k, static_cast<int>(candidates.size()));
      for (int size = 0; size <= limit; ++size) {
        bool done = for_each_combination(
            candidates, size, [&](const std::vector<std::pair<int, int>>& edit) {
              ++stats.nodes;
              Graph sub = apply_certificate(induced, variant, {}, edit);
              if (!models(sub, f)) return false;
              Solution sol;
              sol.variant = variant;
              sol.pairs = edit;
              check_verified(verify_certificate(g, f, sol), "solve_sigma1");
              found = std::move(sol);
              return true;
            });
        if (done) return true;
      }
      return false;
    });
  }

  stats.wall_ms = elapsed_ms(start);
  if (found) found->stats = stats;
  if (stats_out) *stats_out = stats;
  return found;
}

int HittingFamily::max_set_size() const {
  std::size_t best = 0;
  for (const auto& s : sets) best = std::max(best, s.size());
  return static_cast<int>(best);
}

HittingFamily extract_hitting_family(const Graph& g, const Formula& f) {
  require_sentence(f, "extract_hitting_family");
  auto shape = match_exists_forall_exists(f);
  if (!shape || shape->leading_exists != 0 || shape->trailing_exists != 0)
    throw std::invalid_argument("extract_hitting_family: formula is not purely universal");
  const int r = shape->forall_block;
  Formula opened = open_formula(f, r);
  std::set<std::vector<int>> collected;
  for_each_tuple(g.vertices(), r, [&](const std::vector<int>& tuple) {
    if (!models(g, opened, tuple)) {
      std::vector<int> set(tuple);
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      collected.insert(std::move(set));
    }
    return false;
  });
  HittingFamily fam;
  fam.universe = g.vertices();
  fam.sets.assign(collected.begin(), collected.end());
  return fam;
}

std::optional<Solution> brute_force(const ModificationInstance& inst, SolveStats* stats_out) {
  require_sentence(inst.formula, "brute_force");
  require_budget(inst.k, "brute_force");
  const auto start = Clock::now();
  SolveStats stats;
  std::optional<Solution> found;

  std::vector<std::pair<int, int>> pair_pool;
  switch (inst.variant) {
    case Variant::VertexRemoval: break;
    case Variant::EdgeRemoval: pair_pool = inst.graph.edges(); break;
    case Variant::EdgeCompletion:
      for (auto e : all_pairs(inst.graph.vertices()))
        if (!inst.graph.has_edge(e.first, e.second)) pair_pool.push_back(e);
      break;
    case Variant::EdgeEditing: pair_pool = all_pairs(inst.graph.vertices()); break;
  }

  if (inst.variant == Variant::VertexRemoval) {
    int limit = std::min(inst.k, inst.graph.num_vertices());
    for (int size = 0; size <= limit && !found; ++size) {
      for_each_combination(inst.graph.vertices(), size, [&](const std::vector<int>& drop) {
        ++stats.tuples_examined;
        if (!models(delete_vertices(inst.graph, drop), inst.formula)) return false;
        Solution sol;
        sol.variant = inst.variant;
        sol.vertices = drop;
        found = std::move(sol);
        return true;
      });
    }
  } else {
    int limit = std::min<int>(inst.k, static_cast<int>(pair_pool.size()));
    for (int size = 0; size <= limit && !found; ++size) {
      for_each_combination(pair_pool, size, [&](const std::vector<std::pair<int, int>>& edit) {
        ++stats.tuples_examined;
        if (!models(apply_certificate(inst.graph, inst.variant, {}, edit), inst.formula))
          return false;
        Solution sol;
        sol.variant = inst.variant;
        sol.pairs = edit;
        found = std::move(sol);
        return true;
      });
    }
  }

  stats.nodes = stats.tuples_examined;
  stats.wall_ms = elapsed_ms(start);
  if (found) {
    check_verified(verify_certificate(inst.graph, inst.formula, *found), "brute_force");
    found->stats = stats;
  }
  if (stats_out) *stats_out = stats;
  return found;
}

std::string format_stats(const SolveStats& stats) {
  std::ostringstream os;
  os << "nodes=" << stats.nodes << "\n";
  os << "tuples=" << stats.tuples_examined << "\n";
  os << "outer_tuples=" << stats.outer_tuples << "\n";
  os << "depth=" << stats.depth_reached << "\n";
  os << "max_branch=" << stats.max_branch << "\n";
  os << "wall_ms=" << stats.wall_ms << "\n";
  return os.str();
}

}  // namespace folmod
