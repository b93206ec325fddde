#include <algorithm>
#include <chrono>

#include "folmod/solvers.hpp"

namespace folmod {

namespace {

bool pure_exists(const PrefixShape& s) { return s.forall_block == 0 && s.trailing_exists == 0; }
bool pure_forall(const PrefixShape& s) { return s.leading_exists == 0 && s.trailing_exists == 0; }

// Lexicographic size-ascending search for a hitting set of at most k
// elements over the family universe.
std::optional<std::vector<int>> small_hitting_set(const HittingFamily& fam, int k) {
  auto hits_all = [&](const std::vector<int>& chosen) {
    for (const auto& s : fam.sets) {
      bool hit = false;
      for (int x : chosen)
        if (std::binary_search(s.begin(), s.end(), x)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };
  int limit = std::min<int>(k, static_cast<int>(fam.universe.size()));
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> bool {
    if (hits_all(chosen)) return true;
    if (remaining == 0) return false;
    for (std::size_t i = start; i < fam.universe.size(); ++i) {
      chosen.push_back(fam.universe[i]);
      if (self(self, i + 1, remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(rec, 0, limit)) return chosen;
  return std::nullopt;
}

DispatchResult unsupported(std::string reason) {
  DispatchResult out;
  out.outcome = Outcome::Unsupported;
  out.reason = std::move(reason);
  return out;
}

DispatchResult from_solution(std::optional<Solution> sol, SolveStats stats, std::string method) {
  DispatchResult out;
  out.outcome = sol ? Outcome::Yes : Outcome::No;
  out.solution = std::move(sol);
  out.stats = stats;
  out.method = std::move(method);
  return out;
}

}  // namespace

DispatchResult dispatch(const ModificationInstance& inst, const DispatchOptions& opts) {
  if (!inst.formula.is_sentence())
    throw std::invalid_argument("dispatch: formula must be a sentence");
  if (inst.k < 0) throw std::invalid_argument("dispatch: negative budget");

  auto eae = match_exists_forall_exists(inst.formula);
  auto ea = match_exists_forall(inst.formula);
  SolveStats stats;

  if (inst.variant == Variant::VertexRemoval) {
    if (eae && pure_exists(*eae))
      return from_solution(solve_sigma1(inst.graph, inst.formula, inst.k, inst.variant, &stats),
                           stats, "sigma1-polynomial");
    if (eae && pure_forall(*eae)) {
      // Hitting-set pipeline: violating-tuple family, sunflower kernel, then
      // an exact search over the kernel universe.
      auto started = std::chrono::steady_clock::now();
      HittingFamily fam = extract_hitting_family(inst.graph, inst.formula);
      auto kernel = kernelize_hitting_family(fam, inst.k);
      DispatchResult out;
      out.method = "hitting-set-kernel";
      if (!kernel.infeasible) {
        if (auto hitters = small_hitting_set(kernel.family, inst.k)) {
          Solution sol;
          sol.variant = Variant::VertexRemoval;
          sol.vertices = *hitters;
          std::sort(sol.vertices.begin(), sol.vertices.end());
          if (!verify_certificate(inst.graph, inst.formula, sol))
            throw std::logic_error("dispatch: hitting set fails as a deletion set");
          out.outcome = Outcome::Yes;
          out.solution = std::move(sol);
        } else {
          out.outcome = Outcome::No;
        }
      } else {
        out.outcome = Outcome::No;
      }
      out.stats.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started)
                              .count();
      out.stats.tuples_examined = fam.sets.size();
      if (out.solution) out.solution->stats = out.stats;
      return out;
    }
    if (eae)
      return from_solution(solve_vertex_sigma3(inst.graph, inst.formula, inst.k, &stats), stats,
                           "sigma3-branching");
    if (opts.allow_brute_force && inst.graph.num_vertices() <= 8 && inst.k <= 4)
      return from_solution(brute_force(inst, &stats), stats, "brute-force");
    return unsupported(
        "vertex removal is W[2]-hard once the prefix needs a universal block before and after "
        "an existential one (Pi-3 and beyond); rerun with the brute-force fallback at desk "
        "scale if needed");
  }

  // Edge variants.
  if (eae && pure_exists(*eae))
    return from_solution(solve_sigma1(inst.graph, inst.formula, inst.k, inst.variant, &stats),
                         stats, "sigma1-polynomial");
  if (ea) {
    if (inst.variant == Variant::EdgeRemoval)
      return from_solution(solve_edge_sigma2(inst.graph, inst.formula, inst.k, EdgeMode::Removal,
                                             &stats),
                           stats, "sigma2-branching");
    if (inst.variant == Variant::EdgeEditing)
      return from_solution(solve_edge_sigma2(inst.graph, inst.formula, inst.k, EdgeMode::Editing,
                                             &stats),
                           stats, "sigma2-branching");
    // Completion: adding F to g is removing F from the complement, with the
    // formula rewritten for the complement graph.
    Graph co = complement(inst.graph);
    Formula co_formula = complement_formula(inst.formula);
    auto sol = solve_edge_sigma2(co, co_formula, inst.k, EdgeMode::Removal, &stats);
    if (sol) {
      sol->variant = Variant::EdgeCompletion;
      if (!verify_certificate(inst.graph, inst.formula, *sol))
        throw std::logic_error("dispatch: complement-duality certificate failed");
    }
    return from_solution(std::move(sol), stats, "sigma2-branching+complement-duality");
  }
  if (opts.allow_brute_force && inst.graph.num_vertices() <= 8 && inst.k <= 4)
    return from_solution(brute_force(inst, &stats), stats, "brute-force");
  return unsupported(
      "edge modification is W[2]-hard once an existential quantifier follows a universal one "
      "(Pi-2 and beyond); rerun with the brute-force fallback at desk scale if needed");
}

}  // namespace folmod
