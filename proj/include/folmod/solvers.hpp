#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folmod/formula.hpp"
#include "folmod/graph.hpp"
#include "folmod/modelcheck.hpp"

namespace folmod {

enum class Variant : std::uint8_t { VertexRemoval, EdgeRemoval, EdgeCompletion, EdgeEditing };

std::string to_string(Variant v);

struct ModificationInstance {
  Variant variant;
  Graph graph;
  Formula formula;  // sentence
  int k = 0;
};

struct SolveStats {
  std::uint64_t nodes = 0;            // search-tree nodes visited
  std::uint64_t tuples_examined = 0;  // universal-block tuples checked
  std::uint64_t outer_tuples = 0;     // leading existential tuples tried
  int depth_reached = 0;
  int max_branch = 0;  // widest branching at any node
  double wall_ms = 0;
};

// Certificate plus the statistics of the search that produced it. Every
// solver re-verifies the certificate against the formula before returning;
// a failure there is a logic error, not a user error.
struct Solution {
  Variant variant = Variant::VertexRemoval;
  std::vector<int> vertices;                 // vertex-removal certificate
  std::vector<std::pair<int, int>> pairs;    // edge certificates, canonical (min,max)
  SolveStats stats;

  std::size_t size() const {
    return variant == Variant::VertexRemoval ? vertices.size() : pairs.size();
  }
};

// Splits a prefix written as exists^r forall^s exists^t into block lengths.
struct PrefixShape {
  int leading_exists = 0;
  int forall_block = 0;
  int trailing_exists = 0;
};
std::optional<PrefixShape> match_exists_forall_exists(const Formula& f);
std::optional<PrefixShape> match_exists_forall(const Formula& f);

// Bounded search tree for vertex removal, prefix exists^r forall^s exists^t:
// fix an outer r-tuple, repeatedly look for a violating s-tuple and branch on
// deleting one of its vertices outside the protected tuple, to depth k.
std::optional<Solution> solve_vertex_sigma3(const Graph& g, const Formula& f, int k,
                                            SolveStats* stats = nullptr);

enum class EdgeMode : std::uint8_t { Removal, Editing };

// Bounded search tree for edge removal/editing, prefix exists^r forall^s:
// candidates are pairs inside the union of the outer tuple and the violating
// tuple; editing may toggle any such pair not already edited on this path.
std::optional<Solution> solve_edge_sigma2(const Graph& g, const Formula& f, int k, EdgeMode mode,
                                          SolveStats* stats = nullptr);

// Purely existential prefixes: vertex removal is a yes-instance exactly when
// the graph already models the formula; edge variants only ever need edits
// inside some min(r, n)-vertex subset, which is searched exhaustively.
std::optional<Solution> solve_sigma1(const Graph& g, const Formula& f, int k, Variant variant,
                                     SolveStats* stats = nullptr);

// Family of vertex sets of violating tuples for a purely universal formula.
// Deleting a vertex set of size <= k is a solution exactly when it hits
// every member.
struct HittingFamily {
  std::vector<int> universe;
  std::vector<std::vector<int>> sets;  // each sorted; list sorted and deduplicated

  int max_set_size() const;
};

HittingFamily extract_hitting_family(const Graph& g, const Formula& f);

// Sunflower kernel: while some size class is larger than d!*(k+1)^d, find a
// sunflower with k+2 petals and replace it by its core. An empty core means
// k+2 pairwise disjoint sets, which no k vertices can hit.
struct KernelizeResult {
  bool infeasible = false;
  HittingFamily family;
};

KernelizeResult kernelize_hitting_family(const HittingFamily& fam, int k);

// Exhaustive reference: tries certificates in order of size, lexicographic
// within a size, and returns the first that verifies. Intended for desk
// scale; correct for any instance it finishes on.
std::optional<Solution> brute_force(const ModificationInstance& inst, SolveStats* stats = nullptr);

enum class Outcome : std::uint8_t { Yes, No, Unsupported };

struct DispatchOptions {
  bool allow_brute_force = false;  // fall back on unsupported prefixes, desk scale only
};

struct DispatchResult {
  Outcome outcome = Outcome::Unsupported;
  std::optional<Solution> solution;
  std::string method;
  std::string reason;  // set when unsupported
  SolveStats stats;
};

// Routes an instance to the strongest applicable method: purely existential
// prefixes to the polynomial solver, purely universal vertex removal through
// the hitting-set pipeline, exists*forall*exists* vertex removal and
// exists*forall* edge problems to the branching solvers, edge completion
// through complement duality. Anything else is unsupported (W[2]-hard).
DispatchResult dispatch(const ModificationInstance& inst, const DispatchOptions& opts = {});

Graph apply_certificate(const Graph& g, Variant variant, const std::vector<int>& vertices,
                        const std::vector<std::pair<int, int>>& pairs);
bool verify_certificate(const Graph& g, const Formula& f, const Solution& sol);

// Line-oriented key=value block for harnesses.
std::string format_stats(const SolveStats& stats);

}  // namespace folmod
