#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "folmod/formula.hpp"
#include "folmod/graph.hpp"

namespace folmod {

// Vertex values for the free variables of a formula, in free-variable order.
// Repeated vertices are allowed.
using Assignment = std::vector<int>;

// Restricts chosen prefix variables to a subset of the vertex set.
struct DomainRestriction {
  std::unordered_map<int, std::vector<int>> domains;  // variable id -> vertices
};

struct EvalStats {
  std::uint64_t matrix_evals = 0;  // full-assignment matrix evaluations, <= n^(prefix length)
  std::uint64_t cuts = 0;          // subtrees settled by partial evaluation
  std::uint64_t memo_hits = 0;
};

// Tarskian evaluation by backtracking over the prefix in order, with
// three-valued partial evaluation of the matrix, early subtree cuts and a
// residual-keyed memo. Deterministic; exists over an empty domain is false,
// forall over an empty domain is true.
bool models(const Graph& g, const Formula& f, std::span<const int> assignment = {},
            const DomainRestriction* restriction = nullptr, EvalStats* stats = nullptr);

// For a formula whose prefix starts with a universal block of length s after
// the opened variables (bound to `opened`), returns the lexicographically
// smallest s-tuple under which the remainder fails, or nothing if the
// structure is a model. Rejects prefixes that start existentially.
std::optional<Assignment> find_violating_tuple(const Graph& g, const Formula& f_open,
                                               std::span<const int> opened,
                                               EvalStats* stats = nullptr,
                                               std::uint64_t* tuples_examined = nullptr);

}  // namespace folmod
