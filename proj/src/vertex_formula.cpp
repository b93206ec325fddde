#include <algorithm>
#include <unordered_set>

#include "folmod/formula.hpp"

namespace folmod {

namespace {

class NamePool {
 public:
  explicit NamePool(const std::vector<std::string>& taken)
      : used_(taken.begin(), taken.end()) {}

  std::string fresh(const std::string& base) {
    if (used_.insert(base).second) return base;
    for (int suffix = 2;; ++suffix) {
      std::string candidate = base + "_" + std::to_string(suffix);
      if (used_.insert(candidate).second) return candidate;
    }
  }

 private:
  std::unordered_set<std::string> used_;
};

}  // namespace

VertexFormula build_vertex_formula(const Formula& f) {
  if (!f.is_sentence())
    throw std::invalid_argument("build_vertex_formula: formula has free variables");
  if (f.prefix().empty())
    throw std::invalid_argument("build_vertex_formula: prefix is empty");
  bool has_forall = std::any_of(f.prefix().begin(), f.prefix().end(), [](const PrefixEntry& e) {
    return e.quantifier == Quantifier::ForAll;
  });
  if (!has_forall)
    throw std::invalid_argument("build_vertex_formula: prefix contains no universal quantifier");

  std::vector<std::string> names = f.names();
  NamePool pool(names);
  auto add_var = [&](const std::string& base) {
    int id = static_cast<int>(names.size());
    names.push_back(pool.fresh(base));
    return id;
  };

  // Each positive adjacency occurrence is rewritten through a fresh
  // existential midpoint variable; each negated occurrence through a fresh
  // universal one. Occurrences are counted in the CNF matrix, left to right.
  std::vector<int> midpoint_exists;  // fresh vars for positive occurrences
  std::vector<int> midpoint_forall;  // fresh vars for negated occurrences

  auto rewrite = [&](const Expr& e, auto&& self) -> Expr {
    if (e.kind() == Expr::Kind::Not && e.left().is_atom() &&
        e.left().atom_kind() == AtomKind::Adjacent) {
      int a = e.left().var_a(), b = e.left().var_b();
      int z = add_var("z" + std::to_string(midpoint_forall.size() + 1));
      midpoint_forall.push_back(z);
      return Expr::disjunction_of({Expr::equal(a, b), Expr::negation(Expr::adjacent(a, z)),
                                   Expr::negation(Expr::adjacent(z, b))});
    }
    if (e.is_atom()) {
      if (e.atom_kind() != AtomKind::Adjacent) return e;
      int a = e.var_a(), b = e.var_b();
      int y = add_var("y" + std::to_string(midpoint_exists.size() + 1));
      midpoint_exists.push_back(y);
      return Expr::conjunction_of({Expr::negation(Expr::equal(a, b)), Expr::adjacent(a, y),
                                   Expr::adjacent(y, b)});
    }
    if (e.kind() == Expr::Kind::Not) return Expr::negation(self(e.left(), self));
    Expr l = self(e.left(), self);
    Expr r = self(e.right(), self);
    switch (e.kind()) {
      case Expr::Kind::And: return Expr::conjunction(l, r);
      case Expr::Kind::Or: return Expr::disjunction(l, r);
      case Expr::Kind::Implies: return Expr::implication(l, r);
      case Expr::Kind::Iff: return Expr::equivalence(l, r);
      default: throw std::logic_error("build_vertex_formula: unreachable");
    }
  };

  Expr rewritten = rewrite(to_cnf(f.matrix()), rewrite);

  // New quantifier block after the original prefix, at most one extra
  // alternation: existential midpoints first when the prefix ends with an
  // existential quantifier, universal midpoints first otherwise.
  std::vector<PrefixEntry> midpoint_block;
  if (f.prefix().back().quantifier == Quantifier::Exists) {
    for (int y : midpoint_exists) midpoint_block.push_back({Quantifier::Exists, y});
    for (int z : midpoint_forall) midpoint_block.push_back({Quantifier::ForAll, z});
  } else {
    for (int z : midpoint_forall) midpoint_block.push_back({Quantifier::ForAll, z});
    for (int y : midpoint_exists) midpoint_block.push_back({Quantifier::Exists, y});
  }

  std::vector<PrefixEntry> incidence_prefix = f.prefix();
  incidence_prefix.insert(incidence_prefix.end(), midpoint_block.begin(), midpoint_block.end());
  Formula incidence_encoded(names, incidence_prefix, {}, rewritten);

  // Guard every original variable by three pairwise-distinct neighbours, so
  // it can only range over branching vertices of the gadget: conjoined under
  // an existential quantifier, hypothesis of an implication under a
  // universal one.
  std::vector<PrefixEntry> guarded_prefix = midpoint_block;
  Expr body = rewritten;
  const auto& original = f.prefix();
  for (int i = static_cast<int>(original.size()) - 1; i >= 0; --i) {
    const PrefixEntry& entry = original[i];
    int r1 = add_var("r" + std::to_string(i + 1) + "_1");
    int r2 = add_var("r" + std::to_string(i + 1) + "_2");
    int r3 = add_var("r" + std::to_string(i + 1) + "_3");
    Expr distinct = Expr::conjunction_of({Expr::negation(Expr::equal(r1, r2)),
                                          Expr::negation(Expr::equal(r1, r3)),
                                          Expr::negation(Expr::equal(r2, r3))});
    Expr attached = Expr::conjunction_of({Expr::adjacent(entry.variable, r1),
                                          Expr::adjacent(entry.variable, r2),
                                          Expr::adjacent(entry.variable, r3)});
    Expr guard = Expr::conjunction(distinct, attached);
    body = entry.quantifier == Quantifier::Exists ? Expr::conjunction(guard, body)
                                                  : Expr::implication(guard, body);
    std::vector<PrefixEntry> head = {{entry.quantifier, entry.variable},
                                     {entry.quantifier, r1},
                                     {entry.quantifier, r2},
                                     {entry.quantifier, r3}};
    guarded_prefix.insert(guarded_prefix.begin(), head.begin(), head.end());
  }
  Formula degree_guarded(names, guarded_prefix, {}, body);

  // Isolated-vertex guard: a universally quantified vertex inserted after
  // the leading existential run must keep a neighbour chosen at the first
  // later existential position (or at the end of the prefix).
  std::size_t first_forall = 0;
  while (guarded_prefix[first_forall].quantifier != Quantifier::ForAll) ++first_forall;
  std::size_t first_exists_after = first_forall;
  while (first_exists_after < guarded_prefix.size() &&
         guarded_prefix[first_exists_after].quantifier != Quantifier::Exists)
    ++first_exists_after;

  int s1 = add_var("s1");
  int s2 = add_var("s2");
  std::vector<PrefixEntry> final_prefix;
  final_prefix.reserve(guarded_prefix.size() + 2);
  final_prefix.insert(final_prefix.end(), guarded_prefix.begin(),
                      guarded_prefix.begin() + first_forall);
  final_prefix.push_back({Quantifier::ForAll, s1});
  final_prefix.insert(final_prefix.end(), guarded_prefix.begin() + first_forall,
                      guarded_prefix.begin() + first_exists_after);
  final_prefix.push_back({Quantifier::Exists, s2});
  final_prefix.insert(final_prefix.end(), guarded_prefix.begin() + first_exists_after,
                      guarded_prefix.end());
  Formula result(names, final_prefix, {}, Expr::conjunction(Expr::adjacent(s1, s2), body));

  return VertexFormula{std::move(result), std::move(degree_guarded), std::move(incidence_encoded)};
}

}  // namespace folmod
