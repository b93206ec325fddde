#include <algorithm>
#include <tuple>

#include "folmod/formula.hpp"

namespace folmod {

namespace {

struct Lit {
  bool negated;
  AtomKind kind;
  int a, b;
};

using Clause = std::vector<Lit>;
using ClauseList = std::vector<Clause>;

std::tuple<bool, AtomKind, int, int> key(const Lit& l) {
  return {l.negated, l.kind, std::min(l.a, l.b), std::max(l.a, l.b)};
}

Clause merge(const Clause& x, const Clause& y) {
  Clause out = x;
  for (const Lit& l : y) {
    bool dup = false;
    for (const Lit& m : out)
      if (key(m) == key(l)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(l);
  }
  return out;
}

ClauseList conjoin(ClauseList x, const ClauseList& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

ClauseList distribute(const ClauseList& x, const ClauseList& y) {
  ClauseList out;
  out.reserve(x.size() * y.size());
  for (const Clause& cx : x)
    for (const Clause& cy : y) out.push_back(merge(cx, cy));
  return out;
}

// Negation normal form and distribution in one pass.
ClauseList clauses(const Expr& e, bool negated) {
  switch (e.kind()) {
    case Expr::Kind::Atom:
      return {{Lit{negated, e.atom_kind(), e.var_a(), e.var_b()}}};
    case Expr::Kind::Not:
      return clauses(e.left(), !negated);
    case Expr::Kind::And:
      if (negated) return distribute(clauses(e.left(), true), clauses(e.right(), true));
      return conjoin(clauses(e.left(), false), clauses(e.right(), false));
    case Expr::Kind::Or:
      if (negated) return conjoin(clauses(e.left(), true), clauses(e.right(), true));
      return distribute(clauses(e.left(), false), clauses(e.right(), false));
    case Expr::Kind::Implies:
      if (negated) return conjoin(clauses(e.left(), false), clauses(e.right(), true));
      return distribute(clauses(e.left(), true), clauses(e.right(), false));
    case Expr::Kind::Iff: {
      if (negated)
        return conjoin(distribute(clauses(e.left(), false), clauses(e.right(), false)),
                       distribute(clauses(e.left(), true), clauses(e.right(), true)));
      return conjoin(distribute(clauses(e.left(), true), clauses(e.right(), false)),
                     distribute(clauses(e.right(), true), clauses(e.left(), false)));
    }
  }
  throw std::logic_error("clauses: unreachable");
}

Expr literal_expr(const Lit& l) {
  Expr atom = l.kind == AtomKind::Adjacent ? Expr::adjacent(l.a, l.b) : Expr::equal(l.a, l.b);
  return l.negated ? Expr::negation(atom) : atom;
}

}  // namespace

Expr to_cnf(const Expr& matrix) {
  ClauseList cs = clauses(matrix, false);
  std::vector<Expr> clause_exprs;
  clause_exprs.reserve(cs.size());
  for (const Clause& c : cs) {
    std::vector<Expr> lits;
    lits.reserve(c.size());
    for (const Lit& l : c) lits.push_back(literal_expr(l));
    clause_exprs.push_back(Expr::disjunction_of(lits));
  }
  return Expr::conjunction_of(clause_exprs);
}

}  // namespace folmod
