#include "folmod/formula.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace folmod {

Expr Expr::adjacent(int a, int b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = AtomKind::Adjacent;
  n->a = a;
  n->b = b;
  return Expr(std::move(n));
}

Expr Expr::equal(int a, int b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = AtomKind::Equal;
  n->a = a;
  n->b = b;
  return Expr(std::move(n));
}

Expr Expr::negation(Expr inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->lhs = inner.node_;
  return Expr(std::move(n));
}

Expr Expr::conjunction(Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Expr(std::move(n));
}

Expr Expr::disjunction(Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Expr(std::move(n));
}

Expr Expr::implication(Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Expr(std::move(n));
}

Expr Expr::equivalence(Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Iff;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Expr(std::move(n));
}

Expr Expr::conjunction_of(const std::vector<Expr>& parts) {
  if (parts.empty()) throw std::invalid_argument("conjunction_of: empty");
  Expr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conjunction(acc, parts[i]);
  return acc;
}

Expr Expr::disjunction_of(const std::vector<Expr>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjunction_of: empty");
  Expr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disjunction(acc, parts[i]);
  return acc;
}

bool Expr::equals(const Expr& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Kind::Atom:
      return x->atom == y->atom && x->a == y->a && x->b == y->b;
    case Kind::Not:
      return Expr(x->lhs).equals(Expr(y->lhs));
    default:
      return Expr(x->lhs).equals(Expr(y->lhs)) && Expr(x->rhs).equals(Expr(y->rhs));
  }
}

static void collect_vars(const Expr& e, std::set<int>& out) {
  if (e.is_atom()) {
    out.insert(e.var_a());
    out.insert(e.var_b());
    return;
  }
  collect_vars(e.left(), out);
  if (e.kind() != Expr::Kind::Not) collect_vars(e.right(), out);
}

std::vector<int> Expr::variables() const {
  std::set<int> vars;
  collect_vars(*this, vars);
  return {vars.begin(), vars.end()};
}

Expr Expr::rename(const std::vector<int>& map) const {
  switch (kind()) {
    case Kind::Atom:
      return atom_kind() == AtomKind::Adjacent ? adjacent(map.at(var_a()), map.at(var_b()))
                                               : equal(map.at(var_a()), map.at(var_b()));
    case Kind::Not:
      return negation(left().rename(map));
    case Kind::And:
      return conjunction(left().rename(map), right().rename(map));
    case Kind::Or:
      return disjunction(left().rename(map), right().rename(map));
    case Kind::Implies:
      return implication(left().rename(map), right().rename(map));
    case Kind::Iff:
      return equivalence(left().rename(map), right().rename(map));
  }
  throw std::logic_error("rename: unreachable");
}

Formula::Formula(std::vector<std::string> names, std::vector<PrefixEntry> prefix,
                 std::vector<int> free_vars, Expr matrix)
    : names_(std::move(names)), prefix_(std::move(prefix)), free_(std::move(free_vars)),
      matrix_(std::move(matrix)) {
  const int n = static_cast<int>(names_.size());
  std::vector<char> seen(n, 0);
  auto claim = [&](int v, const char* what) {
    if (v < 0 || v >= n) throw std::invalid_argument(std::string(what) + ": variable id out of range");
    if (seen[v]) throw std::invalid_argument(std::string(what) + ": variable '" + names_[v] + "' declared twice");
    seen[v] = 1;
  };
  for (int v : free_) claim(v, "formula free variables");
  for (const auto& e : prefix_) claim(e.variable, "formula prefix");
  std::unordered_set<std::string> name_set;
  for (const auto& nm : names_) {
    if (!name_set.insert(nm).second)
      throw std::invalid_argument("formula: duplicate variable name '" + nm + "'");
  }
  for (int v : matrix_.variables()) {
    if (v < 0 || v >= n || !seen[v])
      throw std::invalid_argument("formula: matrix uses an undeclared variable");
  }
}

Formula Formula::with_matrix(Expr m) const { return Formula(names_, prefix_, free_, std::move(m)); }

// Renumbers variables so ids follow declaration order: free variables first,
// then the prefix. Names travel with their variables.
static Formula canonicalize(const Formula& f) {
  std::vector<int> map(f.names().size(), -1);
  std::vector<std::string> names;
  int next = 0;
  for (int v : f.free_vars()) {
    map[v] = next++;
    names.push_back(f.name_of(v));
  }
  for (const auto& e : f.prefix()) {
    map[e.variable] = next++;
    names.push_back(f.name_of(e.variable));
  }
  // Variables unused by prefix/free cannot exist (constructor invariant).
  std::vector<int> free_ids(f.free_vars().size());
  for (std::size_t i = 0; i < free_ids.size(); ++i) free_ids[i] = static_cast<int>(i);
  std::vector<PrefixEntry> prefix;
  prefix.reserve(f.prefix().size());
  for (const auto& e : f.prefix()) prefix.push_back({e.quantifier, map[e.variable]});
  return Formula(std::move(names), std::move(prefix), std::move(free_ids), f.matrix().rename(map));
}

bool Formula::equals(const Formula& other) const {
  Formula a = canonicalize(*this);
  Formula b = canonicalize(other);
  return a.names() == b.names() && a.prefix() == b.prefix() && a.free_vars() == b.free_vars() &&
         a.matrix().equals(b.matrix());
}

PrefixClass classify(const Formula& f) {
  const auto& prefix = f.prefix();
  if (prefix.empty()) return PrefixClass{0, Side::Sigma, true};
  int alternations = 0;
  for (std::size_t i = 1; i < prefix.size(); ++i)
    if (prefix[i].quantifier != prefix[i - 1].quantifier) ++alternations;
  Side side = prefix.front().quantifier == Quantifier::Exists ? Side::Sigma : Side::Pi;
  return PrefixClass{1 + alternations, side, true};
}

bool in_prefix_class(const PrefixClass& minimal, int level, Side side) {
  if (level > minimal.level) return true;
  if (level < minimal.level) return false;
  return minimal.level == 0 || side == minimal.side;
}

std::string to_string(const PrefixClass& c) {
  if (c.level == 0) return "Sigma 0 (= Pi 0)";
  return (c.side == Side::Sigma ? "Sigma " : "Pi ") + std::to_string(c.level);
}

Formula open_formula(const Formula& f, int count) {
  if (count < 0 || count > static_cast<int>(f.prefix().size()))
    throw std::invalid_argument("open_formula: count exceeds prefix length");
  std::vector<int> free_vars = f.free_vars();
  for (int i = 0; i < count; ++i) free_vars.push_back(f.prefix()[i].variable);
  std::vector<PrefixEntry> prefix(f.prefix().begin() + count, f.prefix().end());
  return Formula(f.names(), std::move(prefix), std::move(free_vars), f.matrix());
}

static Expr complement_expr(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Atom:
      if (e.atom_kind() == AtomKind::Adjacent)
        return Expr::conjunction(Expr::negation(Expr::equal(e.var_a(), e.var_b())),
                                 Expr::negation(Expr::adjacent(e.var_a(), e.var_b())));
      return e;
    case Expr::Kind::Not:
      return Expr::negation(complement_expr(e.left()));
    case Expr::Kind::And:
      return Expr::conjunction(complement_expr(e.left()), complement_expr(e.right()));
    case Expr::Kind::Or:
      return Expr::disjunction(complement_expr(e.left()), complement_expr(e.right()));
    case Expr::Kind::Implies:
      return Expr::implication(complement_expr(e.left()), complement_expr(e.right()));
    case Expr::Kind::Iff:
      return Expr::equivalence(complement_expr(e.left()), complement_expr(e.right()));
  }
  throw std::logic_error("complement_expr: unreachable");
}

Formula complement_formula(const Formula& f) { return f.with_matrix(complement_expr(f.matrix())); }

}  // namespace folmod
