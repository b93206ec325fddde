#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace folmod {

enum class Quantifier : std::uint8_t { ForAll, Exists };
enum class AtomKind : std::uint8_t { Adjacent, Equal };

// Immutable boolean expression tree over adjacency/equality atoms.
// Copies share structure; nothing is mutated after construction.
class Expr {
 public:
  enum class Kind : std::uint8_t { Atom, Not, And, Or, Implies, Iff };

  static Expr adjacent(int a, int b);
  static Expr equal(int a, int b);
  static Expr negation(Expr inner);
  static Expr conjunction(Expr lhs, Expr rhs);
  static Expr disjunction(Expr lhs, Expr rhs);
  static Expr implication(Expr lhs, Expr rhs);
  static Expr equivalence(Expr lhs, Expr rhs);

  // Left-associative chains; `parts` must be nonempty.
  static Expr conjunction_of(const std::vector<Expr>& parts);
  static Expr disjunction_of(const std::vector<Expr>& parts);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == Kind::Atom; }
  AtomKind atom_kind() const { return node_->atom; }
  int var_a() const { return node_->a; }
  int var_b() const { return node_->b; }
  Expr left() const { return Expr(node_->lhs); }   // Not stores its child here
  Expr right() const { return Expr(node_->rhs); }

  // Structural equality (same tree, same variable ids).
  bool equals(const Expr& other) const;

  // Variable ids occurring in the tree, ascending, deduplicated.
  std::vector<int> variables() const;

  // Rewrites every variable id through `map` (map[old] = new).
  Expr rename(const std::vector<int>& map) const;

 private:
  struct Node {
    Kind kind;
    AtomKind atom = AtomKind::Adjacent;
    int a = -1, b = -1;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct PrefixEntry {
  Quantifier quantifier;
  int variable;
  bool operator==(const PrefixEntry&) const = default;
};

// Prenex-form formula: quantifier prefix, ordered free variables, matrix.
// Prefix variables are unique and disjoint from the free variables; every
// variable in the matrix is quantified or free.
class Formula {
 public:
  Formula(std::vector<std::string> names, std::vector<PrefixEntry> prefix,
          std::vector<int> free_vars, Expr matrix);

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name_of(int var) const { return names_.at(var); }
  const std::vector<PrefixEntry>& prefix() const { return prefix_; }
  const std::vector<int>& free_vars() const { return free_; }
  const Expr& matrix() const { return matrix_; }

  bool is_sentence() const { return free_.empty(); }
  int variable_count() const { return static_cast<int>(names_.size()); }

  // Same prefix/free structure, names and matrix, up to variable renumbering.
  bool equals(const Formula& other) const;

  // Replaces the matrix, keeping prefix and free variables.
  Formula with_matrix(Expr m) const;

 private:
  std::vector<std::string> names_;
  std::vector<PrefixEntry> prefix_;
  std::vector<int> free_;
  Expr matrix_;
};

enum class Side : std::uint8_t { Sigma, Pi };

// Minimal prefix class of a formula. Level 0 is the quantifier-free class,
// where Sigma and Pi coincide.
struct PrefixClass {
  int level = 0;
  Side side = Side::Sigma;
  bool minimal = true;
  bool operator==(const PrefixClass&) const = default;
};

PrefixClass classify(const Formula& f);

// Membership test honouring subsumption: anything of minimal level s lies in
// both Sigma_s' and Pi_s' for every s' > s.
bool in_prefix_class(const PrefixClass& minimal, int level, Side side);

std::string to_string(const PrefixClass& c);

// Removes the first `count` quantifications; the opened variables are
// appended to the free list in prefix order.
Formula open_formula(const Formula& f, int count);

// Replaces each adjacency atom a~b by !(a=b) & !(a~b); the prefix is kept.
// On complement graphs this evaluates exactly as the original does on the
// input graph.
Formula complement_formula(const Formula& f);

// Conjunctive normal form by implication/equivalence elimination, negation
// pushing and distribution. No fresh atoms are introduced, so the result is
// truth-table equivalent to the input. Exponential in the worst case;
// formulas here are constant-size.
Expr to_cnf(const Expr& matrix);

struct ParseError : std::runtime_error {
  ParseError(std::string message, int line, int column);
  int line;
  int column;
};

// Grammar: `A x.` / `E x.` quantifiers, atoms `x ~ y` and `x = y`,
// connectives `! & | -> <->`, parentheses, `#` comments. Variables that are
// neither quantified nor listed in `free_names` are rejected.
Formula parse(const std::string& text, const std::vector<std::string>& free_names = {});

// Canonical text form; parse(pretty_print(f), free names of f) reproduces f.
std::string pretty_print(const Formula& f);
std::string pretty_print(const Expr& matrix, const std::vector<std::string>& names);

// Output of the edge-removal to vertex-removal formula pipeline.
// `result` is the final target formula for the subdivision gadget;
// `degree_guarded` restricts the original variables to branching vertices
// (degree >= 3); `incidence_encoded` merely rewrites adjacencies through
// subdivision midpoints. Both intermediates are exposed because the
// reduction tests check their semantics separately.
struct VertexFormula {
  Formula result;
  Formula degree_guarded;
  Formula incidence_encoded;
};

// Requires a sentence whose prefix contains a universal quantifier. The
// result lands exactly one level above the input with the same side.
VertexFormula build_vertex_formula(const Formula& f);

}  // namespace folmod
