#include "folmod/modelcheck.hpp"

#include <algorithm>

namespace folmod {

namespace {

constexpr std::int8_t kUnknown = -1;

struct SigHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Flattened formula with incremental three-valued node states. Binding a
// vertex to a slot settles the atoms whose variables are now all bound and
// propagates changes upward; a trail undoes them on backtrack.
class Evaluator {
 public:
  Evaluator(const Graph& g, const Formula& f, const DomainRestriction* restriction)
      : graph_(g), formula_(f) {
    const int var_count = f.variable_count();
    slot_of_var_.assign(var_count, -1);
    int next_slot = 0;
    for (int v : f.free_vars()) slot_of_var_[v] = next_slot++;
    free_slots_ = next_slot;
    for (const auto& e : f.prefix()) slot_of_var_[e.variable] = next_slot++;
    slot_value_.assign(next_slot, -1);
    atoms_of_slot_.assign(next_slot, {});

    root_ = compile(f.matrix(), -1);

    // Quantifier domains, restricted where requested.
    const int prefix_len = static_cast<int>(f.prefix().size());
    domains_.resize(prefix_len);
    for (int i = 0; i < prefix_len; ++i) domains_[i] = &graph_.vertices();
    if (restriction) {
      restricted_.reserve(restriction->domains.size());
      for (const auto& [var, verts] : restriction->domains) {
        int pos = -1;
        for (int i = 0; i < prefix_len; ++i)
          if (f.prefix()[i].variable == var) pos = i;
        if (pos < 0)
          throw std::invalid_argument("domain restriction: variable is not in the prefix");
        for (int v : verts)
          if (!graph_.has_vertex(v))
            throw std::invalid_argument("domain restriction: vertex not in graph");
        auto sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        restricted_.push_back(std::move(sorted));
        domains_[pos] = &restricted_.back();
      }
    }
    nonempty_from_.assign(prefix_len + 1, true);
    for (int i = prefix_len - 1; i >= 0; --i)
      nonempty_from_[i] = nonempty_from_[i + 1] && !domains_[i]->empty();
  }

  void bind_free(std::span<const int> assignment) {
    if (static_cast<int>(assignment.size()) != free_slots_)
      throw std::invalid_argument("assignment length does not match the free variables");
    bind_leading_free(assignment);
  }

  // Binds the first assignment.size() free slots, leaving the rest open.
  void bind_leading_free(std::span<const int> assignment) {
    if (static_cast<int>(assignment.size()) > free_slots_)
      throw std::invalid_argument("assignment longer than the free variable list");
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      if (!graph_.has_vertex(assignment[i]))
        throw std::invalid_argument("assignment vertex not in graph");
      bind(static_cast<int>(i), assignment[i]);
    }
  }

  bool run(EvalStats* stats) {
    EvalStats local;
    bool result = eval(0, stats ? *stats : local);
    return result;
  }

  // Lexicographically smallest assignment to the last `s` free slots under
  // which the remaining prefix evaluates false, the earlier free slots being
  // already bound.
  std::optional<Assignment> find_violator(int s, EvalStats* stats, std::uint64_t* examined) {
    EvalStats local;
    EvalStats& st = stats ? *stats : local;
    std::uint64_t local_examined = 0;
    std::uint64_t& ex = examined ? *examined : local_examined;
    if (s > 0 && graph_.vertices().empty()) return std::nullopt;
    Assignment current(s, -1);
    return search(0, s, current, st, ex);
  }

 private:
  struct CNode {
    Expr::Kind kind;
    int lhs = -1, rhs = -1, parent = -1;
    std::int8_t state = kUnknown;
  };
  struct CAtom {
    AtomKind kind;
    int slot_a, slot_b;
    int node;
  };

  int compile(const Expr& e, int parent) {
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({e.kind(), -1, -1, parent, kUnknown});
    if (e.is_atom()) {
      int sa = slot_of_var_[e.var_a()];
      int sb = slot_of_var_[e.var_b()];
      if (sa == sb) {
        // Same variable on both sides: equality folds to true, adjacency to
        // false on loopless graphs.
        nodes_[id].state = e.atom_kind() == AtomKind::Equal ? 1 : 0;
      } else {
        int atom_id = static_cast<int>(atoms_.size());
        atoms_.push_back({e.atom_kind(), sa, sb, id});
        atoms_of_slot_[sa].push_back(atom_id);
        atoms_of_slot_[sb].push_back(atom_id);
      }
      return id;
    }
    int l = compile(e.left(), id);
    nodes_[id].lhs = l;
    if (e.kind() != Expr::Kind::Not) {
      int r = compile(e.right(), id);
      nodes_[id].rhs = r;
    }
    refresh(id);  // folds constants introduced by self-atoms
    return id;
  }

  std::int8_t combine(const CNode& n) const {
    std::int8_t l = n.lhs >= 0 ? nodes_[n.lhs].state : kUnknown;
    std::int8_t r = n.rhs >= 0 ? nodes_[n.rhs].state : kUnknown;
    switch (n.kind) {
      case Expr::Kind::Atom:
        return n.state;
      case Expr::Kind::Not:
        return l == kUnknown ? kUnknown : static_cast<std::int8_t>(1 - l);
      case Expr::Kind::And:
        if (l == 0 || r == 0) return 0;
        if (l == 1 && r == 1) return 1;
        return kUnknown;
      case Expr::Kind::Or:
        if (l == 1 || r == 1) return 1;
        if (l == 0 && r == 0) return 0;
        return kUnknown;
      case Expr::Kind::Implies:
        if (l == 0 || r == 1) return 1;
        if (l == 1 && r == 0) return 0;
        return kUnknown;
      case Expr::Kind::Iff:
        if (l == kUnknown || r == kUnknown) return kUnknown;
        return static_cast<std::int8_t>(l == r);
    }
    return kUnknown;
  }

  void refresh(int id) {
    if (nodes_[id].kind == Expr::Kind::Atom) return;
    nodes_[id].state = combine(nodes_[id]);
  }

  void set_state(int id, std::int8_t value) {
    while (id >= 0 && nodes_[id].state != value) {
      trail_.emplace_back(id, nodes_[id].state);
      nodes_[id].state = value;
      int parent = nodes_[id].parent;
      if (parent < 0) break;
      value = combine(nodes_[parent]);
      if (value == nodes_[parent].state) break;
      id = parent;
    }
  }

  int bind(int slot, int vertex) {
    int mark = static_cast<int>(trail_.size());
    slot_value_[slot] = vertex;
    for (int atom_id : atoms_of_slot_[slot]) {
      const CAtom& a = atoms_[atom_id];
      int va = slot_value_[a.slot_a];
      int vb = slot_value_[a.slot_b];
      if (va < 0 || vb < 0) continue;
      bool truth = a.kind == AtomKind::Equal ? va == vb : graph_.has_edge(va, vb);
      set_state(a.node, truth ? 1 : 0);
    }
    return mark;
  }

  void undo(int mark, int slot) {
    while (static_cast<int>(trail_.size()) > mark) {
      auto [id, old] = trail_.back();
      trail_.pop_back();
      nodes_[id].state = old;
    }
    slot_value_[slot] = -1;
  }

  void write_signature(int id, std::vector<std::int32_t>& out) const {
    const CNode& n = nodes_[id];
    if (n.state != kUnknown) {
      out.push_back(n.state);
      return;
    }
    if (n.kind == Expr::Kind::Atom) {
      // Undetermined atom: record its kind plus, per side, either the bound
      // vertex or the unbound slot.
      const CAtom& a = atoms_[atom_of_node_(id)];
      out.push_back(a.kind == AtomKind::Equal ? 8 : 9);
      for (int slot : {a.slot_a, a.slot_b}) {
        int v = slot_value_[slot];
        if (v >= 0) {
          out.push_back(2);
          out.push_back(v);
        } else {
          out.push_back(3);
          out.push_back(slot);
        }
      }
      return;
    }
    out.push_back(4 + static_cast<std::int32_t>(n.kind));
    write_signature(n.lhs, out);
    if (n.rhs >= 0) write_signature(n.rhs, out);
  }

  int atom_of_node_(int node_id) const {
    // Atoms are few; linear scan kept simple by caching on first use.
    if (atom_index_.empty()) {
      atom_index_.assign(nodes_.size(), -1);
      for (std::size_t i = 0; i < atoms_.size(); ++i) atom_index_[atoms_[i].node] = static_cast<int>(i);
    }
    return atom_index_[node_id];
  }

  bool eval(int pos, EvalStats& stats) {
    const int prefix_len = static_cast<int>(domains_.size());
    if (pos == prefix_len) {
      ++stats.matrix_evals;
      return nodes_[root_].state == 1;
    }
    bool can_cut = nonempty_from_[pos];
    std::vector<std::int32_t> sig;
    if (can_cut) {
      std::int8_t s = nodes_[root_].state;
      if (s != kUnknown) {
        ++stats.cuts;
        return s == 1;
      }
      int slot = free_slots_ + pos;
      if (atoms_of_slot_[slot].empty()) return eval(pos + 1, stats);
      sig.reserve(32);
      sig.push_back(pos);
      write_signature(root_, sig);
      auto it = memo_.find(sig);
      if (it != memo_.end()) {
        ++stats.memo_hits;
        return it->second;
      }
    }
    const bool is_forall = formula_.prefix()[pos].quantifier == Quantifier::ForAll;
    bool value = is_forall;
    int slot = free_slots_ + pos;
    for (int v : *domains_[pos]) {
      int mark = bind(slot, v);
      bool r = eval(pos + 1, stats);
      undo(mark, slot);
      value = r;
      if (r != is_forall) break;
    }
    if (can_cut) memo_.emplace(std::move(sig), value);
    return value;
  }

  std::optional<Assignment> search(int depth, int s, Assignment& current, EvalStats& stats,
                                   std::uint64_t& examined) {
    bool can_cut = !graph_.vertices().empty() && nonempty_from_[0];
    if (can_cut && depth < s) {
      std::int8_t st = nodes_[root_].state;
      if (st == 1) {
        ++stats.cuts;
        ++examined;
        return std::nullopt;  // every completion satisfies the remainder
      }
      if (st == 0) {
        ++stats.cuts;
        ++examined;
        Assignment out = current;
        for (int j = depth; j < s; ++j) out[j] = graph_.vertices().front();
        return out;  // every completion fails; the least one wins
      }
    }
    if (depth == s) {
      ++examined;
      bool ok = eval(0, stats);
      if (!ok) return current;
      return std::nullopt;
    }
    int slot = free_slots_ - s + depth;
    for (int v : graph_.vertices()) {
      int mark = bind(slot, v);
      current[depth] = v;
      auto hit = search(depth + 1, s, current, stats, examined);
      undo(mark, slot);
      if (hit) return hit;
    }
    current[depth] = -1;
    return std::nullopt;
  }

  const Graph& graph_;
  const Formula& formula_;
  std::vector<int> slot_of_var_;
  int free_slots_ = 0;
  std::vector<int> slot_value_;
  std::vector<std::vector<int>> atoms_of_slot_;
  std::vector<CNode> nodes_;
  std::vector<CAtom> atoms_;
  mutable std::vector<int> atom_index_;
  int root_ = -1;
  std::vector<const std::vector<int>*> domains_;
  std::vector<std::vector<int>> restricted_;
  std::vector<bool> nonempty_from_;
  std::vector<std::pair<int, std::int8_t>> trail_;
  std::unordered_map<std::vector<std::int32_t>, bool, SigHash> memo_;
};

}  // namespace

bool models(const Graph& g, const Formula& f, std::span<const int> assignment,
            const DomainRestriction* restriction, EvalStats* stats) {
  Evaluator ev(g, f, restriction);
  ev.bind_free(assignment);
  return ev.run(stats);
}

std::optional<Assignment> find_violating_tuple(const Graph& g, const Formula& f_open,
                                               std::span<const int> opened, EvalStats* stats,
                                               std::uint64_t* tuples_examined) {
  if (static_cast<int>(opened.size()) != static_cast<int>(f_open.free_vars().size()))
    throw std::invalid_argument("find_violating_tuple: assignment length mismatch");
  int s = 0;
  const auto& prefix = f_open.prefix();
  while (s < static_cast<int>(prefix.size()) && prefix[s].quantifier == Quantifier::ForAll) ++s;
  if (s == 0 && !prefix.empty())
    throw std::invalid_argument(
        "find_violating_tuple: prefix does not start with a universal block");
  Formula searched = open_formula(f_open, s);
  Evaluator ev(g, searched, nullptr);
  ev.bind_leading_free(opened);
  return ev.find_violator(s, stats, tuples_examined);
}

}  // namespace folmod
