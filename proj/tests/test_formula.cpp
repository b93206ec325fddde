#include <doctest.h>

#include "folmod/formula.hpp"
#include "folmod/library.hpp"
#include "folmod/modelcheck.hpp"
#include "test_support.hpp"

using namespace folmod;

TEST_CASE("parse the edgeless-target formula") {
  Formula f = parse("A u. A v. !(u ~ v)");
  REQUIRE(f.prefix().size() == 2);
  CHECK(f.prefix()[0].quantifier == Quantifier::ForAll);
  CHECK(f.prefix()[1].quantifier == Quantifier::ForAll);
  CHECK(f.is_sentence());
  CHECK(f.matrix().kind() == Expr::Kind::Not);
  const Expr atom = f.matrix().left();
  CHECK(atom.is_atom());
  CHECK(atom.atom_kind() == AtomKind::Adjacent);
}

TEST_CASE("parse the diameter formula") {
  Formula f = parse("A u. A v. E w. (u = v) | (u ~ v) | ((u ~ w) & (v ~ w))");
  REQUIRE(f.prefix().size() == 3);
  CHECK(f.prefix()[0].quantifier == Quantifier::ForAll);
  CHECK(f.prefix()[2].quantifier == Quantifier::Exists);
  CHECK(f.name_of(f.prefix()[2].variable) == "w");
}

TEST_CASE("re-quantified variable is rejected") {
  CHECK_THROWS_AS(parse("A u. A u. (u ~ u)"), ParseError);
}

TEST_CASE("unquantified variable is rejected unless declared free") {
  CHECK_THROWS_AS(parse("A u. u ~ v"), ParseError);
  Formula f = parse("A u. u ~ v", {"v"});
  REQUIRE(f.free_vars().size() == 1);
  CHECK(f.name_of(f.free_vars()[0]) == "v");
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse("A u.\n  (u ~\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line >= 2);
  }
}

TEST_CASE("comments and whitespace are ignored") {
  Formula f = parse("# target property\nA u. A v. # both\n  !(u ~ v)");
  CHECK(f.equals(formulas::vertex_cover()));
}

TEST_CASE("round-trip through pretty_print") {
  auto check_roundtrip = [](const Formula& f) {
    std::vector<std::string> free_names;
    for (int v : f.free_vars()) free_names.push_back(f.name_of(v));
    Formula again = parse(pretty_print(f), free_names);
    CAPTURE(pretty_print(f));
    CHECK(again.equals(f));
  };
  for (const auto& c : support::corpus()) check_roundtrip(c.formula);
  check_roundtrip(formulas::witness_rooted_everywhere());
  check_roundtrip(open_formula(formulas::diameter_at_most_two(), 2));
  check_roundtrip(parse("A a. E b. ((a ~ b) <-> !(a = b)) -> (a ~ b) | !(a ~ b) & (a = b)"));
  check_roundtrip(
      build_vertex_formula(formulas::no_isolated_vertex()).result);
}

TEST_CASE("round-trip on random formulas") {
  std::mt19937 rng(20240817);
  std::vector<std::string> names = {"a", "b", "c"};
  std::function<Expr(int)> gen = [&](int depth) -> Expr {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    std::uniform_int_distribution<int> var(0, 2);
    switch (pick(rng)) {
      case 0: return Expr::adjacent(var(rng), var(rng));
      case 1: return Expr::equal(var(rng), var(rng));
      case 2: return Expr::negation(gen(depth - 1));
      case 3: return Expr::conjunction(gen(depth - 1), gen(depth - 1));
      case 4: return Expr::disjunction(gen(depth - 1), gen(depth - 1));
      case 5: return Expr::implication(gen(depth - 1), gen(depth - 1));
      default: return Expr::equivalence(gen(depth - 1), gen(depth - 1));
    }
  };
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<PrefixEntry> prefix;
    for (int i = 0; i < 3; ++i)
      prefix.push_back({coin(rng) ? Quantifier::ForAll : Quantifier::Exists, i});
    Formula f(names, prefix, {}, gen(4));
    Formula again = parse(pretty_print(f));
    CAPTURE(pretty_print(f));
    REQUIRE(again.equals(f));
  }
}

TEST_CASE("classification by quantifier alternations") {
  CHECK(classify(formulas::vertex_cover()) == PrefixClass{1, Side::Pi, true});
  CHECK(classify(formulas::diameter_at_most_two()) == PrefixClass{2, Side::Pi, true});
  CHECK(classify(formulas::clique_neighborhood()) == PrefixClass{2, Side::Sigma, true});
  CHECK(classify(formulas::no_isolated_vertex()) == PrefixClass{2, Side::Pi, true});
  CHECK(classify(formulas::witness_rooted_everywhere()) == PrefixClass{2, Side::Pi, true});
  Formula opened = open_formula(formulas::vertex_cover(), 2);
  CHECK(classify(opened) == PrefixClass{0, Side::Sigma, true});
  CHECK(to_string(classify(opened)) == "Sigma 0 (= Pi 0)");
}

TEST_CASE("classification only looks at the prefix") {
  Formula f = parse("E x. A y. A z. (x ~ y) & (y ~ z)");
  Formula mutated = f.with_matrix(Expr::negation(f.matrix()));
  CHECK(classify(f) == classify(mutated));
  CHECK(classify(f) == PrefixClass{2, Side::Sigma, true});
}

TEST_CASE("subsumption: higher levels contain both sides") {
  PrefixClass pi1 = classify(formulas::vertex_cover());
  CHECK(in_prefix_class(pi1, 1, Side::Pi));
  CHECK_FALSE(in_prefix_class(pi1, 1, Side::Sigma));
  CHECK(in_prefix_class(pi1, 2, Side::Sigma));
  CHECK(in_prefix_class(pi1, 2, Side::Pi));
  CHECK_FALSE(in_prefix_class(pi1, 0, Side::Sigma));
  PrefixClass level0 = classify(open_formula(formulas::vertex_cover(), 2));
  CHECK(in_prefix_class(level0, 0, Side::Pi));
  CHECK(in_prefix_class(level0, 0, Side::Sigma));
}

TEST_CASE("open_formula moves quantified variables to the free list") {
  Formula f = parse("E x. A y. x ~ y");
  Formula opened = open_formula(f, 1);
  REQUIRE(opened.free_vars().size() == 1);
  CHECK(opened.name_of(opened.free_vars()[0]) == "x");
  REQUIRE(opened.prefix().size() == 1);
  CHECK(opened.prefix()[0].quantifier == Quantifier::ForAll);

  CHECK(open_formula(f, 0).equals(f));

  Formula vc = formulas::vertex_cover();
  Formula full = open_formula(vc, 2);
  CHECK(full.prefix().empty());
  REQUIRE(full.free_vars().size() == 2);

  CHECK_THROWS_AS(open_formula(f, 3), std::invalid_argument);
}

TEST_CASE("complement_formula rewrites adjacency atoms") {
  Formula vc = formulas::vertex_cover();
  Formula co = complement_formula(vc);
  CHECK(co.equals(parse("A u. A v. !(!(u = v) & !(u ~ v))")));
  Formula equality_only = parse("A x. A y. x = y");
  CHECK(complement_formula(equality_only).equals(equality_only));
}

TEST_CASE("complementing twice is a semantic involution") {
  // Exhaustive over every graph with up to 4 vertices.
  for (const auto& c : support::corpus()) {
    Formula twice = complement_formula(complement_formula(c.formula));
    for (int n = 0; n <= 4; ++n)
      support::for_all_graphs(n, [&](const Graph& g) {
        CAPTURE(c.name);
        CAPTURE(n);
        REQUIRE(models(g, twice) == models(g, c.formula));
      });
  }
}

TEST_CASE("to_cnf on implications") {
  Expr a = Expr::adjacent(0, 1);
  Expr b = Expr::equal(0, 1);
  Expr cnf = to_cnf(Expr::implication(a, b));
  CHECK(cnf.kind() == Expr::Kind::Or);
  CHECK(cnf.left().kind() == Expr::Kind::Not);
  CHECK(support::truth_table_equivalent(cnf, Expr::implication(a, b)));
}

TEST_CASE("to_cnf is equivalent and idempotent up to equivalence") {
  Formula diam = formulas::diameter_at_most_two();
  Expr cnf = to_cnf(diam.matrix());
  CHECK(support::truth_table_equivalent(cnf, diam.matrix()));
  CHECK(support::truth_table_equivalent(to_cnf(cnf), cnf));

  std::mt19937 rng(7);
  std::function<Expr(int)> gen = [&](int depth) -> Expr {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    std::uniform_int_distribution<int> var(0, 3);
    switch (pick(rng)) {
      case 0: return Expr::adjacent(var(rng), var(rng));
      case 1: return Expr::equal(var(rng), var(rng));
      case 2: return Expr::negation(gen(depth - 1));
      case 3: return Expr::conjunction(gen(depth - 1), gen(depth - 1));
      case 4: return Expr::disjunction(gen(depth - 1), gen(depth - 1));
      case 5: return Expr::implication(gen(depth - 1), gen(depth - 1));
      default: return Expr::equivalence(gen(depth - 1), gen(depth - 1));
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    Expr e = gen(3);
    Expr cnf_e = to_cnf(e);
    REQUIRE(support::truth_table_equivalent(e, cnf_e));
  }
}

static bool is_cnf_shape(const Expr& e) {
  auto is_literal = [](const Expr& x) {
    return x.is_atom() || (x.kind() == Expr::Kind::Not && x.left().is_atom());
  };
  std::function<bool(const Expr&)> is_clause = [&](const Expr& x) -> bool {
    if (is_literal(x)) return true;
    return x.kind() == Expr::Kind::Or && is_clause(x.left()) && is_clause(x.right());
  };
  std::function<bool(const Expr&)> walk = [&](const Expr& x) -> bool {
    if (x.kind() == Expr::Kind::And) return walk(x.left()) && walk(x.right());
    return is_clause(x);
  };
  return walk(e);
}

TEST_CASE("to_cnf output is a conjunction of clauses") {
  for (const auto& c : support::corpus()) CHECK(is_cnf_shape(to_cnf(c.formula.matrix())));
  CHECK(is_cnf_shape(to_cnf(formulas::witness_rooted_everywhere().matrix())));
}

TEST_CASE("vertex formula lands one level up, same side") {
  // The output is a member of the class one level above the input; the
  // minimal written class may stay lower when the fresh blocks merge into
  // existing quantifier runs (subsumption covers those).
  for (const auto& c : support::corpus()) {
    PrefixClass before = classify(c.formula);
    VertexFormula vf = build_vertex_formula(c.formula);
    PrefixClass after = classify(vf.result);
    CAPTURE(c.name);
    CHECK(in_prefix_class(after, before.level + 1, before.side));
    CHECK(after.level <= before.level + 1);
    CHECK(after.side == before.side);
  }
  // Exact-level cases: the edgeless target gains its alternation from the
  // trailing guard, the clique-neighborhood one from the midpoint block.
  CHECK(classify(build_vertex_formula(formulas::vertex_cover()).result) ==
        PrefixClass{2, Side::Pi, true});
  CHECK(classify(build_vertex_formula(formulas::clique_neighborhood()).result) ==
        PrefixClass{3, Side::Sigma, true});
  Formula witness = formulas::witness_rooted_everywhere();
  CHECK(classify(build_vertex_formula(witness).result) == PrefixClass{3, Side::Pi, true});
}

TEST_CASE("vertex formula prefix length arithmetic") {
  // Prefix grows by one block per rewritten adjacency occurrence, three
  // degree guards per original variable, and the two guard variables.
  for (const auto& c : support::corpus()) {
    const Formula& f = c.formula;
    Expr cnf = to_cnf(f.matrix());
    int positive = 0, negated = 0;
    std::function<void(const Expr&, bool)> count = [&](const Expr& e, bool neg) {
      if (e.is_atom()) {
        if (e.atom_kind() == AtomKind::Adjacent) (neg ? negated : positive)++;
        return;
      }
      if (e.kind() == Expr::Kind::Not) return count(e.left(), !neg);
      count(e.left(), neg);
      count(e.right(), neg);
    };
    count(cnf, false);
    int p = static_cast<int>(f.prefix().size());
    VertexFormula vf = build_vertex_formula(f);
    CAPTURE(c.name);
    CHECK(static_cast<int>(vf.result.prefix().size()) == p + positive + negated + 3 * p + 2);
  }
}

TEST_CASE("vertex formula pipeline rejects bad inputs") {
  CHECK_THROWS_AS(build_vertex_formula(parse("E x. E y. x ~ y")), std::invalid_argument);
  CHECK_THROWS_AS(build_vertex_formula(parse("A u. u ~ v", {"v"})), std::invalid_argument);
}

TEST_CASE("midpoint block order follows the last original quantifier") {
  // Ends with exists: existential midpoints come first.
  VertexFormula no_iso = build_vertex_formula(formulas::no_isolated_vertex());
  const auto& p1 = no_iso.incidence_encoded.prefix();
  REQUIRE(p1.size() == 3);  // A u. E v. plus one midpoint
  CHECK(p1[2].quantifier == Quantifier::Exists);

  // Ends with forall and the only occurrence is negated: universal midpoint.
  VertexFormula vc = build_vertex_formula(formulas::vertex_cover());
  const auto& p2 = vc.incidence_encoded.prefix();
  REQUIRE(p2.size() == 3);
  CHECK(p2[2].quantifier == Quantifier::ForAll);
}
