#include <doctest.h>

#include <algorithm>
#include <vector>

#include "graded_topos/errors.hpp"
#include "graded_topos/generators.hpp"
#include "graded_topos/io.hpp"
#include "graded_topos/logic.hpp"

using namespace graded_topos;

namespace {

Grade g(const char* s) { return Grade::parse(s); }

Interpretation fixture_interp() {
  return load_interpretation(read_file(std::string(GT_FIXTURE_DIR) + "/interpretation.json"));
}

Formula parse(const char* text, const Interpretation& i) { return parse_formula(text, i.signature()); }

Term x(unsigned i) { return Term::variable(i); }
Term c(unsigned i) { return Term::constant(i); }

}  // namespace

TEST_CASE("parser examples") {
  const Interpretation i = fixture_interp();
  CHECK(parse("T", i) == Formula::top());
  CHECK(parse("F", i) == Formula::bottom());
  CHECK(parse("(p(x1) & q(x2, x2))", i) ==
        Formula::conjunction(Formula::predicate("p", {x(1)}),
                             Formula::predicate("q", {x(2), x(2)})));
  CHECK(parse("E x1. (x1 = c1)", i) == Formula::exists(1, Formula::equality(x(1), c(1))));
  CHECK(parse("(p(x1) | F)", i) ==
        Formula::disjunction({Formula::predicate("p", {x(1)}), Formula::bottom()}));
  CHECK(parse("V[T]", i) == Formula::disjunction({Formula::top()}));
  CHECK(parse("(f(f(x3)) = c2)", i) ==
        Formula::equality(Term::apply("f", {Term::apply("f", {x(3)})}), c(2)));
  CHECK(parse_term("f(c1)", i.signature()) == Term::apply("f", {c(1)}));
}

TEST_CASE("printing round-trips through the parser") {
  const Interpretation i = fixture_interp();
  for (const char* text : {"T", "F", "p(x1)", "(x1 = f(c2))", "(p(x1) & q(x1, x2))",
                           "(p(x1) | q(x2, x1))", "V[p(x1), T, F]", "E x2. E x1. q(x1, x2)"}) {
    const Formula phi = parse(text, i);
    CHECK(phi.str() == text);
    CHECK(parse_formula(phi.str(), i.signature()) == phi);
  }
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const Formula phi = generate_random_formula(rng, i.signature(), 3);
    CHECK(parse_formula(phi.str(), i.signature()) == phi);
  }
}

TEST_CASE("parser errors") {
  const Interpretation i = fixture_interp();
  CHECK_THROWS_AS(parse("(p(x1) & ", i), SyntaxError);
  CHECK_THROWS_AS(parse("p(x1) extra", i), SyntaxError);
  CHECK_THROWS_AS(parse("V[]", i), SyntaxError);
  CHECK_THROWS_AS(parse("E y. T", i), SyntaxError);
  CHECK_THROWS_AS(parse("p(x1, x2)", i), ArityMismatch);
  CHECK_THROWS_AS(parse("(f(x1, x2) = x1)", i), ArityMismatch);
  CHECK_THROWS_AS(parse("r(x1)", i), UndeclaredSymbol);
  CHECK_THROWS_AS(parse("(x1 = c9)", i), UndeclaredSymbol);
  try {
    parse("(p(x1) ? T)", i);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("interpretations validate their tables and names") {
  const Universe d({"a", "b"});
  CHECK_THROWS_AS(Interpretation(d, {{1, 2}}, {}, {}), SchemaError);
  CHECK_THROWS_AS(Interpretation(d, {}, {{"f", FunctionTable{1, {0}}}}, {}), SchemaError);
  CHECK_THROWS_AS(Interpretation(d, {}, {{"f", FunctionTable{1, {0, 5}}}}, {}), SchemaError);
  CHECK_THROWS_AS(Interpretation(d, {}, {}, {{"p", PredicateTable{0, {g("1")}}}}), SchemaError);
  CHECK_THROWS_AS(Interpretation(d, {}, {}, {{"x1", PredicateTable{1, {g("1"), g("0")}}}}),
                  SchemaError);
  CHECK_THROWS_AS(Interpretation(d, {}, {}, {{"E", PredicateTable{1, {g("1"), g("0")}}}}),
                  SchemaError);
  CHECK_THROWS_AS(Interpretation(d, {}, {{"p", FunctionTable{1, {0, 1}}}},
                                 {{"p", PredicateTable{1, {g("1"), g("0")}}}}),
                  SchemaError);
}

TEST_CASE("term evaluation") {
  const Interpretation i = fixture_interp();
  const Assignment s = parse_assignment("x1=d1,x2=d2", i.domain());
  CHECK(eval_term(i, s, c(1)) == 0);
  CHECK(eval_term(i, s, x(2)) == 1);
  // f swaps d1 and d2
  CHECK(eval_term(i, s, Term::apply("f", {Term::apply("f", {x(1)})})) == 0);
  CHECK(eval_term(i, s, Term::apply("f", {c(1)})) == 1);
  CHECK_THROWS_AS(eval_term(i, s, x(3)), UnboundVariable);
  CHECK_THROWS_AS(eval_term(i, s, c(5)), UndeclaredSymbol);
  CHECK_THROWS_AS(parse_assignment("x1=d9", i.domain()), SchemaError);
  CHECK_THROWS_AS(parse_assignment("y1=d1", i.domain()), SchemaError);
  CHECK(parse_assignment("", i.domain()).empty());
}

TEST_CASE("satisfaction grades") {
  const Interpretation i = fixture_interp();
  const Assignment s = parse_assignment("x1=d1,x2=d2", i.domain());
  CHECK(sat_grade(i, s, Formula::top()) == Grade::one());
  CHECK(sat_grade(i, s, Formula::bottom()) == Grade::zero());
  CHECK(sat_grade(i, s, Formula::equality(x(1), x(1))) == Grade::one());
  CHECK(sat_grade(i, s, parse("p(x1)", i)) == g("3/10"));
  CHECK(sat_grade(i, s, parse("q(x2, x1)", i)) == g("0"));
  CHECK(sat_grade(i, s, parse("E x1. q(x1, x2)", i)) == g("1/2"));
  CHECK_THROWS_AS(sat_grade(i, {}, parse("p(x1)", i)), UnboundVariable);
  CHECK(sat_grade(i, {}, parse("E x1. p(x1)", i)) == g("7/10"));
}

TEST_CASE("satisfaction properties over random interpretations") {
  GeneratorConfig cfg;
  cfg.max_points = 3;
  Rng rng(77);
  for (int k = 0; k < 60; ++k) {
    const Interpretation i = generate_random_interpretation(rng, cfg);
    const auto pool = generate_random_pool(rng, i.signature(), 4, 3);
    const std::size_t n = i.domain().size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Assignment s{{1, a}, {2, b}};
        std::vector<Grade> grades;
        for (const Formula& phi : pool) {
          grades.push_back(sat_grade(i, s, phi));
          // unrelated variables do not matter
          Assignment wider = s;
          wider[7] = (a + 1) % n;
          CHECK(sat_grade(i, wider, phi) == grades.back());
        }
        CHECK(sat_grade(i, s, Formula::disjunction(pool)) == sup(grades));
        std::vector<Formula> reversed(pool.rbegin(), pool.rend());
        CHECK(sat_grade(i, s, Formula::disjunction(reversed)) == sup(grades));
        const Grade eq = sat_grade(i, s, Formula::equality(x(1), x(2)));
        CHECK((eq == Grade::zero() || eq == Grade::one()));
        CHECK((eq == Grade::one()) == (a == b));
        CHECK(sat_grade(i, s, Formula::conjunction(pool[0], pool[1])) ==
              meet(grades[0], grades[1]));
      }
    }
  }
}

TEST_CASE("free variables") {
  const Interpretation i = fixture_interp();
  CHECK(free_variables(Formula::top()).empty());
  CHECK(free_variables(Formula::predicate("q", {x(1), x(3)})) == std::set<unsigned>{1, 3});
  CHECK(free_variables(parse("E x1. q(x1, x2)", i)) == std::set<unsigned>{2});
  CHECK(free_variables(parse("(p(x1) & E x1. p(x1))", i)) == std::set<unsigned>{1});
  CHECK(variables(Term::apply("f", {x(4)})) == std::set<unsigned>{4});
}

TEST_CASE("substitution") {
  const Interpretation i = fixture_interp();
  CHECK(substitute(parse("p(x1)", i), {{1, c(1)}}) == parse("p(c1)", i));
  const Formula bound = parse("E x1. p(x1)", i);
  CHECK(substitute(bound, {{1, c(1)}}) == bound);
  try {
    substitute(parse("E x2. q(x1, x2)", i), {{1, x(2)}});
    FAIL("expected capture");
  } catch (const CaptureViolation& e) {
    CHECK(e.variable() == 2);
  }
  // simultaneous, not sequential
  CHECK(substitute(parse("q(x1, x2)", i), {{1, x(2)}, {2, x(1)}}) == parse("q(x2, x1)", i));
  CHECK(substitute(Term::apply("f", {x(1)}), {{1, c(2)}}) == Term::apply("f", {c(2)}));
  // a term that mentions the bound variable is fine if it never reaches the body
  CHECK(substitute(parse("E x2. p(x2)", i), {{1, x(2)}}) == parse("E x2. p(x2)", i));
}

TEST_CASE("tuple equality") {
  const std::vector<unsigned> none;
  CHECK(tuple_equality(none, none) == Formula::top());
  const std::vector<unsigned> l{1}, r{2};
  CHECK(tuple_equality(l, r) == Formula::equality(x(1), x(2)));
  const std::vector<unsigned> l2{1, 3}, r2{2, 4};
  CHECK(tuple_equality(l2, r2) ==
        Formula::conjunction(Formula::equality(x(1), x(2)), Formula::equality(x(3), x(4))));
  CHECK_THROWS_AS(tuple_equality(l2, r), SchemaError);
  CHECK_THROWS_AS(Formula::disjunction({}), SchemaError);
}
