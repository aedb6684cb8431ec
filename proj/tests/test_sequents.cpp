#include <doctest.h>

#include <vector>

#include "graded_topos/generators.hpp"
#include "graded_topos/io.hpp"
#include "graded_topos/logic.hpp"

using namespace graded_topos;

namespace {

Grade g(const char* s) { return Grade::parse(s); }

Interpretation fixture_interp() {
  return load_interpretation(read_file(std::string(GT_FIXTURE_DIR) + "/interpretation.json"));
}

// inf over every assignment of x1..x3, whether free or not.
Grade sequent_oracle(const Interpretation& i, const Formula& phi, const Formula& psi) {
  const std::size_t n = i.domain().size();
  Grade lo = Grade::one();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Assignment s{{1, a}, {2, b}, {3, c}};
        lo = meet(lo, godel_arrow(sat_grade(i, s, phi), sat_grade(i, s, psi)));
      }
    }
  }
  return lo;
}

}  // namespace

TEST_CASE("sequent examples") {
  const Interpretation i = fixture_interp();
  const auto& sig = i.signature();
  const Formula phi = parse_formula("q(x1, x2)", sig);
  const Formula psi = parse_formula("p(x2)", sig);
  CHECK(sequent_grade(i, phi, phi) == Grade::one());
  CHECK(sequent_grade(i, phi, Formula::top()) == Grade::one());
  CHECK(sequent_grade(i, Formula::conjunction(phi, psi), phi) == Grade::one());
  // q(d1,d1) = 1 against p(d1) = 3/10
  CHECK(sequent_grade(i, phi, psi) == g("3/10"));
  CHECK(sequent_grade(i, Formula::top(), Formula::bottom()) == Grade::zero());
  CHECK(sequent_grade(i, Formula::bottom(), Formula::bottom()) == Grade::one());
}

TEST_CASE("sequent grade matches enumeration over all assignments") {
  GeneratorConfig cfg;
  cfg.max_points = 3;
  Rng rng(19);
  for (int k = 0; k < 80; ++k) {
    const Interpretation i = generate_random_interpretation(rng, cfg);
    const auto pool = generate_random_pool(rng, i.signature(), 4, 3);
    for (const Formula& phi : pool) {
      for (const Formula& psi : pool) {
        const Grade grade = sequent_grade(i, phi, psi);
        CHECK(grade == sequent_oracle(i, phi, psi));
        // grade 1 exactly when phi is below psi at every assignment
        bool below = true;
        const std::size_t n = i.domain().size();
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            const Assignment s{{1, a}, {2, b}};
            below = below && sat_grade(i, s, phi) <= sat_grade(i, s, psi);
          }
        }
        CHECK((grade == Grade::one()) == below);
      }
    }
  }
}

TEST_CASE("structural laws hold on the fixture pool") {
  const Interpretation i = fixture_interp();
  const FormulaPool pool = load_pool(read_file(std::string(GT_FIXTURE_DIR) + "/pool.json"),
                                     i.signature());
  SequentSuiteOptions opts;
  opts.variables = pool.variables;
  opts.terms = pool.terms;
  const auto tallies = sequent_properties(i, pool.formulas, opts);
  REQUIRE(tallies.size() == 14);
  const std::vector<std::string> names = {
      "sequent-identity",       "sequent-cut",           "sequent-top",
      "sequent-conj-left",      "sequent-conj-right",    "sequent-conj-intro",
      "sequent-disj-intro",     "sequent-disj-elim",     "sequent-distributivity",
      "sequent-equality-refl",  "sequent-equality-subst", "sequent-exists-intro",
      "sequent-exists-elim",    "sequent-frobenius"};
  for (std::size_t k = 0; k < names.size(); ++k) {
    INFO(tallies[k].subject);
    CHECK(tallies[k].subject == names[k]);
    CHECK(tallies[k].ok());
    CHECK(tallies[k].checked > 0);
  }
}

TEST_CASE("cut, conjunction and frobenius by direct evaluation") {
  GeneratorConfig cfg;
  cfg.max_points = 3;
  Rng rng(23);
  for (int k = 0; k < 40; ++k) {
    const Interpretation i = generate_random_interpretation(rng, cfg);
    const auto pool = generate_random_pool(rng, i.signature(), 3, 3);
    for (const Formula& a : pool) {
      for (const Formula& b : pool) {
        for (const Formula& c : pool) {
          const Grade ab = sequent_grade(i, a, b), bc = sequent_grade(i, b, c);
          CHECK(meet(ab, bc) <= sequent_grade(i, a, c));
          CHECK(meet(ab, sequent_grade(i, a, c)) ==
                sequent_grade(i, a, Formula::conjunction(b, c)));
        }
        const Formula ex = Formula::exists(2, b);
        const std::set<unsigned> fv = free_variables(a);
        if (fv.count(2) == 0) {
          CHECK(sequent_grade(i, Formula::conjunction(a, ex),
                              Formula::exists(2, Formula::conjunction(a, b))) == Grade::one());
        }
      }
    }
  }
}

TEST_CASE("random pools pass every law") {
  GeneratorConfig cfg;
  cfg.max_points = 3;
  Rng rng(29);
  for (int k = 0; k < 30; ++k) {
    const Interpretation i = generate_random_interpretation(rng, cfg);
    const auto pool = generate_random_pool(rng, i.signature(), 4, 3);
    SequentSuiteOptions opts;
    opts.variables = {1, 2};
    for (const Tally& t : sequent_properties(i, pool, opts)) {
      INFO(t.subject);
      CHECK(t.ok());
    }
  }
}
