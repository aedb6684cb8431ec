#include <doctest.h>

#include "graded_topos/errors.hpp"
#include "graded_topos/functors.hpp"
#include "graded_topos/generators.hpp"
#include "graded_topos/io.hpp"

using namespace graded_topos;

TEST_CASE("same seed gives the same instances") {
  GeneratorConfig cfg;
  cfg.seed = 99;
  CHECK(generate_random_space(cfg) == generate_random_space(cfg));
  CHECK(generate_random_system(cfg) == generate_random_system(cfg));
  CHECK(save_interpretation(generate_random_interpretation(cfg)) ==
        save_interpretation(generate_random_interpretation(cfg)));
  GeneratorConfig other = cfg;
  other.seed = 100;
  bool differs = false;
  Rng a(cfg.seed), b(other.seed);
  for (int k = 0; k < 10; ++k) {
    differs = differs || !(generate_random_space(a, cfg) == generate_random_space(b, other));
  }
  CHECK(differs);
}

TEST_CASE("generated structures are valid and within bounds") {
  GeneratorConfig cfg;
  cfg.max_points = 3;
  cfg.max_carrier = 6;
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const GradedSpace sp = generate_random_space(rng, cfg);
    CHECK(check_space(sp));
    CHECK(sp.universe().size() <= 3);
    CHECK(sp.size() <= 6);
    for (const FuzzySet& o : sp.opens()) {
      for (Grade v : o.membership()) CHECK(cfg.grade_pool.contains(v));
    }
    const GradedSystem s = generate_random_system(rng, cfg);
    CHECK(check_system(s));
    const ContinuousChain c = generate_continuous_chain(rng, cfg);
    CHECK(check_continuous(c.f, c.x, c.y));
    CHECK(check_continuous(c.g, c.y, c.z));
    const GradedSystem ns = generate_nonspatial_system(rng, cfg);
    CHECK(check_system(ns));
    CHECK_FALSE(check_spatial(ns));
    const Interpretation i = generate_random_interpretation(rng, cfg);
    CHECK(i.domain().size() <= 3);
    CHECK(i.predicates().size() <= 2);
    CHECK(i.functions().size() <= 1);
  }
}

TEST_CASE("invalid variants fail their checks") {
  GeneratorConfig cfg;
  Rng rng(2);
  for (int k = 0; k < 50; ++k) {
    CHECK(check_space(generate_invalid_space(rng, cfg)).clause == "clause 1");
    CHECK_FALSE(check_frame(generate_invalid_frame(rng, cfg)));
    CHECK_FALSE(check_system(generate_invalid_system(rng, cfg)));
  }
}

TEST_CASE("configuration is validated") {
  GeneratorConfig cfg;
  cfg.max_points = 0;
  CHECK_THROWS_AS(generate_random_space(cfg), SchemaError);
  cfg.max_points = 2;
  cfg.max_carrier = 1;
  CHECK_THROWS_AS(generate_random_space(cfg), SchemaError);
}
