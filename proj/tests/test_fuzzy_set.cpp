#include <doctest.h>

#include <random>
#include <vector>

#include "graded_topos/errors.hpp"
#include "graded_topos/fuzzy_set.hpp"

using namespace graded_topos;

namespace {

Grade g(const char* s) { return Grade::parse(s); }

const std::vector<Grade> kPool = {g("0"), g("1/4"), g("1/3"), g("1/2"), g("3/4"), g("1")};

FuzzySet random_set(std::mt19937_64& rng, const Universe& u) {
  std::vector<Grade> v(u.size());
  for (auto& x : v) x = kPool[rng() % kPool.size()];
  return FuzzySet(u, v);
}

// Largest grade c of the pool with min(c, a(x)) <= b(x) at every x.
Grade inclusion_oracle(const FuzzySet& a, const FuzzySet& b) {
  Grade best = Grade::zero();
  for (Grade c : kPool) {
    bool below = true;
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (meet(c, a(x)) > b(x)) below = false;
    }
    if (below && c > best) best = c;
  }
  return best;
}

}  // namespace

TEST_CASE("universe rejects empty, duplicate and comma identifiers") {
  CHECK_THROWS_AS(Universe({}), SchemaError);
  CHECK_THROWS_AS(Universe({"a", "a"}), SchemaError);
  CHECK_THROWS_AS(Universe({"a,b"}), SchemaError);
  CHECK_THROWS_AS(Universe({""}), SchemaError);
  const Universe u({"a", "b"});
  CHECK(u.index_of("b") == 1u);
  CHECK_FALSE(u.index_of("c").has_value());
  CHECK(Universe::numbered("x", 3).elements() == std::vector<std::string>{"x0", "x1", "x2"});
}

TEST_CASE("fuzzy set membership must be total") {
  const Universe u({"a", "b"});
  CHECK_THROWS_AS(FuzzySet(u, {g("1")}), SchemaError);
  const FuzzySet t(u, {g("1/2"), g("0")});
  CHECK(t.at("a") == g("1/2"));
  CHECK_THROWS_AS(t.at("c"), SchemaError);
  CHECK(t.str() == "{a:1/2, b:0/1}");
}

TEST_CASE("constant sets, union and intersection") {
  const Universe u({"a", "b"});
  const FuzzySet t(u, {g("1/2"), g("1/4")});
  const FuzzySet s(u, {g("1/3"), g("3/4")});
  CHECK(empty_set(u).is_constant(g("0")));
  CHECK(full_set(u).is_constant(g("1")));
  CHECK(unite(t, s) == FuzzySet(u, {g("1/2"), g("3/4")}));
  CHECK(intersect(t, s) == FuzzySet(u, {g("1/3"), g("1/4")}));
  CHECK(unite(u, std::vector<FuzzySet>{}) == empty_set(u));
  CHECK_THROWS_AS(unite(t, full_set(Universe({"z"}))), MixedUniverse);
}

TEST_CASE("graded inclusion examples") {
  const Universe u({"x1", "x2"});
  const FuzzySet t1(u, {g("1/2"), g("1")});
  const FuzzySet t2(u, {g("1/4"), g("1")});
  CHECK(graded_inclusion(t1, t2) == g("1/4"));
  CHECK(graded_inclusion(t2, t1) == g("1"));
  CHECK(graded_inclusion(full_set(u), empty_set(u)) == g("0"));
  CHECK(graded_inclusion(empty_set(u), full_set(u)) == g("1"));
}

TEST_CASE("graded inclusion is the largest grade c with c /\\ a <= b") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const Universe u = Universe::numbered("x", 1 + rng() % 4);
    const FuzzySet a = random_set(rng, u), b = random_set(rng, u);
    CHECK(graded_inclusion(a, b) == inclusion_oracle(a, b));
  }
}

TEST_CASE("image and preimage") {
  const Universe x({"a", "b", "c"});
  const Universe y({"u", "v", "w"});
  const PointMap f(x, y, {0, 0, 1});
  const FuzzySet t(x, {g("1/4"), g("3/4"), g("1/2")});
  CHECK(image(f, t) == FuzzySet(y, {g("3/4"), g("1/2"), g("0")}));
  const FuzzySet s(y, {g("1/3"), g("1"), g("0")});
  CHECK(preimage(f, s) == FuzzySet(x, {g("1/3"), g("1/3"), g("1")}));
  CHECK_FALSE(f.is_injective());
  CHECK_FALSE(f.is_surjective());
  CHECK_THROWS_AS(PointMap(x, y, {0, 3, 1}), SchemaError);
  CHECK_THROWS_AS(PointMap(x, y, {0}), SchemaError);
}

TEST_CASE("composition of point maps") {
  const Universe x({"a", "b"}), y({"u", "v"}), z({"p"});
  const PointMap f(x, y, {1, 0});
  const PointMap h(y, z, {0, 0});
  CHECK(compose(f, h) == PointMap(x, z, {0, 0}));
  CHECK(compose(PointMap::identity(x), f) == f);
  CHECK(compose(f, PointMap::identity(y)) == f);
  CHECK_THROWS_AS(compose(h, f), MixedUniverse);
}

TEST_CASE("preimage preserves unions and intersections; image is monotone") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const Universe x = Universe::numbered("x", 1 + rng() % 5);
    const Universe y = Universe::numbered("y", 1 + rng() % 5);
    std::vector<std::size_t> img(x.size());
    for (auto& i : img) i = rng() % y.size();
    const PointMap f(x, y, img);
    const FuzzySet a = random_set(rng, y), b = random_set(rng, y);
    CHECK(preimage(f, unite(a, b)) == unite(preimage(f, a), preimage(f, b)));
    CHECK(preimage(f, intersect(a, b)) == intersect(preimage(f, a), preimage(f, b)));
    const FuzzySet s = random_set(rng, x), t = random_set(rng, x);
    CHECK(graded_inclusion(s, t) <= graded_inclusion(image(f, s), image(f, t)));
    // image is left adjoint to preimage
    CHECK((graded_inclusion(image(f, s), a) == Grade::one()) ==
          (graded_inclusion(s, preimage(f, a)) == Grade::one()));
  }
}
