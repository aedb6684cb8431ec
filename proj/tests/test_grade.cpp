#include <doctest.h>

#include <vector>

#include "graded_topos/errors.hpp"
#include "graded_topos/grade.hpp"

using namespace graded_topos;

namespace {

Grade g(const char* s) { return Grade::parse(s); }

// Every k/d for d <= 7, with duplicates.
std::vector<Grade> sample_grades() {
  std::vector<Grade> out;
  for (std::uint64_t d = 1; d <= 7; ++d) {
    for (std::uint64_t k = 0; k <= d; ++k) out.emplace_back(k, d);
  }
  return out;
}

// Largest c in the sample with min(a, c) <= b.
Grade residuum_oracle(Grade a, Grade b, const std::vector<Grade>& sample) {
  Grade best = Grade::zero();
  for (Grade c : sample) {
    if (meet(a, c) <= b && c > best) best = c;
  }
  return best;
}

}  // namespace

TEST_CASE("parse accepts fractions and decimals in lowest terms") {
  CHECK(g("1/2").str() == "1/2");
  CHECK(g("2/4").str() == "1/2");
  CHECK(g("0.3") == Grade(3, 10));
  CHECK(g(".25") == Grade(1, 4));
  CHECK(g("1") == Grade::one());
  CHECK(g("1.000") == Grade::one());
  CHECK(g("0") == Grade::zero());
  CHECK(g("0/7").str() == "0/1");
  CHECK(g("5/5").str() == "1/1");
}

TEST_CASE("parse rejects values outside the unit interval and malformed text") {
  CHECK_THROWS_AS(g("3/2"), SchemaError);
  CHECK_THROWS_AS(g("1/0"), SchemaError);
  CHECK_THROWS_AS(g("1.5"), SchemaError);
  CHECK_THROWS_AS(g("-1/2"), SchemaError);
  CHECK_THROWS_AS(g(""), SchemaError);
  CHECK_THROWS_AS(g("a/b"), SchemaError);
  CHECK_THROWS_AS(g("1/2/3"), SchemaError);
}

TEST_CASE("meet and join") {
  CHECK(meet(g("1/2"), g("1/2")) == g("1/2"));
  CHECK(meet(g("3/10"), g("7/10")) == g("3/10"));
  CHECK(meet(g("0"), g("1")) == g("0"));
  CHECK(join(g("1/2"), g("1/2")) == g("1/2"));
  CHECK(join(g("3/10"), g("7/10")) == g("7/10"));
  CHECK(join(g("0"), g("1")) == g("1"));
}

TEST_CASE("godel arrow") {
  CHECK(godel_arrow(g("1/2"), g("1/2")) == Grade::one());
  CHECK(godel_arrow(g("7/10"), g("3/10")) == g("3/10"));
  CHECK(godel_arrow(g("0"), g("3/10")) == Grade::one());
}

TEST_CASE("empty and finite inf and sup") {
  CHECK(inf({}) == Grade::one());
  CHECK(sup({}) == Grade::zero());
  CHECK(inf({g("1/2"), g("3/10"), g("1")}) == g("3/10"));
  CHECK(sup({g("1/2"), g("3/10"), g("0")}) == g("1/2"));
}

TEST_CASE("ordering agrees with cross multiplication near 64-bit limits") {
  const std::uint64_t big = (1ull << 63) + 1;
  CHECK(Grade(big - 1, big) < Grade::one());
  CHECK(Grade(1, big) > Grade::zero());
  CHECK(Grade(big - 2, big) < Grade(big - 1, big));
}

TEST_CASE("arrow is the residuum of min over a dense sample") {
  const auto sample = sample_grades();
  for (Grade a : sample) {
    for (Grade b : sample) {
      const Grade r = godel_arrow(a, b);
      CHECK(r == residuum_oracle(a, b, sample));
      CHECK((r == Grade::one()) == (a <= b));
      CHECK(meet(a, r) <= b);
      for (Grade c : sample) {
        CHECK(godel_arrow(a, meet(b, c)) == meet(godel_arrow(a, b), godel_arrow(a, c)));
      }
    }
  }
}

TEST_CASE("meet and join agree with the order") {
  const auto sample = sample_grades();
  for (Grade a : sample) {
    for (Grade b : sample) {
      CHECK(meet(a, b) == (a.to_double() <= b.to_double() ? a : b));
      CHECK(join(a, b) == (a.to_double() >= b.to_double() ? a : b));
      CHECK(meet(a, b) == meet(b, a));
      CHECK(join(a, meet(a, b)) == a);
    }
  }
}
