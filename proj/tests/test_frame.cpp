#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "graded_topos/errors.hpp"
#include "graded_topos/frame.hpp"
#include "graded_topos/functors.hpp"
#include "graded_topos/generators.hpp"

using namespace graded_topos;

namespace {

Grade g(const char* s) { return Grade::parse(s); }

GradedFrame two_chain(Grade r00 = Grade::one()) {
  // bot = 0, top = 1; join by mask: {} -> 0, {0} -> 0, {1} -> 1, {0,1} -> 1
  return GradedFrame(Universe({"0", "1"}), 1, {0, 0, 0, 1},
                     GradedFrame::tabulated_join({0, 0, 1, 1}),
                     {r00, Grade::one(), Grade::zero(), Grade::one()});
}

std::vector<std::size_t> members(std::size_t mask, std::size_t n) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1) s.push_back(i);
  }
  return s;
}

// Direct statement of the semilattice laws and the nine axioms over every
// subset.
bool frame_oracle(const GradedFrame& f) {
  const std::size_t n = f.size();
  const Grade one = Grade::one();
  auto R = [&](std::size_t a, std::size_t b) { return f.relation(a, b); };
  for (std::size_t a = 0; a < n; ++a) {
    if (f.meet(a, a) != a) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (f.meet(a, b) != f.meet(b, a)) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (f.meet(f.meet(a, b), c) != f.meet(a, f.meet(b, c))) return false;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (R(a, a) != one || R(a, f.top()) != one) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && R(a, b) == one && R(b, a) == one) return false;
      if (R(f.meet(a, b), a) != one || R(f.meet(a, b), b) != one) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (meet(R(a, b), R(b, c)) > R(a, c)) return false;
        if (meet(R(a, b), R(a, c)) != R(a, f.meet(b, c))) return false;
      }
    }
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    const auto s = members(mask, n);
    const std::size_t j = f.join(s);
    for (std::size_t a : s) {
      if (R(a, j) != one) return false;
    }
    for (std::size_t b = 0; b < n; ++b) {
      Grade lower = one;
      for (std::size_t a : s) lower = meet(lower, R(a, b));
      if (lower != R(j, b)) return false;
    }
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<std::size_t> ms;
      for (std::size_t b : s) ms.push_back(f.meet(a, b));
      std::sort(ms.begin(), ms.end());
      ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
      if (R(f.meet(a, j), f.join(ms)) != one) return false;
    }
  }
  return true;
}

GradedFrame with_relation(const GradedFrame& f, std::size_t a, std::size_t b, Grade r) {
  std::vector<Grade> rel(f.relation_table().begin(), f.relation_table().end());
  rel[a * f.size() + b] = r;
  return GradedFrame(f.carrier(), f.top(),
                     std::vector<std::size_t>(f.meet_table().begin(), f.meet_table().end()),
                     [f](std::span<const std::size_t> s) { return f.join(s); }, rel);
}

GradedFrame with_join(const GradedFrame& f, std::size_t mask, std::size_t value) {
  const std::size_t n = f.size();
  return GradedFrame(f.carrier(), f.top(),
                     std::vector<std::size_t>(f.meet_table().begin(), f.meet_table().end()),
                     [f, mask, value, n](std::span<const std::size_t> s) {
                       std::size_t m = 0;
                       for (std::size_t i : s) m |= std::size_t{1} << i;
                       (void)n;
                       return m == mask ? value : f.join(s);
                     },
                     std::vector<Grade>(f.relation_table().begin(), f.relation_table().end()));
}

// The hom frame(target) -> frame(source) given by preimage along f.
FrameHom preimage_hom(const PointMap& f, const GradedSpace& source, const GradedSpace& target) {
  std::vector<std::size_t> map;
  for (const FuzzySet& o : target.opens()) map.push_back(*source.index_of(preimage(f, o)));
  return FrameHom(frame_from_space(target), frame_from_space(source), map);
}

}  // namespace

TEST_CASE("two-chain frame") {
  CHECK(check_frame(two_chain()));
  CHECK(frame_oracle(two_chain()));
  const Verdict v = check_frame(two_chain(g("1/2")));
  CHECK(v.clause == "axiom 1");
  CHECK(v.witnesses.at(0).location.find('0') != std::string::npos);
  CHECK(two_chain().bottom() == 0);
  CHECK(two_chain().join(std::vector<std::size_t>{0}) == 0);
}

TEST_CASE("meet table must be a semilattice") {
  const GradedFrame f(Universe({"0", "1"}), 1, {0, 1, 0, 1},
                      GradedFrame::tabulated_join({0, 0, 1, 1}),
                      {g("1"), g("1"), g("0"), g("1")});
  CHECK(check_frame(f).clause == "meet semilattice");
}

TEST_CASE("table shapes are validated at construction") {
  CHECK_THROWS_AS(GradedFrame(Universe({"0"}), 0, {0, 0}, GradedFrame::tabulated_join({0, 0}),
                              {g("1")}),
                  SchemaError);
  CHECK_THROWS_AS(GradedFrame(Universe({"0"}), 1, {0}, GradedFrame::tabulated_join({0, 0}),
                              {g("1")}),
                  SchemaError);
  const GradedFrame bad(Universe({"0"}), 0, {0}, GradedFrame::tabulated_join({5, 0}), {g("1")});
  CHECK_THROWS_AS(bad.join({}), SchemaError);
}

TEST_CASE("frame of an indiscrete space") {
  const Universe u({"x1", "x2"});
  const GradedFrame f = frame_from_space(generate_topology(u, std::vector<FuzzySet>{}));
  REQUIRE(f.size() == 2);
  const std::size_t top = f.top(), bot = f.bottom();
  CHECK(f.relation(bot, top) == Grade::one());
  CHECK(f.relation(top, bot) == Grade::zero());
  CHECK(check_frame(f));
}

TEST_CASE("frames of random spaces agree with the axiom oracle, also when perturbed") {
  GeneratorConfig cfg;
  cfg.max_carrier = 8;
  Rng rng(17);
  std::size_t rejected = 0;
  for (int k = 0; k < 120; ++k) {
    const GradedSpace s = generate_random_space(rng, cfg);
    const GradedFrame f = frame_from_space(s);
    CHECK(f.size() == s.size());
    CHECK(check_frame(f));
    CHECK(frame_oracle(f));
    // top and bottom are the full and empty set
    CHECK(s.open(f.top()) == full_set(s.universe()));
    CHECK(s.open(f.bottom()) == empty_set(s.universe()));
    for (std::size_t b = 0; b < f.size(); ++b) CHECK(f.relation(f.bottom(), b) == Grade::one());

    const std::size_t a = rng() % f.size(), b = rng() % f.size();
    const GradedFrame r = with_relation(f, a, b, cfg.grade_pool.grades()[rng() % cfg.grade_pool.size()]);
    CHECK(static_cast<bool>(check_frame(r)) == frame_oracle(r));
    const std::size_t mask = rng() % (std::size_t{1} << f.size());
    const GradedFrame j = with_join(f, mask, rng() % f.size());
    const bool ok = static_cast<bool>(check_frame(j));
    CHECK(ok == frame_oracle(j));
    if (!ok) ++rejected;
  }
  CHECK(rejected > 0);
}

TEST_CASE("sampled regime above the subset cap") {
  GeneratorConfig cfg;
  cfg.max_carrier = 40;
  cfg.max_generators = 5;
  cfg.max_points = 4;
  Rng rng(2);
  CheckOptions opts;
  opts.subset_cap = 4;
  bool saw_sampled = false;
  for (int k = 0; k < 20; ++k) {
    const GradedFrame f = frame_from_space(generate_random_space(rng, cfg));
    const Verdict v = check_frame(f, opts);
    CHECK(v);
    if (f.size() > 4) {
      CHECK(v.regime == Regime::sampled);
      saw_sampled = true;
    } else {
      CHECK(v.regime == Regime::exhaustive);
    }
  }
  CHECK(saw_sampled);
}

TEST_CASE("finite meet") {
  const Universe u({"x1", "x2"});
  const FuzzySet a(u, {g("1/2"), g("1")}), b(u, {g("1"), g("1/4")});
  const GradedSpace s = generate_topology(u, std::vector<FuzzySet>{a, b});
  const GradedFrame f = frame_from_space(s);
  const std::size_t ia = *s.index_of(a), ib = *s.index_of(b);
  CHECK(finite_meet(f, {}) == f.top());
  CHECK(finite_meet(f, std::vector<std::size_t>{ia}) == ia);
  CHECK(finite_meet(f, std::vector<std::size_t>{ia, ib}) == f.meet(ia, ib));
  CHECK(s.open(f.meet(ia, ib)) == intersect(a, b));
}

TEST_CASE("frame homomorphisms") {
  const GradedFrame c = two_chain();
  CHECK(check_frame_hom(FrameHom::identity(c)));
  const Verdict v = check_frame_hom(FrameHom(c, c, {0, 0}));
  CHECK_FALSE(v);
  CHECK(v.clause == "top");
  CHECK_THROWS_AS(FrameHom(c, c, {0, 2}), SchemaError);

  // preimage along continuous maps, and composition
  GeneratorConfig cfg;
  Rng rng(9);
  for (int k = 0; k < 60; ++k) {
    const ContinuousChain ch = generate_continuous_chain(rng, cfg);
    const FrameHom hg = preimage_hom(ch.g, ch.y, ch.z);
    const FrameHom hf = preimage_hom(ch.f, ch.x, ch.y);
    CHECK(check_frame_hom(hg));
    CHECK(check_frame_hom(hf));
    const FrameHom both = compose(hg, hf);
    CHECK(check_frame_hom(both));
    CHECK(both == preimage_hom(compose(ch.f, ch.g), ch.x, ch.z));
    CHECK(compose(FrameHom::identity(hg.source()), hg) == hg);
    CHECK(compose(hg, FrameHom::identity(hg.target())) == hg);
    // R(a, top) = 1 is carried to the target
    for (std::size_t a = 0; a < hg.source().size(); ++a) {
      CHECK(hg.target().relation(hg(a), hg(hg.source().top())) == Grade::one());
    }
  }
  CHECK_THROWS_AS(compose(FrameHom::identity(c), FrameHom::identity(chain_frame(GradeSet::parse("0,1/2,1")))),
                  MixedCarrier);
}

TEST_CASE("hom clauses are reported in order") {
  // three-chain 0 < 1/2 < 1 onto the two-chain
  const GradedFrame three = chain_frame(GradeSet::parse("0,1/2,1"));
  const GradedFrame two = chain_frame(GradeSet::parse("0,1"));
  CHECK(check_frame_hom(FrameHom(three, two, {0, 1, 1})));
  // relation: R(1, 1/2) = 1/2 but R(1, 0) = 0 in the target
  const Verdict rel = check_frame_hom(FrameHom(three, two, {0, 0, 1}));
  CHECK(rel.clause == "relation");
  // join of {} is not preserved
  CHECK(check_frame_hom(FrameHom(three, three, {1, 1, 2})).clause == "join");
  CHECK(inverse(FrameHom::identity(three)) == FrameHom::identity(three));
  CHECK_THROWS_AS(inverse(FrameHom(three, two, {0, 1, 1})), SchemaError);
}
