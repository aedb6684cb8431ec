#include "graded_topos/law_runs.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "graded_topos/errors.hpp"
#include "graded_topos/functors.hpp"
#include "graded_topos/report.hpp"

namespace graded_topos {

namespace {

class Tallies {
 public:
  Tally& operator[](const std::string& subject) {
    auto it = std::find_if(tallies_.begin(), tallies_.end(),
                           [&](const Tally& t) { return t.subject == subject; });
    if (it != tallies_.end()) return *it;
    tallies_.emplace_back(subject);
    return tallies_.back();
  }

  void add(const std::vector<LawCheck>& checks) {
    for (const LawCheck& c : checks) (*this)[c.law].record(c.verdict);
  }

  // Runs body, turning a library exception into a failed instance of subject.
  // A frame without points only skips.
  template <typename Body>
  void guard(const std::string& subject, Body body) {
    try {
      body();
    } catch (const NoPoints&) {
      (*this)[subject].skip();
    } catch (const Error& e) {
      (*this)[subject].record(false, [&] { return Witness{"exception", "none", e.what()}; });
    }
  }

  std::vector<Tally> take() { return {tallies_.begin(), tallies_.end()}; }

 private:
  std::deque<Tally> tallies_;
};

Witness pair_witness(const FuzzySet& a, const FuzzySet& b, const std::string& expected,
                     const std::string& actual) {
  return Witness{a.str() + " / " + b.str(), expected, actual};
}

CheckOptions exhaustive_up_to(std::size_t cap) {
  CheckOptions opts;
  opts.subset_cap = cap;
  return opts;
}

}  // namespace

std::vector<Tally> inclusion_laws(const GradedSpace& space, const CheckOptions& opts) {
  const auto opens = space.opens();
  const std::size_t n = opens.size();
  const Universe& u = space.universe();
  const FuzzySet full = full_set(u);

  std::vector<Grade> inc(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inc[i * n + j] = graded_inclusion(opens[i], opens[j]);
  }
  auto in = [&](std::size_t i, std::size_t j) { return inc[i * n + j]; };

  Tallies t;
  Tally& reflexive = t["inclusion-reflexive"];
  Tally& antisymmetric = t["inclusion-antisymmetric"];
  Tally& transitive = t["inclusion-transitive"];
  Tally& lower = t["intersection-lower-bound"];
  Tally& in_full = t["inclusion-in-full-set"];
  Tally& meets = t["inclusion-meets-intersection"];
  Tally& upper = t["union-upper-bound"];
  Tally& least = t["union-least"];
  Tally& distributes = t["intersection-distributes-over-union"];
  Tally& modus_ponens = t["inclusion-modus-ponens"];

  for (std::size_t a = 0; a < n; ++a) {
    const FuzzySet& ta = opens[a];
    reflexive.record(in(a, a).is_one(), [&] { return Witness{ta.str(), "1/1", in(a, a).str()}; });
    const Grade g = graded_inclusion(ta, full);
    in_full.record(g.is_one(), [&] { return Witness{ta.str(), "1/1", g.str()}; });

    for (std::size_t b = 0; b < n; ++b) {
      const FuzzySet& tb = opens[b];
      if (in(a, b).is_one() && in(b, a).is_one()) {
        antisymmetric.record(ta == tb, [&] { return pair_witness(ta, tb, "equal", "distinct"); });
      } else {
        antisymmetric.skip();
      }
      const FuzzySet ab = intersect(ta, tb);
      const Grade l1 = graded_inclusion(ab, ta);
      const Grade l2 = graded_inclusion(ab, tb);
      lower.record(l1.is_one() && l2.is_one(),
                   [&] { return pair_witness(ta, tb, "1/1 and 1/1", l1.str() + " and " + l2.str()); });
      for (std::size_t x = 0; x < u.size(); ++x) {
        const Grade lhs = meet(ta(x), in(a, b));
        modus_ponens.record(lhs <= tb(x), [&] {
          return pair_witness(ta, tb, "<= " + tb(x).str() + " at " + u[x], lhs.str());
        });
      }
      for (std::size_t c = 0; c < n; ++c) {
        const FuzzySet& tc = opens[c];
        const Grade chain = meet(in(a, b), in(b, c));
        transitive.record(chain <= in(a, c), [&] {
          return Witness{ta.str() + " / " + tb.str() + " / " + tc.str(), "<= " + in(a, c).str(),
                         chain.str()};
        });
        const Grade lhs = meet(in(a, b), in(a, c));
        const Grade rhs = graded_inclusion(ta, intersect(tb, tc));
        meets.record(lhs == rhs, [&] {
          return Witness{ta.str() + " / " + tb.str() + " / " + tc.str(), lhs.str(), rhs.str()};
        });
      }
    }
  }

  std::vector<FuzzySet> members;
  const Regime regime = for_each_subset(n, opts, [&](std::span<const std::size_t> s) {
    members.clear();
    for (std::size_t i : s) members.push_back(opens[i]);
    const FuzzySet uni = unite(u, members);
    for (std::size_t i : s) {
      const Grade g = graded_inclusion(opens[i], uni);
      upper.record(g.is_one(), [&] { return pair_witness(opens[i], uni, "1/1", g.str()); });
    }
    for (std::size_t b = 0; b < n; ++b) {
      Grade lhs = Grade::one();
      for (std::size_t i : s) lhs = meet(lhs, in(i, b));
      const Grade rhs = graded_inclusion(uni, opens[b]);
      least.record(lhs == rhs, [&] { return pair_witness(uni, opens[b], lhs.str(), rhs.str()); });
    }
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<FuzzySet> pieces;
      for (std::size_t i : s) pieces.push_back(intersect(opens[a], opens[i]));
      const FuzzySet lhs = intersect(opens[a], uni);
      const FuzzySet rhs = unite(u, pieces);
      const Grade g = graded_inclusion(lhs, rhs);
      distributes.record(g.is_one(), [&] { return pair_witness(lhs, rhs, "1/1", g.str()); });
    }
    return true;
  });
  upper.regime = least.regime = distributes.regime = regime;
  return t.take();
}

std::vector<Tally> run_inclusion_laws(const GeneratorConfig& cfg, std::size_t count) {
  Rng rng(cfg.seed);
  Tallies t;
  std::vector<Tally> all;
  const CheckOptions opts = exhaustive_up_to(std::max<std::size_t>(cfg.max_carrier, 12));
  for (std::size_t k = 0; k < count; ++k) {
    const GradedSpace space = generate_random_space(rng, cfg);
    merge_tallies(all, inclusion_laws(space, opts));

    const Universe target = Universe::numbered("y", 1 + uniform(rng, cfg.max_points));
    const PointMap f = random_point_map(rng, target, space.universe());
    std::vector<FuzzySet> pre;
    for (const FuzzySet& o : space.opens()) pre.push_back(preimage(f, o));
    const FuzzySet lhs = preimage(f, unite(space.universe(), space.opens()));
    const FuzzySet rhs = unite(target, pre);
    t["preimage-preserves-union"].record(lhs == rhs,
                                         [&] { return Witness{"all opens", rhs.str(), lhs.str()}; });
    for (std::size_t a = 0; a < space.size(); ++a) {
      for (std::size_t b = 0; b < space.size(); ++b) {
        const FuzzySet l = preimage(f, intersect(space.open(a), space.open(b)));
        const FuzzySet r = intersect(pre[a], pre[b]);
        t["preimage-preserves-intersection"].record(l == r, [&] {
          return pair_witness(space.open(a), space.open(b), r.str(), l.str());
        });
      }
    }
  }
  merge_tallies(all, t.take());
  return all;
}

std::vector<Tally> run_image_monotonicity(const GeneratorConfig& cfg, std::size_t count) {
  Rng rng(cfg.seed);
  Tally tally("image-monotone");
  for (std::size_t k = 0; k < count; ++k) {
    const Universe x = Universe::numbered("x", 1 + uniform(rng, cfg.max_points));
    const Universe y = Universe::numbered("y", 1 + uniform(rng, cfg.max_points));
    const PointMap f = random_point_map(rng, x, y);
    const FuzzySet a = random_fuzzy_set(rng, x, cfg.grade_pool);
    const FuzzySet b = random_fuzzy_set(rng, x, cfg.grade_pool);
    const Grade before = graded_inclusion(a, b);
    const Grade after = graded_inclusion(image(f, a), image(f, b));
    tally.record(before <= after,
                 [&] { return pair_witness(a, b, ">= " + before.str(), after.str()); });
  }
  return {tally};
}

std::vector<Tally> run_frame_construction(const GeneratorConfig& cfg, std::size_t count,
                                          const CheckOptions& opts) {
  Rng rng(cfg.seed);
  Tally tally("frame-of-opens");
  for (std::size_t k = 0; k < count; ++k) {
    tally.record(check_frame(frame_from_space(generate_random_space(rng, cfg)), opts));
  }
  return {tally};
}

std::vector<Tally> run_frame_hom_composition(const GeneratorConfig& cfg, std::size_t count) {
  Rng rng(cfg.seed);
  Tallies t;
  for (std::size_t k = 0; k < count; ++k) {
    const ContinuousChain c = generate_continuous_chain(rng, cfg);
    t.guard("frame-hom-composite", [&] {
      const FrameHom hf = j_morphism(c.f, c.x, c.y).frames;
      const FrameHom hg = j_morphism(c.g, c.y, c.z).frames;
      t["frame-hom-of-map"].record(check_frame_hom(hf));
      t["frame-hom-of-map"].record(check_frame_hom(hg));
      t["frame-hom-composite"].record(check_frame_hom(compose(hg, hf)));
    });
  }
  return t.take();
}

std::vector<Tally> run_system_construction(const GeneratorConfig& cfg, std::size_t count) {
  Rng rng(cfg.seed);
  Tallies t;
  for (std::size_t k = 0; k < count; ++k) {
    const GradedSpace space = generate_random_space(rng, cfg);
    t["system-of-space"].record(check_system(j_object(space)));
    const GradedSystem s = generate_random_system(rng, cfg);
    t["random-system"].record(check_system(s));
    t["space-of-system"].record(check_space(ext_object(s)));
  }
  return t.take();
}

namespace {

void check_ext_transport(Tallies& t, const SystemMorphism& m, const GradedSystem& source,
                         const GradedSystem& target) {
  const PointMap f1 = ext_morphism(m);
  t["ext-morphism-continuous"].record(
      check_continuous(f1, ext_object(source), ext_object(target)));
  Tally& identity = t["ext-preimage-identity"];
  for (std::size_t b = 0; b < target.frame().size(); ++b) {
    const FuzzySet lhs = preimage(f1, target.extent(b));
    const FuzzySet rhs = source.extent(m.frames(b));
    identity.record(lhs == rhs, [&] { return Witness{target.frame().name(b), rhs.str(), lhs.str()}; });
  }
}

}  // namespace

std::vector<Tally> run_morphism_transport(const GeneratorConfig& cfg, std::size_t count) {
  Rng rng(cfg.seed);
  Tallies t;
  for (std::size_t k = 0; k < count; ++k) {
    const ContinuousChain c = generate_continuous_chain(rng, cfg);
    t.guard("j-morphism-valid", [&] {
      const GradedSystem jx = j_object(c.x), jy = j_object(c.y), jz = j_object(c.z);
      const SystemMorphism jf = j_morphism(c.f, c.x, c.y);
      const SystemMorphism jg = j_morphism(c.g, c.y, c.z);
      t["j-morphism-valid"].record(check_system_morphism(jf, jx, jy));
      t["j-morphism-valid"].record(check_system_morphism(jg, jy, jz));
      t["system-morphism-composite"].record(check_system_morphism(compose(jf, jg), jx, jz));
      check_ext_transport(t, jf, jx, jy);
      check_ext_transport(t, compose(jf, jg), jx, jz);
    });

    const GradedSystem s = generate_random_system(rng, cfg);
    t.guard("ext-morphism-continuous", [&] {
      const GradedSystem je = j_object(ext_object(s));
      const SystemMorphism xi = counit(s);
      t["system-morphism-composite"].record(check_system_morphism(xi, je, s));
      check_ext_transport(t, xi, je, s);
    });
  }
  return t.take();
}

std::vector<Tally> run_functoriality(const GeneratorConfig& cfg, std::size_t count) {
  Rng rng(cfg.seed);
  Tallies t;
  auto expect = [&](const char* subject, bool holds) {
    t[subject].record(holds, [&] { return Witness{"morphism", "equal", "differs"}; });
  };
  for (std::size_t k = 0; k < count; ++k) {
    const ContinuousChain c = generate_continuous_chain(rng, cfg);
    t.guard("functor-exception", [&] {
      const GradedSystem jx = j_object(c.x);
      const SystemMorphism jf = j_morphism(c.f, c.x, c.y);
      const SystemMorphism jg = j_morphism(c.g, c.y, c.z);
      const SystemMorphism jgf =
          j_morphism(compose_continuous(c.f, c.g, c.x, c.y, c.z), c.x, c.z);
      expect("j-identity", j_morphism(PointMap::identity(c.x.universe()), c.x, c.x) ==
                               SystemMorphism::identity(jx));
      expect("j-composition", jgf == compose(jf, jg));
      expect("ext-identity", ext_morphism(SystemMorphism::identity(jx)) ==
                                 PointMap::identity(jx.points()));
      expect("ext-composition",
             ext_morphism(compose(jf, jg)) == compose(ext_morphism(jf), ext_morphism(jg)));
      expect("fm-composition",
             fm_morphism(compose(jf, jg)) == compose(fm_morphism(jg), fm_morphism(jf)));

      const GradeSet grades = GradeSet::occurring_in(c.x)
                                  .merged(GradeSet::occurring_in(c.y))
                                  .merged(GradeSet::occurring_in(c.z));
      const FrameHom hf = jf.frames;
      const FrameHom hg = jg.frames;
      expect("s-identity", s_morphism(FrameHom::identity(hf.target()), grades) ==
                               SystemMorphism::identity(s_object(hf.target(), grades)));
      expect("s-composition", s_morphism(compose(hg, hf), grades) ==
                                  compose(s_morphism(hf, grades), s_morphism(hg, grades)));
    });
  }
  return t.take();
}

std::vector<Tally> run_j_ext_adjunction(const GeneratorConfig& cfg, std::size_t count) {
  Rng rng(cfg.seed);
  Tallies t;
  for (std::size_t k = 0; k < count; ++k) {
    const ContinuousChain c = generate_continuous_chain(rng, cfg);
    const GradedSystem s = generate_random_system(rng, cfg);
    t.guard("j-ext-exception", [&] {
      t.add(check_triangles_j_ext(c.x));
      t.add(check_triangles_j_ext(s));
      t["unit-space-iso"].record(
          space_iso_check(unit_space(c.x), c.x, ext_object(j_object(c.x))));
      t["j-ext-unit-naturality"].record(check_naturality_unit_space(c.f, c.x, c.y));
      t["j-ext-unit-naturality"].record(check_naturality_unit_space(c.g, c.y, c.z));
      const GradedSystem jx = j_object(c.x), jy = j_object(c.y);
      t["j-ext-counit-naturality"].record(
          check_naturality_counit(j_morphism(c.f, c.x, c.y), jx, jy));
      t["j-ext-counit-naturality"].record(
          check_naturality_counit(counit(s), j_object(ext_object(s)), s));
    });
  }
  return t.take();
}

std::vector<Tally> run_spatial_equivalence(const GeneratorConfig& cfg, std::size_t spatial,
                                           std::size_t nonspatial) {
  Rng rng(cfg.seed);
  Tallies t;
  Tally& iso = t["counit-iso-on-spatial"];
  Tally& not_iso = t["counit-not-iso-on-nonspatial"];
  Tally& agree = t["spatial-equivalence"];
  auto record = [&](const GradedSystem& s) {
    const Equivalence e = check_spatial_equivalence(s);
    agree.record(e.consistent(), [&] {
      return Witness{"system with " + std::to_string(s.points().size()) + " points",
                     e.spatial ? "counit iso" : "counit not iso",
                     e.counit_iso ? "counit iso" : "counit not iso"};
    });
    return e;
  };
  std::size_t seen = 0;
  for (std::size_t attempts = 0; seen < spatial && attempts < 100 * (spatial + 1); ++attempts) {
    const GradedSystem s = generate_random_system(rng, cfg);
    const Equivalence e = record(s);
    if (!e.spatial) continue;
    ++seen;
    iso.record(e.counit_iso, [] { return Witness{"spatial system", "counit iso", "not iso"}; });
  }
  for (std::size_t k = 0; k < nonspatial; ++k) {
    const Equivalence e = record(generate_nonspatial_system(rng, cfg));
    not_iso.record(!e.spatial && !e.counit_iso, [&] {
      return Witness{"duplicate-column system", "not spatial, counit not iso",
                     std::string(e.spatial ? "spatial" : "not spatial") + ", " +
                         (e.counit_iso ? "counit iso" : "counit not iso")};
    });
  }
  return t.take();
}

std::vector<Tally> run_fm_s_adjunction(const GeneratorConfig& cfg, std::size_t count) {
  Rng rng(cfg.seed);
  Tallies t;
  for (std::size_t k = 0; k < count; ++k) {
    const ContinuousChain c = generate_continuous_chain(rng, cfg);
    t.guard("fm-s-exception", [&] {
      const GradedSystem jx = j_object(c.x), jy = j_object(c.y);
      const GradeSet grades = GradeSet::occurring_in(jx).merged(GradeSet::occurring_in(jy));
      const GradedFrame a = jx.frame();
      const GradedFrame b = jy.frame();
      const GradedSystem sa = s_object(a, grades);
      const GradedSystem sb = s_object(b, grades);
      t["s-object-valid"].record(check_system(sa));
      t["s-object-valid"].record(check_system(sb));

      const SystemMorphism jf = j_morphism(c.f, c.x, c.y);
      const SystemMorphism sf = s_morphism(jf.frames, grades);
      t["s-morphism-valid"].record(check_system_morphism(sf, sa, sb));

      const SystemMorphism eta = unit_system(jx, grades);
      Tally& point_hom = t["point-of-system-is-hom"];
      for (std::size_t x = 0; x < jx.points().size(); ++x) {
        std::vector<Grade> row;
        for (std::size_t e = 0; e < a.size(); ++e) row.push_back(jx.sat(x, e));
        point_hom.record(check_point_hom(PointHom{a, row}, grades));
      }
      t["s-morphism-valid"].record(check_system_morphism(eta, jx, s_object(a, grades)));

      t.add(check_triangles_fm_s(jx, grades));
      t.add(check_triangles_fm_s(b, grades));
      t["fm-s-unit-naturality"].record(check_naturality_unit_system(jf, jx, jy, grades));
      t["fm-s-counit-naturality"].record(check_naturality_frame_counit(jf.frames, grades));
    });
  }
  return t.take();
}

std::vector<Tally> run_composite_adjunction(const GeneratorConfig& cfg, std::size_t count) {
  Rng rng(cfg.seed);
  Tallies t;
  for (std::size_t k = 0; k < count; ++k) {
    const GradedSpace space = generate_random_space(rng, cfg);
    t.guard("composite-exception", [&] {
      t.add(check_triangles_composite(space, GradeSet::occurring_in(space)));
    });
  }
  return t.take();
}

std::vector<Tally> run_sequent_laws(const GeneratorConfig& cfg, std::size_t count,
                                    std::size_t pool_size) {
  Rng rng(cfg.seed);
  std::vector<Tally> all;
  for (std::size_t k = 0; k < count; ++k) {
    const Interpretation interp = generate_random_interpretation(rng, cfg);
    const auto pool = generate_random_pool(rng, interp.signature(), pool_size);
    SequentSuiteOptions opts;
    opts.variables = {1, 2};
    merge_tallies(all, sequent_properties(interp, pool, opts));
  }
  return all;
}

}  // namespace graded_topos
