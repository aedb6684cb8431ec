#include "graded_topos/system.hpp"

#include <algorithm>

#include "graded_topos/errors.hpp"
#include "graded_topos/space.hpp"

namespace graded_topos {

GradedSystem::GradedSystem(Universe points, GradedFrame frame,
                           std::vector<Grade> sat)
    : points_(std::move(points)), frame_(std::move(frame)), sat_(std::move(sat)) {
  if (sat_.size() != points_.size() * frame_.size()) {
    throw SchemaError("system sat table is not total");
  }
}

FuzzySet GradedSystem::extent(std::size_t a) const {
  std::vector<Grade> values(points_.size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = sat(x, a);
  return FuzzySet(points_, std::move(values));
}

namespace {

std::string pair_name(const GradedSystem& s, std::size_t x, std::size_t a) {
  return "(" + s.points()[x] + "," + s.frame().name(a) + ")";
}

}  // namespace

Verdict check_system(const GradedSystem& s, const CheckOptions& opts) {
  const GradedFrame& fr = s.frame();
  const std::size_t nx = s.points().size();
  const std::size_t na = fr.size();

  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < na; ++b) {
        const Grade lhs = meet(s.sat(x, a), fr.relation(a, b));
        if (lhs > s.sat(x, b)) {
          return Verdict::fail(
              "clause 1",
              {"x=" + s.points()[x] + ", a=" + fr.name(a) + ", b=" + fr.name(b),
               "<= " + s.sat(x, b).str(), lhs.str()});
        }
      }
    }
  }

  for (std::size_t x = 0; x < nx; ++x) {
    if (!s.sat(x, fr.top()).is_one()) {
      return Verdict::fail("clause 2", {"S={} at " + pair_name(s, x, fr.top()),
                                        "1/1", s.sat(x, fr.top()).str()});
    }
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = a + 1; b < na; ++b) {
        const Grade lhs = s.sat(x, fr.meet(a, b));
        const Grade rhs = meet(s.sat(x, a), s.sat(x, b));
        if (lhs != rhs) {
          return Verdict::fail("clause 2",
                               {"S={" + fr.name(a) + "," + fr.name(b) +
                                    "} at " + s.points()[x],
                                rhs.str(), lhs.str()});
        }
      }
    }
  }

  Verdict failure;
  const Regime regime =
      for_each_subset(na, opts, [&](std::span<const std::size_t> subset) {
        const std::size_t j = fr.join(subset);
        for (std::size_t x = 0; x < nx; ++x) {
          Grade rhs = Grade::zero();
          for (std::size_t a : subset) rhs = join(rhs, s.sat(x, a));
          if (s.sat(x, j) != rhs) {
            std::string names;
            for (std::size_t a : subset) {
              if (!names.empty()) names += ",";
              names += fr.name(a);
            }
            failure = Verdict::fail(
                "clause 3", {"S={" + names + "} at " + s.points()[x], rhs.str(),
                             s.sat(x, j).str()});
            return false;
          }
        }
        return true;
      });
  if (!failure) {
    failure.regime = regime;
    return failure;
  }
  return Verdict::pass(regime);
}

GradedSystem validate_system(const GradedSystem& s, const CheckOptions& opts) {
  if (auto v = check_system(s, opts); !v) throw ViolationError(std::move(v));
  return s;
}

SystemMorphism SystemMorphism::identity(const GradedSystem& s) {
  return {PointMap::identity(s.points()), FrameHom::identity(s.frame())};
}

Verdict check_system_morphism(const SystemMorphism& m,
                              const GradedSystem& source,
                              const GradedSystem& target,
                              const CheckOptions& opts) {
  if (!(m.points.source() == source.points()) ||
      !(m.points.target() == target.points())) {
    return Verdict::fail("point map", {"universes", "source -> target points",
                                       "mismatched universes"});
  }
  if (!(m.frames.source() == target.frame()) ||
      !(m.frames.target() == source.frame())) {
    return Verdict::fail("frame map", {"frames", "target frame -> source frame",
                                       "mismatched frames"});
  }
  auto hom = check_frame_hom(m.frames, opts);
  if (!hom) {
    hom.clause = "frame hom " + hom.clause;
    return hom;
  }
  for (std::size_t x = 0; x < source.points().size(); ++x) {
    for (std::size_t b = 0; b < target.frame().size(); ++b) {
      const Grade lhs = source.sat(x, m.frames(b));
      const Grade rhs = target.sat(m.points(x), b);
      if (lhs != rhs) {
        return Verdict::fail("continuity",
                             {"x=" + source.points()[x] + ", b=" +
                                  target.frame().name(b),
                              rhs.str(), lhs.str()},
                             hom.regime);
      }
    }
  }
  return Verdict::pass(hom.regime);
}

SystemMorphism compose(const SystemMorphism& f, const SystemMorphism& g) {
  if (!(f.points.target() == g.points.source())) {
    throw MixedStructure("point maps do not compose");
  }
  if (!(g.frames.target() == f.frames.source())) {
    throw MixedStructure("frame homomorphisms do not compose");
  }
  return {compose(f.points, g.points), compose(g.frames, f.frames)};
}

Verdict check_spatial(const GradedSystem& s) {
  const std::size_t na = s.frame().size();
  const std::size_t nx = s.points().size();
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = a + 1; b < na; ++b) {
      bool separated = false;
      for (std::size_t x = 0; x < nx && !separated; ++x) {
        separated = s.sat(x, a) != s.sat(x, b);
      }
      if (!separated) {
        return Verdict::fail("spatial",
                             {"(" + s.frame().name(a) + "," + s.frame().name(b) + ")",
                              "a point separating them", "identical sat columns"});
      }
    }
  }
  return Verdict::pass();
}

Verdict system_iso_check(const SystemMorphism& m, const GradedSystem& source,
                         const GradedSystem& target, const CheckOptions& opts) {
  if (auto v = check_system_morphism(m, source, target, opts); !v) return v;
  if (!m.points.is_injective() || !m.points.is_surjective()) {
    return Verdict::fail("point bijection",
                         {"point map", "bijective", "not bijective"});
  }
  if (!m.frames.is_bijective()) {
    return Verdict::fail("frame bijection",
                         {"frame map", "bijective", "not bijective"});
  }
  const SystemMorphism back{inverse(m.points), inverse(m.frames)};
  if (auto v = check_system_morphism(back, target, source, opts); !v) {
    v.clause = "inverse " + v.clause;
    return v;
  }
  return Verdict::pass();
}

}  // namespace graded_topos
