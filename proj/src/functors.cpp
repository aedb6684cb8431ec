#include "graded_topos/functors.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "graded_topos/errors.hpp"

namespace graded_topos {

// ---------------------------------------------------------------------------
// Grade sets and the grade chain

GradeSet::GradeSet(std::vector<Grade> grades) : grades_(std::move(grades)) {
  grades_.push_back(Grade::zero());
  grades_.push_back(Grade::one());
  std::sort(grades_.begin(), grades_.end());
  grades_.erase(std::unique(grades_.begin(), grades_.end()), grades_.end());
}

GradeSet GradeSet::parse(std::string_view text) {
  std::vector<Grade> grades;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) grades.push_back(Grade::parse(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return GradeSet(std::move(grades));
}

GradeSet GradeSet::occurring_in(const GradedFrame& frame) {
  const auto r = frame.relation_table();
  return GradeSet(std::vector<Grade>(r.begin(), r.end()));
}

GradeSet GradeSet::occurring_in(const GradedSystem& system) {
  std::vector<Grade> grades;
  const auto r = system.frame().relation_table();
  const auto s = system.sat_table();
  grades.insert(grades.end(), r.begin(), r.end());
  grades.insert(grades.end(), s.begin(), s.end());
  return GradeSet(std::move(grades));
}

GradeSet GradeSet::occurring_in(const GradedSpace& space) {
  std::vector<Grade> grades;
  for (const auto& t : space.opens()) {
    grades.insert(grades.end(), t.membership().begin(), t.membership().end());
  }
  return GradeSet(std::move(grades));
}

bool GradeSet::contains(Grade g) const { return index_of(g).has_value(); }

std::optional<std::size_t> GradeSet::index_of(Grade g) const {
  const auto it = std::lower_bound(grades_.begin(), grades_.end(), g);
  if (it == grades_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - grades_.begin());
}

GradeSet GradeSet::merged(const GradeSet& other) const {
  std::vector<Grade> all = grades_;
  all.insert(all.end(), other.grades_.begin(), other.grades_.end());
  return GradeSet(std::move(all));
}

std::string GradeSet::str() const {
  std::string out;
  for (const Grade& g : grades_) {
    if (!out.empty()) out += ",";
    out += g.str();
  }
  return out;
}

GradedFrame chain_frame(const GradeSet& grades) {
  const auto gs = grades.grades();
  const std::size_t n = gs.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (const Grade& g : gs) names.push_back(g.str());

  std::vector<std::size_t> meet_table(n * n);
  std::vector<Grade> relation(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      meet_table[a * n + b] = std::min(a, b);
      relation[a * n + b] = godel_arrow(gs[a], gs[b]);
    }
  }
  // Sorted ascending with 0 first, so the join is the largest index.
  JoinFn join_fn = [](std::span<const std::size_t> subset) {
    std::size_t j = 0;
    for (std::size_t i : subset) j = std::max(j, i);
    return j;
  };
  return GradedFrame(Universe(std::move(names)), n - 1, std::move(meet_table),
                     std::move(join_fn), std::move(relation));
}

namespace {

std::optional<FrameHom> as_chain_hom(const PointHom& v, const GradeSet& grades,
                                     const GradedFrame& chain) {
  std::vector<std::size_t> map(v.values.size());
  for (std::size_t a = 0; a < map.size(); ++a) {
    const auto i = grades.index_of(v.values[a]);
    if (!i) return std::nullopt;
    map[a] = *i;
  }
  return FrameHom(v.frame, chain, std::move(map));
}

std::string point_name(std::span<const Grade> values) {
  std::string out = "v(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += "|";
    out += values[i].str();
  }
  return out + ")";
}

}  // namespace

Verdict check_point_hom(const PointHom& v, const GradeSet& grades,
                        const CheckOptions& opts) {
  if (v.values.size() != v.frame.size()) {
    throw SchemaError("point is not total on the frame carrier");
  }
  const GradedFrame chain = chain_frame(grades);
  const auto hom = as_chain_hom(v, grades, chain);
  if (!hom) {
    return Verdict::fail("grade set", {point_name(v.values), "values in " + grades.str(),
                                       "value outside the grade set"});
  }
  return check_frame_hom(*hom, opts);
}

std::vector<PointHom> enumerate_point_homs(const GradedFrame& frame,
                                           const GradeSet& grades,
                                           std::size_t max_points,
                                           const CheckOptions& opts) {
  const std::size_t n = frame.size();
  const auto gs = grades.grades();
  const GradedFrame chain = chain_frame(grades);
  std::vector<PointHom> result;

  const std::size_t top = frame.top();
  const std::size_t bottom = frame.bottom();
  if (top == bottom) return result;  // would need v(top) = 1 and v(bottom) = 0

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(n, unset);
  level[top] = gs.size() - 1;
  level[bottom] = 0;

  // Necessary conditions on the assigned part: meets and the relation bound.
  auto consistent_at = [&](std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (level[i] == unset) continue;
      if (frame.relation(k, i) > godel_arrow(gs[level[k]], gs[level[i]]) ||
          frame.relation(i, k) > godel_arrow(gs[level[i]], gs[level[k]])) {
        return false;
      }
      const std::size_t m = frame.meet(k, i);
      if (level[m] != unset && level[m] != std::min(level[k], level[i])) {
        return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (level[j] == unset || frame.meet(i, j) != k) continue;
        if (level[k] != std::min(level[i], level[j])) return false;
      }
    }
    return true;
  };
  if (!consistent_at(top) || !consistent_at(bottom)) return result;

  std::vector<std::size_t> order;
  for (std::size_t a = 0; a < n; ++a) {
    if (a != top && a != bottom) order.push_back(a);
  }

  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == order.size()) {
      FrameHom hom(frame, chain, level);
      if (check_frame_hom(hom, opts)) {
        if (result.size() == max_points) {
          throw Overflow("more than " + std::to_string(max_points) +
                         " points of the frame");
        }
        std::vector<Grade> values(n);
        for (std::size_t a = 0; a < n; ++a) values[a] = gs[level[a]];
        result.push_back(PointHom{frame, std::move(values)});
      }
      return;
    }
    const std::size_t a = order[depth];
    for (std::size_t g = 0; g < gs.size(); ++g) {
      level[a] = g;
      if (consistent_at(a)) descend(depth + 1);
    }
    level[a] = unset;
  };
  descend(0);
  return result;
}

// ---------------------------------------------------------------------------
// Functors

GradedSpace ext_object(const GradedSystem& s) {
  std::vector<FuzzySet> opens;
  opens.reserve(s.frame().size());
  for (std::size_t a = 0; a < s.frame().size(); ++a) opens.push_back(s.extent(a));
  return GradedSpace(s.points(), std::move(opens));
}

PointMap ext_morphism(const SystemMorphism& m) { return m.points; }

GradedSystem j_object(const GradedSpace& space) {
  const std::size_t nx = space.universe().size();
  const std::size_t na = space.size();
  std::vector<Grade> sat(nx * na);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t a = 0; a < na; ++a) sat[x * na + a] = space.open(a)(x);
  }
  return GradedSystem(space.universe(), frame_from_space(space), std::move(sat));
}

SystemMorphism j_morphism(const PointMap& f, const GradedSpace& source,
                          const GradedSpace& target) {
  if (auto v = check_continuous(f, source, target); !v) {
    throw NotContinuous(v.describe());
  }
  std::vector<std::size_t> map(target.size());
  for (std::size_t b = 0; b < target.size(); ++b) {
    map[b] = *source.index_of(preimage(f, target.open(b)));
  }
  return {f, FrameHom(frame_from_space(target), frame_from_space(source),
                      std::move(map))};
}

std::optional<std::size_t> find_point(const GradedSystem& s,
                                      std::span<const Grade> values) {
  const std::size_t na = s.frame().size();
  if (values.size() != na) return std::nullopt;
  const auto sat = s.sat_table();
  for (std::size_t x = 0; x < s.points().size(); ++x) {
    if (std::equal(values.begin(), values.end(), sat.begin() + x * na)) return x;
  }
  return std::nullopt;
}

GradedSystem s_object(const GradedFrame& frame, const GradeSet& grades) {
  const auto homs = enumerate_point_homs(frame, grades);
  if (homs.empty()) {
    throw NoPoints("frame has no homomorphism into the chain " + grades.str());
  }
  std::vector<std::string> names;
  std::vector<Grade> sat;
  names.reserve(homs.size());
  sat.reserve(homs.size() * frame.size());
  for (const auto& v : homs) {
    names.push_back(point_name(v.values));
    sat.insert(sat.end(), v.values.begin(), v.values.end());
  }
  return GradedSystem(Universe(std::move(names)), frame, std::move(sat));
}

SystemMorphism s_morphism(const FrameHom& h, const GradeSet& grades) {
  // h: B -> A.  S(A) -> S(B) sends v to v . h.
  const GradedSystem sa = s_object(h.target(), grades);
  const GradedSystem sb = s_object(h.source(), grades);
  const std::size_t nb = h.source().size();
  std::vector<std::size_t> image(sa.points().size());
  std::vector<Grade> composite(nb);
  for (std::size_t v = 0; v < image.size(); ++v) {
    for (std::size_t b = 0; b < nb; ++b) composite[b] = sa.sat(v, h(b));
    const auto w = find_point(sb, composite);
    if (!w) {
      throw Error("precomposition " + point_name(composite) +
                  " is not a point; the frame map is not a homomorphism");
    }
    image[v] = *w;
  }
  return {PointMap(sa.points(), sb.points(), std::move(image)), h};
}

// ---------------------------------------------------------------------------
// Units and counits

SystemMorphism counit(const GradedSystem& s) {
  const GradedSpace ext = ext_object(s);
  const GradedFrame opens_frame = frame_from_space(ext);
  std::vector<std::size_t> map(s.frame().size());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = *ext.index_of(s.extent(a));
  return {PointMap::identity(s.points()),
          FrameHom(s.frame(), opens_frame, std::move(map))};
}

PointMap unit_space(const GradedSpace& space) {
  return PointMap::identity(space.universe());
}

SystemMorphism unit_system(const GradedSystem& s, const GradeSet& grades) {
  for (const Grade& g : s.sat_table()) {
    if (!grades.contains(g)) {
      throw GradeSetTooSmall("sat grade " + g.str() + " is not in " + grades.str());
    }
  }
  const GradedSystem target = s_object(s.frame(), grades);
  const std::size_t na = s.frame().size();
  std::vector<std::size_t> image(s.points().size());
  for (std::size_t x = 0; x < image.size(); ++x) {
    const auto row = s.sat_table().subspan(x * na, na);
    const auto p = find_point(target, row);
    if (!p) {
      throw Error("p_" + s.points()[x] + " is not a point of the frame");
    }
    image[x] = *p;
  }
  return {PointMap(s.points(), target.points(), std::move(image)),
          FrameHom::identity(s.frame())};
}

FrameHom frame_counit(const GradedFrame& frame) {
  return FrameHom::identity(frame);
}

// ---------------------------------------------------------------------------
// Triangle identities

namespace {

Verdict expect_identity(const SystemMorphism& composite, const GradedSystem& at) {
  if (composite == SystemMorphism::identity(at)) return Verdict::pass();
  return Verdict::fail("triangle", {"composite", "identity", "not identity"});
}

Verdict expect_identity(const PointMap& composite, const GradedSpace& at) {
  if (composite == PointMap::identity(at.universe())) return Verdict::pass();
  return Verdict::fail("triangle", {"composite", "identity", "not identity"});
}

Verdict expect_identity(const FrameHom& composite, const GradedFrame& at) {
  if (composite == FrameHom::identity(at)) return Verdict::pass();
  return Verdict::fail("triangle", {"composite", "identity", "not identity"});
}

// xi_{J X} . J(eta_X) = id_{J X}
LawCheck triangle_at_space(const GradedSpace& space) {
  const GradedSpace e = ext_object(j_object(space));
  const SystemMorphism j_eta = j_morphism(unit_space(space), space, e);
  const SystemMorphism xi = counit(j_object(space));
  return {"J-Ext triangle at J(X)", expect_identity(compose(j_eta, xi), j_object(space))};
}

// Ext(xi_S) . eta_{Ext S} = id_{Ext S}
LawCheck triangle_at_system(const GradedSystem& s) {
  const GradedSpace ext = ext_object(s);
  const PointMap eta = unit_space(ext);
  const PointMap ext_xi = ext_morphism(counit(s));
  Verdict v = check_continuous(compose(eta, ext_xi), ext, ext);
  if (v) v = expect_identity(compose(eta, ext_xi), ext);
  return {"J-Ext triangle at Ext(S)", v};
}

// In Frm^op: eps_{fm S} . fm(eta_S) = id; as frame maps fm(eta_S) after eps.
LawCheck triangle_fm(const GradedSystem& s, const GradeSet& grades) {
  const SystemMorphism eta = unit_system(s, grades);
  const FrameHom composite = compose(frame_counit(s.frame()), fm_morphism(eta));
  return {"fm-S triangle at fm(S)", expect_identity(composite, s.frame())};
}

// S(eps_A) . eta_{S A} = id_{S A}
LawCheck triangle_s(const GradedFrame& frame, const GradeSet& grades) {
  const GradedSystem sa = s_object(frame, grades);
  const SystemMorphism eta = unit_system(sa, grades);
  const SystemMorphism s_eps = s_morphism(frame_counit(frame), grades);
  return {"fm-S triangle at S(A)", expect_identity(compose(eta, s_eps), sa)};
}

}  // namespace

std::vector<LawCheck> check_triangles_j_ext(const GradedSpace& space) {
  return {triangle_at_space(space), triangle_at_system(j_object(space))};
}

std::vector<LawCheck> check_triangles_j_ext(const GradedSystem& s) {
  return {triangle_at_space(ext_object(s)), triangle_at_system(s)};
}

std::vector<LawCheck> check_triangles_fm_s(const GradedSystem& s,
                                           const GradeSet& grades) {
  return {triangle_fm(s, grades), triangle_s(s.frame(), grades)};
}

std::vector<LawCheck> check_triangles_fm_s(const GradedFrame& frame,
                                           const GradeSet& grades) {
  return {triangle_fm(s_object(frame, grades), grades), triangle_s(frame, grades)};
}

namespace {

// Unit of fm.J -| Ext.S at a space: x |-> p_x.
PointMap composite_unit(const GradedSpace& space, const GradeSet& grades) {
  return compose(unit_space(space),
                 ext_morphism(unit_system(j_object(space), grades)));
}

// Counit of fm.J -| Ext.S at a frame A, as a frame map A -> fm(J(Ext(S A))).
FrameHom composite_counit(const GradedFrame& frame, const GradeSet& grades) {
  return compose(frame_counit(frame), fm_morphism(counit(s_object(frame, grades))));
}

}  // namespace

std::vector<LawCheck> check_triangles_composite(const GradedSpace& space,
                                                const GradeSet& grades) {
  std::vector<LawCheck> out;

  // eps_{F X} . F(H_X) = id_{F X}, read as frame maps.
  {
    const GradedFrame a = frame_from_space(space);
    const GradedSpace gfa = ext_object(s_object(a, grades));
    const PointMap h = composite_unit(space, grades);
    const FrameHom fh = fm_morphism(j_morphism(h, space, gfa));
    out.push_back({"composite triangle at F(X)",
                   expect_identity(compose(composite_counit(a, grades), fh), a)});
  }

  // G(eps_A) . H_{G A} = id_{G A} at A = F(X).
  {
    const GradedFrame a = frame_from_space(space);
    const GradedSpace ga = ext_object(s_object(a, grades));
    const PointMap h = composite_unit(ga, grades);
    const PointMap g_eps =
        ext_morphism(s_morphism(composite_counit(a, grades), grades));
    out.push_back({"composite triangle at G(A)",
                   expect_identity(compose(h, g_eps), ga)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Naturality

Verdict check_naturality_unit_space(const PointMap& f, const GradedSpace& source,
                                    const GradedSpace& target) {
  const PointMap ext_j_f = ext_morphism(j_morphism(f, source, target));
  const PointMap lhs = compose(unit_space(source), ext_j_f);
  const PointMap rhs = compose(f, unit_space(target));
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail("unit naturality", {"square", "commutes", "differs"});
}

Verdict check_naturality_counit(const SystemMorphism& m,
                                const GradedSystem& source,
                                const GradedSystem& target) {
  const SystemMorphism j_ext_m =
      j_morphism(ext_morphism(m), ext_object(source), ext_object(target));
  const SystemMorphism lhs = compose(j_ext_m, counit(target));
  const SystemMorphism rhs = compose(counit(source), m);
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail("counit naturality", {"square", "commutes", "differs"});
}

Verdict check_naturality_unit_system(const SystemMorphism& m,
                                     const GradedSystem& source,
                                     const GradedSystem& target,
                                     const GradeSet& grades) {
  const SystemMorphism lhs =
      compose(unit_system(source, grades), s_morphism(fm_morphism(m), grades));
  const SystemMorphism rhs = compose(m, unit_system(target, grades));
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail("unit naturality", {"square", "commutes", "differs"});
}

Verdict check_naturality_frame_counit(const FrameHom& h, const GradeSet& grades) {
  // h: B -> A as a frame map. eps_A after h equals fm(S(h)) after eps_B.
  const FrameHom lhs = compose(h, frame_counit(h.target()));
  const FrameHom rhs =
      compose(frame_counit(h.source()), fm_morphism(s_morphism(h, grades)));
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail("counit naturality", {"square", "commutes", "differs"});
}

Equivalence check_spatial_equivalence(const GradedSystem& s) {
  Equivalence e;
  e.spatial = check_spatial(s).ok;
  e.counit_iso = system_iso_check(counit(s), j_object(ext_object(s)), s).ok;
  return e;
}

}  // namespace graded_topos
