#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graded_topos/frame.hpp"
#include "graded_topos/grade.hpp"
#include "graded_topos/space.hpp"
#include "graded_topos/system.hpp"
#include "graded_topos/verdict.hpp"

namespace graded_topos {

/// A finite chain of grades standing in for [0,1] as the codomain of points of
/// a frame. Always contains 0 and 1; kept sorted ascending.
class GradeSet {
 public:
  /// 0 and 1 are added if absent; duplicates are dropped.
  explicit GradeSet(std::vector<Grade> grades = {});

  /// Comma separated grades, e.g. "0,1/2,0.25,1".
  static GradeSet parse(std::string_view text);

  /// Grades of the relation table, plus 0 and 1.
  static GradeSet occurring_in(const GradedFrame& frame);
  /// Grades of the relation and sat tables, plus 0 and 1.
  static GradeSet occurring_in(const GradedSystem& system);
  /// Grades of every open, plus 0 and 1.
  static GradeSet occurring_in(const GradedSpace& space);

  std::span<const Grade> grades() const noexcept { return grades_; }
  std::size_t size() const noexcept { return grades_.size(); }
  bool contains(Grade g) const;
  std::optional<std::size_t> index_of(Grade g) const;

  GradeSet merged(const GradeSet& other) const;
  std::string str() const;

 private:
  std::vector<Grade> grades_;
};

/// The chain L as a graded frame: meet = min, join = max (empty join 0),
/// top = 1 and R = Goedel arrow. Carrier elements are named by "p/q".
GradedFrame chain_frame(const GradeSet& grades);

/// A candidate point of a frame: a grade for every carrier element.
struct PointHom {
  GradedFrame frame;
  std::vector<Grade> values;
};

/// Whether `v` is a frame homomorphism into chain_frame(grades). Values outside
/// the grade set fail with clause "grade set".
Verdict check_point_hom(const PointHom& v, const GradeSet& grades,
                        const CheckOptions& opts = CheckOptions::from_environment());

/// Every homomorphism frame -> chain_frame(grades), in lexicographic order of
/// grade indices. Throws Overflow past `max_points` results.
std::vector<PointHom> enumerate_point_homs(
    const GradedFrame& frame, const GradeSet& grades,
    std::size_t max_points = 1u << 16,
    const CheckOptions& opts = CheckOptions::from_environment());

// Ext: systems -> spaces.
GradedSpace ext_object(const GradedSystem& s);
PointMap ext_morphism(const SystemMorphism& m);

// J: spaces -> systems.
GradedSystem j_object(const GradedSpace& space);
/// Throws NotContinuous.
SystemMorphism j_morphism(const PointMap& f, const GradedSpace& source,
                          const GradedSpace& target);

// fm: systems -> frames (contravariant on morphisms).
inline GradedFrame fm_object(const GradedSystem& s) { return s.frame(); }
inline FrameHom fm_morphism(const SystemMorphism& m) { return m.frames; }

// S: frames -> systems, relative to a finite grade set.
/// Points are the enumerated homs, named "v(<g0>|<g1>|...)"; sat(v,a) = v(a).
/// Throws NoPoints when there are none.
GradedSystem s_object(const GradedFrame& frame, const GradeSet& grades);
/// For h: B -> A, the morphism S(A) -> S(B) given by (v |-> v . h, h).
SystemMorphism s_morphism(const FrameHom& h, const GradeSet& grades);

/// Point of `s` whose sat row equals `values`.
std::optional<std::size_t> find_point(const GradedSystem& s,
                                      std::span<const Grade> values);

// Units and counits.
/// J(Ext(s)) -> s: (identity, a |-> ext(a)).
SystemMorphism counit(const GradedSystem& s);
/// space -> Ext(J(space)): identity on points.
PointMap unit_space(const GradedSpace& space);
/// s -> S(fm(s)): (x |-> p_x, identity). Throws GradeSetTooSmall.
SystemMorphism unit_system(const GradedSystem& s, const GradeSet& grades);
/// Counit of fm -| S at a frame, as a frame map A -> fm(S(A)) = A.
FrameHom frame_counit(const GradedFrame& frame);

/// One law instance and its outcome.
struct LawCheck {
  std::string law;
  Verdict verdict;
};

/// Triangle identities of J -| Ext at a space (and at J of it) or at a
/// system (and at Ext of it).
std::vector<LawCheck> check_triangles_j_ext(const GradedSpace& space);
std::vector<LawCheck> check_triangles_j_ext(const GradedSystem& s);

/// Triangle identities of fm -| S at a system (and at its frame) or at a frame
/// (and at S of it), relative to `grades`.
std::vector<LawCheck> check_triangles_fm_s(const GradedSystem& s,
                                           const GradeSet& grades);
std::vector<LawCheck> check_triangles_fm_s(const GradedFrame& frame,
                                           const GradeSet& grades);

/// Triangle identities of the composite adjunction fm.J -| Ext.S at a space
/// and at its frame.
std::vector<LawCheck> check_triangles_composite(const GradedSpace& space,
                                                const GradeSet& grades);

// Naturality squares.
Verdict check_naturality_unit_space(const PointMap& f, const GradedSpace& source,
                                    const GradedSpace& target);
Verdict check_naturality_counit(const SystemMorphism& m,
                                const GradedSystem& source,
                                const GradedSystem& target);
Verdict check_naturality_unit_system(const SystemMorphism& m,
                                     const GradedSystem& source,
                                     const GradedSystem& target,
                                     const GradeSet& grades);
Verdict check_naturality_frame_counit(const FrameHom& h, const GradeSet& grades);

struct Equivalence {
  bool spatial = false;
  bool counit_iso = false;
  bool consistent() const noexcept { return spatial == counit_iso; }
};

/// Compares the spatiality test against the counit isomorphism test.
Equivalence check_spatial_equivalence(const GradedSystem& s);

}  // namespace graded_topos
