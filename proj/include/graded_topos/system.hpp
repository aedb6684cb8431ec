#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graded_topos/frame.hpp"
#include "graded_topos/fuzzy_set.hpp"
#include "graded_topos/grade.hpp"
#include "graded_topos/verdict.hpp"

namespace graded_topos {

/// Points, a graded frame, and the satisfaction grades gr(x |= a) stored
/// row-major as points x carrier.
class GradedSystem {
 public:
  /// Throws SchemaError if the sat table is not total.
  GradedSystem(Universe points, GradedFrame frame, std::vector<Grade> sat);

  const Universe& points() const noexcept { return points_; }
  const GradedFrame& frame() const noexcept { return frame_; }
  std::span<const Grade> sat_table() const noexcept { return sat_; }

  Grade sat(std::size_t x, std::size_t a) const {
    return sat_[x * frame_.size() + a];
  }
  /// The extent of `a`: x |-> gr(x |= a).
  FuzzySet extent(std::size_t a) const;

  friend bool operator==(const GradedSystem&, const GradedSystem&) = default;

 private:
  Universe points_;
  GradedFrame frame_;
  std::vector<Grade> sat_;
};

/// Checks clause 1 (sat(x,a) /\ R(a,b) <= sat(x,b)), clause 2 (finite meets:
/// the empty meet and all pairs, which covers every finite subset once the
/// meet is a semilattice) and clause 3 (joins, in the frame subset regime).
/// The frame itself is assumed valid.
Verdict check_system(const GradedSystem& s,
                     const CheckOptions& opts = CheckOptions::from_environment());

GradedSystem validate_system(const GradedSystem& s,
                             const CheckOptions& opts = CheckOptions::from_environment());

/// A pair (f1, f2): f1 maps points forward, f2 maps the target frame back
/// into the source frame.
struct SystemMorphism {
  PointMap points;
  FrameHom frames;

  static SystemMorphism identity(const GradedSystem& s);

  friend bool operator==(const SystemMorphism&, const SystemMorphism&) = default;
};

/// Checks the universes and frames line up, f2 is a frame homomorphism, and
/// gr(x |= f2(b)) == gr(f1(x) |= b) for every x, b ("continuity").
Verdict check_system_morphism(
    const SystemMorphism& m, const GradedSystem& source,
    const GradedSystem& target,
    const CheckOptions& opts = CheckOptions::from_environment());

/// g after f: (g1 . f1, f2 . g2). Throws MixedStructure when not composable.
SystemMorphism compose(const SystemMorphism& f, const SystemMorphism& g);

/// Spatial iff distinct carrier elements have distinct sat columns. The
/// witness names an indistinguishable pair.
Verdict check_spatial(const GradedSystem& s);

/// Isomorphism: both components bijective and both directions valid morphisms.
Verdict system_iso_check(
    const SystemMorphism& m, const GradedSystem& source,
    const GradedSystem& target,
    const CheckOptions& opts = CheckOptions::from_environment());

}  // namespace graded_topos
