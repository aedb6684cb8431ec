#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "graded_topos/fuzzy_set.hpp"
#include "graded_topos/verdict.hpp"

namespace graded_topos {

/// A universe together with a family of fuzzy open sets, kept deduplicated and
/// in canonical order. Construction only normalizes; use check_space or
/// validate_space to test the topology clauses.
class GradedSpace {
 public:
  /// Throws MixedUniverse if some open is over another universe.
  GradedSpace(Universe universe, std::vector<FuzzySet> opens);

  const Universe& universe() const noexcept { return universe_; }
  std::span<const FuzzySet> opens() const noexcept { return opens_; }
  std::size_t size() const noexcept { return opens_.size(); }
  const FuzzySet& open(std::size_t i) const { return opens_[i]; }

  /// Position of `t` among the opens, if present.
  std::optional<std::size_t> index_of(const FuzzySet& t) const;
  bool contains(const FuzzySet& t) const { return index_of(t).has_value(); }

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  Universe universe_;
  std::vector<FuzzySet> opens_;
};

/// Checks, in order: clause 1 (empty and full set present), clause 2 (closed
/// under unions) and clause 3 (closed under binary intersections). Closure
/// under pairwise unions implies closure under every finite union.
Verdict check_space(const GradedSpace& space);
Verdict check_space(const Universe& universe, std::span<const FuzzySet> opens);

/// Returns the space or throws ViolationError.
GradedSpace validate_space(const Universe& universe,
                           std::span<const FuzzySet> opens);

/// Smallest fuzzy topology containing `generators`. Throws Overflow once the
/// closure exceeds `max_opens`.
GradedSpace generate_topology(const Universe& universe,
                              std::span<const FuzzySet> generators,
                              std::size_t max_opens = 4096);

/// True iff the preimage of every target open is a source open; the witness
/// names the first offending target open. Throws MixedUniverse.
Verdict check_continuous(const PointMap& f, const GradedSpace& source,
                         const GradedSpace& target);

/// g after f for continuous f: X -> Y and g: Y -> Z. Throws NotContinuous if
/// either map (or, impossibly, the composite) fails continuity.
PointMap compose_continuous(const PointMap& f, const PointMap& g,
                            const GradedSpace& x, const GradedSpace& y,
                            const GradedSpace& z);

/// Homeomorphism test: f bijective on points, continuous both ways, and the
/// preimage map a bijection between the open families.
Verdict space_iso_check(const PointMap& f, const GradedSpace& source,
                        const GradedSpace& target);

/// Inverse of a bijective point map. Throws SchemaError otherwise.
PointMap inverse(const PointMap& f);

}  // namespace graded_topos
