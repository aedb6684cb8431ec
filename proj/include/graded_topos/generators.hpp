#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graded_topos/frame.hpp"
#include "graded_topos/functors.hpp"
#include "graded_topos/logic.hpp"
#include "graded_topos/space.hpp"
#include "graded_topos/system.hpp"

namespace graded_topos {

using Rng = std::mt19937_64;

struct GeneratorConfig {
  std::uint64_t seed = 1;
  /// Points per space or system, and domain size for interpretations.
  std::size_t max_points = 4;
  /// Fuzzy sets fed to the topology closure.
  std::size_t max_generators = 3;
  /// Grades drawn for memberships, sat values and predicate tables.
  GradeSet grade_pool = GradeSet::parse("0,1/4,1/2,3/4,1");
  /// Largest frame carrier (number of opens) a generator will return.
  std::size_t max_carrier = 16;

  /// Throws SchemaError on zero bounds.
  void validate() const;
};

// Every generator is a pure function of the engine state. The cfg-only
// overloads seed a fresh engine from cfg.seed.

std::size_t uniform(Rng& rng, std::size_t bound);
Grade random_grade(Rng& rng, const GradeSet& pool);
FuzzySet random_fuzzy_set(Rng& rng, const Universe& u, const GradeSet& pool);
PointMap random_point_map(Rng& rng, const Universe& source, const Universe& target);

/// Topology generated by random fuzzy sets, dropping generators until the
/// closure fits within max_carrier opens.
GradedSpace generate_random_space(Rng& rng, const GeneratorConfig& cfg);
GradedSpace generate_random_space(const GeneratorConfig& cfg);

/// J of a random space, pulled back half the time along a random map from a
/// fresh point set; the pullback keeps the axioms and may identify columns.
GradedSystem generate_random_system(Rng& rng, const GeneratorConfig& cfg);
GradedSystem generate_random_system(const GeneratorConfig& cfg);

/// A valid system with two carrier elements sharing a sat column.
GradedSystem generate_nonspatial_system(Rng& rng, const GeneratorConfig& cfg);

/// X -> Y -> Z with both maps continuous: each space is generated from the
/// preimages of the next one's opens plus random extras.
struct ContinuousChain {
  GradedSpace x, y, z;
  PointMap f, g;
};
ContinuousChain generate_continuous_chain(Rng& rng, const GeneratorConfig& cfg);

/// Domain of at most max_points elements, one or two predicates of arity one
/// or two, at most one unary function, constants c1 and possibly c2.
Interpretation generate_random_interpretation(Rng& rng, const GeneratorConfig& cfg);
Interpretation generate_random_interpretation(const GeneratorConfig& cfg);

/// Formulas of depth at most `depth` over the signature and variables x1, x2.
Formula generate_random_formula(Rng& rng, const Signature& sig, std::size_t depth);
std::vector<Formula> generate_random_pool(Rng& rng, const Signature& sig,
                                          std::size_t size, std::size_t depth = 3);

// Deliberately invalid structures for checker self-tests. Each one breaks a
// known clause.

/// A random space without its full set (space clause 1).
GradedSpace generate_invalid_space(Rng& rng, const GeneratorConfig& cfg);
/// The frame of a random space with R(top, bottom) raised to 1.
GradedFrame generate_invalid_frame(Rng& rng, const GeneratorConfig& cfg);
/// A random system with sat(x, top) lowered to 0 at one point.
GradedSystem generate_invalid_system(Rng& rng, const GeneratorConfig& cfg);

}  // namespace graded_topos
