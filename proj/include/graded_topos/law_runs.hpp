#pragma once

#include <cstddef>
#include <vector>

#include "graded_topos/generators.hpp"
#include "graded_topos/verdict.hpp"

namespace graded_topos {

// Randomized runs of the structural laws over generated instances. Each run
// draws `count` instances from an engine seeded with cfg.seed and returns one
// tally per law.

/// Laws of graded inclusion over the opens of one space: inclusion-reflexive,
/// inclusion-antisymmetric, inclusion-transitive, intersection-lower-bound,
/// inclusion-in-full-set, inclusion-meets-intersection, union-upper-bound,
/// union-least, intersection-distributes-over-union, inclusion-modus-ponens.
std::vector<Tally> inclusion_laws(const GradedSpace& space, const CheckOptions& opts);

/// inclusion_laws over random spaces, plus preimage-preserves-union and
/// preimage-preserves-intersection along random maps.
std::vector<Tally> run_inclusion_laws(const GeneratorConfig& cfg, std::size_t count);

/// image-monotone: gr(a <= b) <= gr(f(a) <= f(b)) for random f, a, b.
std::vector<Tally> run_image_monotonicity(const GeneratorConfig& cfg, std::size_t count);

/// frame-of-opens: frame_from_space passes check_frame.
std::vector<Tally> run_frame_construction(const GeneratorConfig& cfg, std::size_t count,
                                          const CheckOptions& opts);

/// frame-hom-of-map and frame-hom-composite over continuous chains.
std::vector<Tally> run_frame_hom_composition(const GeneratorConfig& cfg, std::size_t count);

/// system-of-space, space-of-system and random-system validity.
std::vector<Tally> run_system_construction(const GeneratorConfig& cfg, std::size_t count);

/// j-morphism-valid, ext-morphism-continuous, ext-preimage-identity and
/// system-morphism-composite.
std::vector<Tally> run_morphism_transport(const GeneratorConfig& cfg, std::size_t count);

/// Identity and composition laws of J, Ext, fm and S.
std::vector<Tally> run_functoriality(const GeneratorConfig& cfg, std::size_t count);

/// Triangles and naturality of J -| Ext, and unit-space-iso.
std::vector<Tally> run_j_ext_adjunction(const GeneratorConfig& cfg, std::size_t count);

/// counit-iso-on-spatial over random spatial systems and
/// counit-not-iso-on-nonspatial over constructed duplicate-column systems;
/// spatial-equivalence over every system drawn.
std::vector<Tally> run_spatial_equivalence(const GeneratorConfig& cfg, std::size_t spatial,
                                           std::size_t nonspatial);

/// s-object-valid, s-morphism-valid, point-of-system-is-hom, both fm-S
/// triangles and the fm-S naturality squares, with L the occurring grades.
std::vector<Tally> run_fm_s_adjunction(const GeneratorConfig& cfg, std::size_t count);

/// Triangles of the composite adjunction.
std::vector<Tally> run_composite_adjunction(const GeneratorConfig& cfg, std::size_t count);

/// sequent_properties over random interpretations and pools of `pool_size`
/// formulas of depth at most 3.
std::vector<Tally> run_sequent_laws(const GeneratorConfig& cfg, std::size_t count,
                                    std::size_t pool_size = 4);

}  // namespace graded_topos
