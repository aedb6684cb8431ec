#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graded_topos/fuzzy_set.hpp"
#include "graded_topos/grade.hpp"
#include "graded_topos/space.hpp"
#include "graded_topos/verdict.hpp"

namespace graded_topos {

/// Evaluates the join of a subset given as sorted carrier indices.
using JoinFn = std::function<std::size_t(std::span<const std::size_t>)>;

/// A finite carrier with top, binary meet table, subset join evaluator and a
/// grade-valued relation R. Construction checks only that the tables are total
/// and in range; the nine frame axioms are tested by check_frame.
///
/// Immutable; copies share storage.
class GradedFrame {
 public:
  /// `meet` and `relation` are row-major n*n tables.
  GradedFrame(Universe carrier, std::size_t top, std::vector<std::size_t> meet,
              JoinFn join, std::vector<Grade> relation);

  /// Join backed by a table indexed by subset bitmask (bit i = element i).
  static JoinFn tabulated_join(std::vector<std::size_t> by_mask);

  const Universe& carrier() const noexcept { return data_->carrier; }
  std::size_t size() const noexcept { return data_->carrier.size(); }
  const std::string& name(std::size_t a) const { return data_->carrier[a]; }

  std::size_t top() const noexcept { return data_->top; }
  /// join of the empty subset.
  std::size_t bottom() const { return join({}); }

  std::size_t meet(std::size_t a, std::size_t b) const {
    return data_->meet[a * size() + b];
  }
  /// Throws SchemaError if the evaluator leaves the carrier.
  std::size_t join(std::span<const std::size_t> subset) const;
  Grade relation(std::size_t a, std::size_t b) const {
    return data_->relation[a * size() + b];
  }

  std::span<const std::size_t> meet_table() const noexcept { return data_->meet; }
  std::span<const Grade> relation_table() const noexcept {
    return data_->relation;
  }

  /// Structural equality on carrier, top, meet and relation. For frames that
  /// satisfy the axioms the relation already determines every join.
  friend bool operator==(const GradedFrame& a, const GradedFrame& b) noexcept;

 private:
  struct Data {
    Universe carrier;
    std::size_t top;
    std::vector<std::size_t> meet;
    JoinFn join;
    std::vector<Grade> relation;
  };
  std::shared_ptr<const Data> data_;
};

/// Meet of a finite subset by folding the binary meet; the empty meet is top.
std::size_t finite_meet(const GradedFrame& frame,
                        std::span<const std::size_t> subset);

/// Checks the meet table is a semilattice (clause "meet semilattice"), then
/// axioms 1..9 in order ("axiom N"). Axioms 7-9 range over subsets in the
/// regime chosen by `opts`; the verdict records which one was used.
Verdict check_frame(const GradedFrame& frame,
                    const CheckOptions& opts = CheckOptions::from_environment());

GradedFrame validate_frame(const GradedFrame& frame,
                           const CheckOptions& opts = CheckOptions::from_environment());

/// The opens of a space as a graded frame: top is the full set, meet is
/// intersection, join is union and R is graded inclusion. Carrier element i
/// is named "o<i>" and stands for space.open(i).
GradedFrame frame_from_space(const GradedSpace& space);

/// A total map between frame carriers.
class FrameHom {
 public:
  /// Throws SchemaError if the map is not total or leaves the target.
  FrameHom(GradedFrame source, GradedFrame target, std::vector<std::size_t> map);

  static FrameHom identity(const GradedFrame& frame);

  const GradedFrame& source() const noexcept { return source_; }
  const GradedFrame& target() const noexcept { return target_; }
  std::span<const std::size_t> map() const noexcept { return map_; }
  std::size_t operator()(std::size_t a) const { return map_[a]; }

  bool is_bijective() const;

  friend bool operator==(const FrameHom&, const FrameHom&) = default;

 private:
  GradedFrame source_;
  GradedFrame target_;
  std::vector<std::size_t> map_;
};

/// Clauses "meet", "join", "relation" and "top", checked in that order.
Verdict check_frame_hom(const FrameHom& h,
                        const CheckOptions& opts = CheckOptions::from_environment());

/// g after f. Throws MixedCarrier unless f.target() == g.source().
FrameHom compose(const FrameHom& f, const FrameHom& g);

/// Inverse of a bijective hom. Throws SchemaError otherwise.
FrameHom inverse(const FrameHom& h);

}  // namespace graded_topos
