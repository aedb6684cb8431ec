#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graded_topos/grade.hpp"

namespace graded_topos {

/// A finite, ordered, non-empty list of distinct element identifiers.
///
/// Identifiers must be non-empty and may not contain ',' since they appear in
/// comma-joined table keys of the file formats. Copies share storage.
class Universe {
 public:
  /// Throws SchemaError on an empty list, duplicates, or bad identifiers.
  explicit Universe(std::vector<std::string> elements);

  /// Universe {prefix0, prefix1, ...} of the given size.
  static Universe numbered(std::string_view prefix, std::size_t size);

  std::size_t size() const noexcept { return data_->elements.size(); }
  const std::string& operator[](std::size_t i) const {
    return data_->elements[i];
  }
  const std::vector<std::string>& elements() const noexcept {
    return data_->elements;
  }
  std::optional<std::size_t> index_of(std::string_view id) const;

  friend bool operator==(const Universe& a, const Universe& b) noexcept {
    return a.data_ == b.data_ || a.data_->elements == b.data_->elements;
  }

 private:
  struct Data {
    std::vector<std::string> elements;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// A fuzzy subset of a finite universe: a total map element -> Grade.
class FuzzySet {
 public:
  /// Throws SchemaError if the membership vector does not match the universe.
  FuzzySet(Universe universe, std::vector<Grade> membership);

  const Universe& universe() const noexcept { return universe_; }
  std::span<const Grade> membership() const noexcept { return membership_; }
  std::size_t size() const noexcept { return membership_.size(); }

  Grade operator()(std::size_t i) const { return membership_[i]; }
  /// Throws SchemaError for an unknown element.
  Grade at(std::string_view element) const;

  bool is_constant(Grade g) const noexcept;

  /// "{x1:1/2, x2:0/1}" for reports.
  std::string str() const;

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) noexcept {
    return a.universe_ == b.universe_ && a.membership_ == b.membership_;
  }

  /// Canonical order: lexicographic by membership values in universe order.
  /// Only meaningful between sets over the same universe.
  friend bool canonical_less(const FuzzySet& a, const FuzzySet& b) noexcept {
    return a.membership_ < b.membership_;
  }

 private:
  Universe universe_;
  std::vector<Grade> membership_;
};

FuzzySet constant_set(const Universe& u, Grade g);
inline FuzzySet empty_set(const Universe& u) {
  return constant_set(u, Grade::zero());
}
inline FuzzySet full_set(const Universe& u) {
  return constant_set(u, Grade::one());
}

/// Pointwise sup; the union of no sets is the empty set of `u`.
/// Throws MixedUniverse if some set is not over `u`.
FuzzySet unite(const Universe& u, std::span<const FuzzySet> sets);
FuzzySet unite(const FuzzySet& a, const FuzzySet& b);

/// Pointwise min.
FuzzySet intersect(const FuzzySet& a, const FuzzySet& b);

/// inf over x of a(x) -> b(x) with the Goedel arrow.
Grade graded_inclusion(const FuzzySet& a, const FuzzySet& b);

/// A total function between two universes.
class PointMap {
 public:
  /// Throws SchemaError if `image` is not total or points outside `target`.
  PointMap(Universe source, Universe target, std::vector<std::size_t> image);

  static PointMap identity(const Universe& u);

  const Universe& source() const noexcept { return source_; }
  const Universe& target() const noexcept { return target_; }
  std::span<const std::size_t> image() const noexcept { return image_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const PointMap&, const PointMap&) = default;

 private:
  Universe source_;
  Universe target_;
  std::vector<std::size_t> image_;
};

/// g after f. Throws MixedUniverse unless f.target() == g.source().
PointMap compose(const PointMap& f, const PointMap& g);

/// Direct image: value at y is the sup of t over the preimage of y (0 if empty).
FuzzySet image(const PointMap& f, const FuzzySet& t);

/// Inverse image: value at x is t(f(x)).
FuzzySet preimage(const PointMap& f, const FuzzySet& t);

}  // namespace graded_topos
