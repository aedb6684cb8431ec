#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace graded_topos {

/// An exact rational truth value in [0,1], always stored in lowest terms.
///
/// Grades are only ever selected (min, max, Goedel arrow), never computed by
/// field arithmetic, so a 64-bit numerator/denominator pair is enough to keep
/// every value that can be written down exactly. Ordering is decided by
/// 128-bit cross multiplication.
class Grade {
 public:
  constexpr Grade() noexcept = default;

  /// Throws SchemaError if den == 0 or num > den.
  Grade(std::uint64_t num, std::uint64_t den);

  static constexpr Grade zero() noexcept { return Grade{}; }
  static constexpr Grade one() noexcept { return Grade{Raw{}, 1, 1}; }

  /// Accepts "p/q" or a finite decimal such as "0.3", "1", "1.000", ".25".
  static Grade parse(std::string_view text);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == den_; }

  /// Canonical "p/q" form, e.g. "0/1", "3/10", "1/1".
  std::string str() const;

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend bool operator==(const Grade&, const Grade&) noexcept = default;
  friend std::strong_ordering operator<=>(const Grade& a,
                                          const Grade& b) noexcept {
    const auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
    const auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  struct Raw {};
  constexpr Grade(Raw, std::uint64_t num, std::uint64_t den) noexcept
      : num_(num), den_(den) {}

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Grade& g);

inline Grade meet(Grade a, Grade b) noexcept { return b < a ? b : a; }
inline Grade join(Grade a, Grade b) noexcept { return a < b ? b : a; }

/// Residuum of min: 1 when a <= b, otherwise b.
inline Grade godel_arrow(Grade a, Grade b) noexcept {
  return a <= b ? Grade::one() : b;
}

/// Infimum of a finite list; the empty infimum is 1.
Grade inf(std::span<const Grade> values) noexcept;
inline Grade inf(std::initializer_list<Grade> values) noexcept {
  return inf(std::span<const Grade>(values.begin(), values.size()));
}

/// Supremum of a finite list; the empty supremum is 0.
Grade sup(std::span<const Grade> values) noexcept;
inline Grade sup(std::initializer_list<Grade> values) noexcept {
  return sup(std::span<const Grade>(values.begin(), values.size()));
}

}  // namespace graded_topos

template <>
struct std::hash<graded_topos::Grade> {
  std::size_t operator()(const graded_topos::Grade& g) const noexcept {
    return std::hash<std::uint64_t>{}(g.numerator() * 1000003u ^
                                      g.denominator());
  }
};
