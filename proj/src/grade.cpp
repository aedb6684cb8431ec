#include "graded_topos/grade.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

#include "graded_topos/errors.hpp"

namespace graded_topos {

namespace {

using u128 = unsigned __int128;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

u128 parse_digits(std::string_view s, std::string_view whole) {
  // Leading zeros are harmless; anything past 38 significant digits is not.
  u128 value = 0;
  int significant = 0;
  for (char c : s) {
    if (value != 0 || c != '0') ++significant;
    if (significant > 38) {
      throw SchemaError("grade '" + std::string(whole) + "' is too long");
    }
    value = value * 10 + static_cast<unsigned>(c - '0');
  }
  return value;
}

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Grade from_wide(u128 num, u128 den, std::string_view whole) {
  if (den == 0) {
    throw SchemaError("grade '" + std::string(whole) + "' has zero denominator");
  }
  if (num > den) {
    throw SchemaError("grade '" + std::string(whole) + "' lies outside [0,1]");
  }
  const u128 g = gcd128(num, den);
  num /= g;
  den /= g;
  constexpr u128 limit = std::numeric_limits<std::uint64_t>::max();
  if (den > limit) {
    throw SchemaError("grade '" + std::string(whole) +
                      "' needs more than 64 bits");
  }
  return Grade(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

}  // namespace

Grade::Grade(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw SchemaError("grade with zero denominator");
  if (num > den) {
    throw SchemaError("grade " + std::to_string(num) + "/" +
                      std::to_string(den) + " lies outside [0,1]");
  }
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Grade Grade::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) {
      throw SchemaError("malformed grade '" + std::string(text) + "'");
    }
    return from_wide(parse_digits(p, text), parse_digits(q, text), text);
  }

  const auto dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && int_part.empty() && frac_part.empty()) {
    throw SchemaError("malformed grade '" + std::string(text) + "'");
  }
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)) ||
      (int_part.empty() && dot == std::string_view::npos)) {
    throw SchemaError("malformed grade '" + std::string(text) + "'");
  }
  while (!frac_part.empty() && frac_part.back() == '0') {
    frac_part.remove_suffix(1);
  }
  if (frac_part.size() > 37) {
    throw SchemaError("grade '" + std::string(text) + "' is too long");
  }

  u128 den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const u128 whole = int_part.empty() ? 0 : parse_digits(int_part, text);
  if (whole > 1) {
    throw SchemaError("grade '" + std::string(text) + "' lies outside [0,1]");
  }
  const u128 frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
  return from_wide(whole * den + frac, den, text);
}

std::string Grade::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Grade& g) {
  return os << g.str();
}

Grade inf(std::span<const Grade> values) noexcept {
  Grade result = Grade::one();
  for (const Grade& v : values) result = meet(result, v);
  return result;
}

Grade sup(std::span<const Grade> values) noexcept {
  Grade result = Grade::zero();
  for (const Grade& v : values) result = join(result, v);
  return result;
}

}  // namespace graded_topos
