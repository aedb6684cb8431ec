#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "graded_topos/errors.hpp"

namespace graded_topos {

/// Whether a subset-quantified check looked at every subset or a sample.
enum class Regime { exhaustive, sampled };

std::string to_string(Regime r);

struct Witness {
  std::string location;
  std::string expected;
  std::string actual;
};

/// Outcome of an axiom or law check. A failing verdict names the violated
/// clause and carries at least one witness.
struct Verdict {
  bool ok = true;
  std::string clause;
  std::vector<Witness> witnesses;
  Regime regime = Regime::exhaustive;

  static Verdict pass(Regime regime = Regime::exhaustive) {
    return Verdict{true, {}, {}, regime};
  }
  static Verdict fail(std::string clause, Witness w,
                      Regime regime = Regime::exhaustive) {
    return Verdict{false, std::move(clause), {std::move(w)}, regime};
  }

  explicit operator bool() const noexcept { return ok; }

  /// "ok" or "<clause>: <location> expected <e> got <a>".
  std::string describe() const;
};

/// Thrown by the validate_* helpers when a structure fails its axioms.
class ViolationError : public Error {
 public:
  explicit ViolationError(Verdict v)
      : Error("violation: " + v.describe()), verdict_(std::move(v)) {}

  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

/// Running count of instances of one law: how many were checked, skipped, and
/// which failed.
struct Tally {
  std::string subject;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::vector<Witness> failures;
  Regime regime = Regime::exhaustive;

  explicit Tally(std::string name = {}) : subject(std::move(name)) {}

  bool ok() const noexcept { return failed == 0; }

  /// Counts one instance; keeps at most 16 failure witnesses.
  void record(bool holds, const std::function<Witness()>& witness);
  void record(const Verdict& v);
  void skip() noexcept { ++skipped; }
};

/// Tuning for subset-quantified checks.
struct CheckOptions {
  /// Carriers up to this size are checked over every subset.
  std::size_t subset_cap = 12;
  /// Number of random subsets examined above the cap.
  std::size_t samples = 512;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;

  /// Defaults, with subset_cap overridden by GRADED_TOPOS_SUBSET_CAP when set.
  static CheckOptions from_environment();
};

/// Visits subsets of {0..n-1} as sorted index lists. Above opts.subset_cap the
/// visit covers the empty set, all singletons, all pairs, the full set and
/// opts.samples uniformly drawn subsets. The visitor returns false to stop.
Regime for_each_subset(
    std::size_t n, const CheckOptions& opts,
    const std::function<bool(std::span<const std::size_t>)>& visit);

}  // namespace graded_topos
