#include "graded_topos/verdict.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "graded_topos/errors.hpp"

namespace graded_topos {

std::string to_string(Regime r) {
  return r == Regime::exhaustive ? "exhaustive" : "sampled";
}

std::string Verdict::describe() const {
  if (ok) return "ok";
  std::string out = clause;
  for (const auto& w : witnesses) {
    out += ": " + w.location + " expected " + w.expected + " got " + w.actual;
  }
  return out;
}

void Tally::record(bool holds, const std::function<Witness()>& witness) {
  ++checked;
  if (holds) return;
  ++failed;
  if (failures.size() < 16) failures.push_back(witness());
}

void Tally::record(const Verdict& v) {
  if (v.regime == Regime::sampled) regime = Regime::sampled;
  record(v.ok, [&] {
    Witness w = v.witnesses.empty() ? Witness{} : v.witnesses.front();
    w.location = v.clause + (w.location.empty() ? "" : " " + w.location);
    return w;
  });
}

CheckOptions CheckOptions::from_environment() {
  CheckOptions opts;
  if (const char* cap = std::getenv("GRADED_TOPOS_SUBSET_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(cap, &used);
      if (used != std::string(cap).size() || value > 30) throw std::invalid_argument(cap);
      opts.subset_cap = value;
    } catch (const std::logic_error&) {
      throw SchemaError(std::string("GRADED_TOPOS_SUBSET_CAP='") + cap +
                        "' is not an integer in [0,30]");
    }
  }
  return opts;
}

Regime for_each_subset(
    std::size_t n, const CheckOptions& opts,
    const std::function<bool(std::span<const std::size_t>)>& visit) {
  std::vector<std::size_t> subset;
  subset.reserve(n);

  if (n <= opts.subset_cap && n < 63) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      subset.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) subset.push_back(i);
      }
      if (!visit(subset)) break;
    }
    return Regime::exhaustive;
  }

  if (!visit(subset)) return Regime::sampled;
  for (std::size_t i = 0; i < n; ++i) {
    subset.assign({i});
    if (!visit(subset)) return Regime::sampled;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      subset.assign({i, j});
      if (!visit(subset)) return Regime::sampled;
    }
  }
  subset.clear();
  for (std::size_t i = 0; i < n; ++i) subset.push_back(i);
  if (!visit(subset)) return Regime::sampled;

  std::mt19937_64 rng(opts.seed);
  for (std::size_t k = 0; k < opts.samples; ++k) {
    subset.clear();
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 64 == 0) bits = rng();
      if (bits >> (i % 64) & 1u) subset.push_back(i);
    }
    if (!visit(subset)) break;
  }
  return Regime::sampled;
}

}  // namespace graded_topos
