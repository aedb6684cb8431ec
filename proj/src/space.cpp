#include "graded_topos/space.hpp"

#include <algorithm>
#include <set>

#include "graded_topos/errors.hpp"

namespace graded_topos {

namespace {

struct CanonicalLess {
  bool operator()(const FuzzySet& a, const FuzzySet& b) const noexcept {
    return canonical_less(a, b);
  }
};

}  // namespace

GradedSpace::GradedSpace(Universe universe, std::vector<FuzzySet> opens)
    : universe_(std::move(universe)), opens_(std::move(opens)) {
  for (const auto& t : opens_) {
    if (!(t.universe() == universe_)) throw MixedUniverse("space opens");
  }
  std::sort(opens_.begin(), opens_.end(), CanonicalLess{});
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
}

std::optional<std::size_t> GradedSpace::index_of(const FuzzySet& t) const {
  if (!(t.universe() == universe_)) return std::nullopt;
  const auto it =
      std::lower_bound(opens_.begin(), opens_.end(), t, CanonicalLess{});
  if (it == opens_.end() || !(*it == t)) return std::nullopt;
  return static_cast<std::size_t>(it - opens_.begin());
}

Verdict check_space(const GradedSpace& space) {
  const Universe& u = space.universe();
  const auto bottom = empty_set(u);
  const auto top = full_set(u);
  if (!space.contains(bottom)) {
    return Verdict::fail("clause 1", {"empty set", bottom.str(), "missing"});
  }
  if (!space.contains(top)) {
    return Verdict::fail("clause 1", {"full set", top.str(), "missing"});
  }
  const auto opens = space.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const auto u_ij = unite(opens[i], opens[j]);
      if (!space.contains(u_ij)) {
        return Verdict::fail("clause 2",
                             {"union of " + opens[i].str() + " and " +
                                  opens[j].str(),
                              u_ij.str(), "missing"});
      }
    }
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const auto m_ij = intersect(opens[i], opens[j]);
      if (!space.contains(m_ij)) {
        return Verdict::fail("clause 3",
                             {"intersection of " + opens[i].str() + " and " +
                                  opens[j].str(),
                              m_ij.str(), "missing"});
      }
    }
  }
  return Verdict::pass();
}

Verdict check_space(const Universe& universe, std::span<const FuzzySet> opens) {
  return check_space(
      GradedSpace(universe, std::vector<FuzzySet>(opens.begin(), opens.end())));
}

GradedSpace validate_space(const Universe& universe,
                           std::span<const FuzzySet> opens) {
  GradedSpace space(universe, std::vector<FuzzySet>(opens.begin(), opens.end()));
  if (auto v = check_space(space); !v) throw ViolationError(std::move(v));
  return space;
}

GradedSpace generate_topology(const Universe& universe,
                              std::span<const FuzzySet> generators,
                              std::size_t max_opens) {
  std::set<FuzzySet, CanonicalLess> closed;
  std::vector<FuzzySet> frontier;
  auto add = [&](FuzzySet t) {
    if (!(t.universe() == universe)) throw MixedUniverse("topology generators");
    if (closed.insert(t).second) {
      if (closed.size() > max_opens) {
        throw Overflow("topology closure exceeds " + std::to_string(max_opens) +
                       " opens");
      }
      frontier.push_back(std::move(t));
    }
  };
  add(empty_set(universe));
  add(full_set(universe));
  for (const auto& g : generators) add(g);

  // Saturate: every new open is combined with every open seen so far.
  std::vector<FuzzySet> seen;
  while (!frontier.empty()) {
    FuzzySet t = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < seen.size(); ++i) {
      add(unite(t, seen[i]));
      add(intersect(t, seen[i]));
    }
    seen.push_back(std::move(t));
  }
  return GradedSpace(universe, std::vector<FuzzySet>(closed.begin(), closed.end()));
}

Verdict check_continuous(const PointMap& f, const GradedSpace& source,
                         const GradedSpace& target) {
  if (!(f.source() == source.universe()) || !(f.target() == target.universe())) {
    throw MixedUniverse("continuity check");
  }
  for (const auto& t : target.opens()) {
    const auto pre = preimage(f, t);
    if (!source.contains(pre)) {
      return Verdict::fail("continuity",
                           {"preimage of " + t.str(), "a source open", pre.str()});
    }
  }
  return Verdict::pass();
}

PointMap compose_continuous(const PointMap& f, const PointMap& g,
                            const GradedSpace& x, const GradedSpace& y,
                            const GradedSpace& z) {
  if (auto v = check_continuous(f, x, y); !v) throw NotContinuous(v.describe());
  if (auto v = check_continuous(g, y, z); !v) throw NotContinuous(v.describe());
  PointMap gf = compose(f, g);
  if (auto v = check_continuous(gf, x, z); !v) throw NotContinuous(v.describe());
  return gf;
}

PointMap inverse(const PointMap& f) {
  if (!f.is_injective() || !f.is_surjective()) {
    throw SchemaError("point map is not a bijection");
  }
  std::vector<std::size_t> image(f.target().size());
  for (std::size_t x = 0; x < f.source().size(); ++x) image[f(x)] = x;
  return PointMap(f.target(), f.source(), std::move(image));
}

Verdict space_iso_check(const PointMap& f, const GradedSpace& source,
                        const GradedSpace& target) {
  if (!(f.source() == source.universe()) || !(f.target() == target.universe())) {
    throw MixedUniverse("isomorphism check");
  }
  if (!f.is_injective() || !f.is_surjective()) {
    return Verdict::fail("bijection", {"point map", "bijective", "not bijective"});
  }
  if (auto v = check_continuous(f, source, target); !v) return v;
  if (auto v = check_continuous(inverse(f), target, source); !v) {
    v.clause = "inverse " + v.clause;
    return v;
  }
  // Preimage along f sends target opens injectively into source opens; it is
  // a bijection exactly when both families have the same size.
  if (source.size() != target.size()) {
    return Verdict::fail("open bijection",
                         {"open counts", std::to_string(source.size()),
                          std::to_string(target.size())});
  }
  return Verdict::pass();
}

}  // namespace graded_topos
