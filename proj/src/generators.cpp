#include "graded_topos/generators.hpp"

#include "graded_topos/errors.hpp"

namespace graded_topos {

void GeneratorConfig::validate() const {
  if (max_points == 0) throw SchemaError("max_points must be positive");
  if (max_carrier < 2) throw SchemaError("max_carrier must be at least 2");
}

std::size_t uniform(Rng& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

Grade random_grade(Rng& rng, const GradeSet& pool) {
  return pool.grades()[uniform(rng, pool.size())];
}

FuzzySet random_fuzzy_set(Rng& rng, const Universe& u, const GradeSet& pool) {
  std::vector<Grade> values(u.size());
  for (auto& v : values) v = random_grade(rng, pool);
  return FuzzySet(u, std::move(values));
}

PointMap random_point_map(Rng& rng, const Universe& source, const Universe& target) {
  std::vector<std::size_t> image(source.size());
  for (auto& y : image) y = uniform(rng, target.size());
  return PointMap(source, target, std::move(image));
}

namespace {

// Closure of base plus extras, dropping extras from the back until it fits.
GradedSpace closure_within(const Universe& u, std::vector<FuzzySet> base,
                           std::vector<FuzzySet> extras, std::size_t cap) {
  while (true) {
    std::vector<FuzzySet> gens = base;
    gens.insert(gens.end(), extras.begin(), extras.end());
    try {
      return generate_topology(u, gens, cap);
    } catch (const Overflow&) {
      if (extras.empty()) throw;
      extras.pop_back();
    }
  }
}

GradedSpace random_space_on(Rng& rng, const Universe& u, const GeneratorConfig& cfg) {
  const std::size_t k = uniform(rng, cfg.max_generators + 1);
  std::vector<FuzzySet> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_fuzzy_set(rng, u, cfg.grade_pool));
  return closure_within(u, {}, std::move(gens), cfg.max_carrier);
}

Universe random_universe(Rng& rng, const char* prefix, std::size_t max_points) {
  return Universe::numbered(prefix, 1 + uniform(rng, max_points));
}

GradedSystem pulled_back(const GradedSpace& space, const PointMap& g) {
  const GradedFrame frame = frame_from_space(space);
  std::vector<Grade> sat;
  sat.reserve(g.source().size() * space.size());
  for (std::size_t p = 0; p < g.source().size(); ++p) {
    for (std::size_t o = 0; o < space.size(); ++o) sat.push_back(space.open(o)(g(p)));
  }
  return GradedSystem(g.source(), frame, std::move(sat));
}

}  // namespace

GradedSpace generate_random_space(Rng& rng, const GeneratorConfig& cfg) {
  cfg.validate();
  return random_space_on(rng, random_universe(rng, "x", cfg.max_points), cfg);
}

GradedSpace generate_random_space(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return generate_random_space(rng, cfg);
}

GradedSystem generate_random_system(Rng& rng, const GeneratorConfig& cfg) {
  const GradedSpace space = generate_random_space(rng, cfg);
  if (uniform(rng, 2) == 0) return j_object(space);
  const Universe points = random_universe(rng, "p", cfg.max_points);
  return pulled_back(space, random_point_map(rng, points, space.universe()));
}

GradedSystem generate_random_system(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return generate_random_system(rng, cfg);
}

GradedSystem generate_nonspatial_system(Rng& rng, const GeneratorConfig& cfg) {
  cfg.validate();
  const std::size_t max_points = std::max<std::size_t>(cfg.max_points, 2);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Universe u = Universe::numbered("x", 2 + uniform(rng, max_points - 1));
    const GradedSpace space = random_space_on(rng, u, cfg);
    const std::size_t skipped = uniform(rng, u.size());
    std::vector<std::size_t> image;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i != skipped) image.push_back(i);
    }
    const Universe points = Universe::numbered("p", image.size());
    const PointMap g(points, u, std::move(image));
    GradedSystem s = pulled_back(space, g);
    if (!check_spatial(s)) return s;
  }
  // {x0, x1} with opens {}, {x1:1}, X seen only from x0.
  const Universe u = Universe::numbered("x", 2);
  const GradedSpace space = generate_topology(
      u, std::vector<FuzzySet>{FuzzySet(u, {Grade::zero(), Grade::one()})});
  return pulled_back(space, PointMap(Universe::numbered("p", 1), u, {0}));
}

ContinuousChain generate_continuous_chain(Rng& rng, const GeneratorConfig& cfg) {
  const GradedSpace z = generate_random_space(rng, cfg);
  auto pull = [&](const GradedSpace& target, const char* prefix) {
    const Universe u = random_universe(rng, prefix, cfg.max_points);
    PointMap f = random_point_map(rng, u, target.universe());
    std::vector<FuzzySet> base;
    for (const FuzzySet& o : target.opens()) base.push_back(preimage(f, o));
    std::vector<FuzzySet> extras;
    const std::size_t k = uniform(rng, cfg.max_generators + 1);
    for (std::size_t i = 0; i < k; ++i) {
      extras.push_back(random_fuzzy_set(rng, u, cfg.grade_pool));
    }
    GradedSpace space = closure_within(u, std::move(base), std::move(extras), cfg.max_carrier);
    return std::make_pair(std::move(space), std::move(f));
  };
  auto [y, g] = pull(z, "y");
  auto [x, f] = pull(y, "x");
  return ContinuousChain{std::move(x), std::move(y), z, std::move(f), std::move(g)};
}

Interpretation generate_random_interpretation(Rng& rng, const GeneratorConfig& cfg) {
  cfg.validate();
  const Universe d = random_universe(rng, "d", cfg.max_points);
  const std::size_t n = d.size();

  std::map<unsigned, std::size_t> constants{{1, uniform(rng, n)}};
  if (uniform(rng, 2)) constants[2] = uniform(rng, n);

  std::map<std::string, FunctionTable> functions;
  if (uniform(rng, 2)) {
    FunctionTable f{1, std::vector<std::size_t>(n)};
    for (auto& v : f.values) v = uniform(rng, n);
    functions.emplace("f", std::move(f));
  }

  std::map<std::string, PredicateTable> predicates;
  const std::size_t count = 1 + uniform(rng, 2);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t arity = 1 + uniform(rng, 2);
    PredicateTable p{arity, std::vector<Grade>(arity == 1 ? n : n * n)};
    for (auto& v : p.values) v = random_grade(rng, cfg.grade_pool);
    predicates.emplace(i == 0 ? "p" : "q", std::move(p));
  }
  return Interpretation(d, std::move(constants), std::move(functions), std::move(predicates));
}

Interpretation generate_random_interpretation(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return generate_random_interpretation(rng, cfg);
}

namespace {

Term random_term(Rng& rng, const Signature& sig, bool allow_function) {
  const std::size_t pick = uniform(rng, 4);
  if (pick == 0 && !sig.constants.empty()) {
    auto it = sig.constants.begin();
    std::advance(it, uniform(rng, sig.constants.size()));
    return Term::constant(*it);
  }
  if (pick == 1 && allow_function && !sig.functions.empty()) {
    auto it = sig.functions.begin();
    std::advance(it, uniform(rng, sig.functions.size()));
    std::vector<Term> args;
    for (std::size_t i = 0; i < it->second; ++i) args.push_back(random_term(rng, sig, false));
    return Term::apply(it->first, std::move(args));
  }
  return Term::variable(1 + static_cast<unsigned>(uniform(rng, 2)));
}

Formula random_atom(Rng& rng, const Signature& sig) {
  const std::size_t pick = uniform(rng, 10);
  if (pick == 0) return Formula::top();
  if (pick == 1) return Formula::bottom();
  if (pick <= 3 || sig.predicates.empty()) {
    return Formula::equality(random_term(rng, sig, true), random_term(rng, sig, true));
  }
  auto it = sig.predicates.begin();
  std::advance(it, uniform(rng, sig.predicates.size()));
  std::vector<Term> args;
  for (std::size_t i = 0; i < it->second; ++i) args.push_back(random_term(rng, sig, true));
  return Formula::predicate(it->first, std::move(args));
}

}  // namespace

Formula generate_random_formula(Rng& rng, const Signature& sig, std::size_t depth) {
  if (depth == 0 || uniform(rng, 3) == 0) return random_atom(rng, sig);
  switch (uniform(rng, 4)) {
    case 0:
      return Formula::conjunction(generate_random_formula(rng, sig, depth - 1),
                                  generate_random_formula(rng, sig, depth - 1));
    case 1: {
      std::vector<Formula> ds;
      const std::size_t k = 1 + uniform(rng, 3);
      for (std::size_t i = 0; i < k; ++i) ds.push_back(generate_random_formula(rng, sig, depth - 1));
      return Formula::disjunction(std::move(ds));
    }
    default:
      return Formula::exists(1 + static_cast<unsigned>(uniform(rng, 2)),
                             generate_random_formula(rng, sig, depth - 1));
  }
}

std::vector<Formula> generate_random_pool(Rng& rng, const Signature& sig, std::size_t size,
                                          std::size_t depth) {
  std::vector<Formula> pool;
  for (std::size_t i = 0; i < size; ++i) pool.push_back(generate_random_formula(rng, sig, depth));
  return pool;
}

GradedSpace generate_invalid_space(Rng& rng, const GeneratorConfig& cfg) {
  const GradedSpace space = generate_random_space(rng, cfg);
  const FuzzySet full = full_set(space.universe());
  std::vector<FuzzySet> opens;
  for (const FuzzySet& o : space.opens()) {
    if (!(o == full)) opens.push_back(o);
  }
  return GradedSpace(space.universe(), std::move(opens));
}

GradedFrame generate_invalid_frame(Rng& rng, const GeneratorConfig& cfg) {
  const GradedFrame frame = frame_from_space(generate_random_space(rng, cfg));
  std::vector<Grade> relation(frame.relation_table().begin(), frame.relation_table().end());
  relation[frame.top() * frame.size() + frame.bottom()] = Grade::one();
  return GradedFrame(frame.carrier(), frame.top(),
                     std::vector<std::size_t>(frame.meet_table().begin(), frame.meet_table().end()),
                     [frame](std::span<const std::size_t> s) { return frame.join(s); },
                     std::move(relation));
}

GradedSystem generate_invalid_system(Rng& rng, const GeneratorConfig& cfg) {
  const GradedSystem s = generate_random_system(rng, cfg);
  std::vector<Grade> sat(s.sat_table().begin(), s.sat_table().end());
  const std::size_t x = uniform(rng, s.points().size());
  sat[x * s.frame().size() + s.frame().top()] = Grade::zero();
  return GradedSystem(s.points(), s.frame(), std::move(sat));
}

}  // namespace graded_topos
