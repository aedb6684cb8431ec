#include "graded_topos/frame.hpp"

#include <algorithm>

#include "graded_topos/errors.hpp"

namespace graded_topos {

GradedFrame::GradedFrame(Universe carrier, std::size_t top,
                         std::vector<std::size_t> meet, JoinFn join,
                         std::vector<Grade> relation) {
  const std::size_t n = carrier.size();
  if (top >= n) throw SchemaError("frame top is not a carrier element");
  if (meet.size() != n * n) throw SchemaError("frame meet table is not total");
  if (relation.size() != n * n) {
    throw SchemaError("frame relation table is not total");
  }
  for (std::size_t m : meet) {
    if (m >= n) throw SchemaError("frame meet table leaves the carrier");
  }
  if (!join) throw SchemaError("frame has no join");
  data_ = std::make_shared<const Data>(Data{std::move(carrier), top,
                                            std::move(meet), std::move(join),
                                            std::move(relation)});
}

JoinFn GradedFrame::tabulated_join(std::vector<std::size_t> by_mask) {
  return [table = std::move(by_mask)](std::span<const std::size_t> subset) {
    std::size_t mask = 0;
    for (std::size_t i : subset) mask |= std::size_t{1} << i;
    return table.at(mask);
  };
}

std::size_t GradedFrame::join(std::span<const std::size_t> subset) const {
  const std::size_t j = data_->join(subset);
  if (j >= size()) throw SchemaError("frame join leaves the carrier");
  return j;
}

bool operator==(const GradedFrame& a, const GradedFrame& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.data_->carrier == b.data_->carrier && a.data_->top == b.data_->top &&
         a.data_->meet == b.data_->meet &&
         a.data_->relation == b.data_->relation;
}

std::size_t finite_meet(const GradedFrame& frame,
                        std::span<const std::size_t> subset) {
  std::size_t acc = frame.top();
  for (std::size_t a : subset) acc = frame.meet(acc, a);
  return acc;
}

namespace {

Witness at(const GradedFrame& f, std::initializer_list<std::size_t> elems,
           std::string expected, std::string actual) {
  std::string loc;
  for (std::size_t e : elems) {
    if (!loc.empty()) loc += ",";
    loc += f.name(e);
  }
  return {"(" + loc + ")", std::move(expected), std::move(actual)};
}

std::string subset_name(const GradedFrame& f, std::span<const std::size_t> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += f.name(s[i]);
  }
  return out + "}";
}

Verdict check_semilattice(const GradedFrame& f) {
  const std::size_t n = f.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (f.meet(a, a) != a) {
      return Verdict::fail("meet semilattice",
                           at(f, {a}, f.name(a), f.name(f.meet(a, a))));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (f.meet(a, b) != f.meet(b, a)) {
        return Verdict::fail("meet semilattice",
                             at(f, {a, b}, f.name(f.meet(b, a)),
                                f.name(f.meet(a, b))));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t l = f.meet(f.meet(a, b), c);
        const std::size_t r = f.meet(a, f.meet(b, c));
        if (l != r) {
          return Verdict::fail("meet semilattice",
                               at(f, {a, b, c}, f.name(r), f.name(l)));
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict check_pointwise_axioms(const GradedFrame& f) {
  const std::size_t n = f.size();
  const Grade one = Grade::one();

  for (std::size_t a = 0; a < n; ++a) {
    if (f.relation(a, a) != one) {
      return Verdict::fail("axiom 1", at(f, {a}, "1/1", f.relation(a, a).str()));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (f.relation(a, b) == one && f.relation(b, a) == one) {
        return Verdict::fail("axiom 2", at(f, {a, b}, "a = b", "distinct"));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Grade lhs = meet(f.relation(a, b), f.relation(b, c));
        if (lhs > f.relation(a, c)) {
          return Verdict::fail("axiom 3",
                               at(f, {a, b, c}, "<= " + f.relation(a, c).str(),
                                  lhs.str()));
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t m = f.meet(a, b);
      if (f.relation(m, a) != one || f.relation(m, b) != one) {
        return Verdict::fail(
            "axiom 4", at(f, {a, b}, "1/1,1/1",
                          f.relation(m, a).str() + "," + f.relation(m, b).str()));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (f.relation(a, f.top()) != one) {
      return Verdict::fail("axiom 5",
                           at(f, {a}, "1/1", f.relation(a, f.top()).str()));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Grade lhs = meet(f.relation(a, b), f.relation(a, c));
        const Grade rhs = f.relation(a, f.meet(b, c));
        if (lhs != rhs) {
          return Verdict::fail("axiom 6",
                               at(f, {a, b, c}, rhs.str(), lhs.str()));
        }
      }
    }
  }
  return Verdict::pass();
}

}  // namespace

Verdict check_frame(const GradedFrame& f, const CheckOptions& opts) {
  if (auto v = check_semilattice(f); !v) return v;
  if (auto v = check_pointwise_axioms(f); !v) return v;

  const std::size_t n = f.size();
  const Grade one = Grade::one();
  Verdict failure;
  Regime regime = Regime::exhaustive;

  regime = for_each_subset(n, opts, [&](std::span<const std::size_t> s) {
    const std::size_t j = f.join(s);
    for (std::size_t a : s) {
      if (f.relation(a, j) != one) {
        failure = Verdict::fail(
            "axiom 7", {f.name(a) + " in " + subset_name(f, s), "1/1",
                        f.relation(a, j).str()});
        return false;
      }
    }
    return true;
  });
  if (!failure) {
    failure.regime = regime;
    return failure;
  }

  for_each_subset(n, opts, [&](std::span<const std::size_t> s) {
    const std::size_t j = f.join(s);
    for (std::size_t b = 0; b < n; ++b) {
      Grade lhs = one;
      for (std::size_t a : s) lhs = meet(lhs, f.relation(a, b));
      if (lhs != f.relation(j, b)) {
        failure = Verdict::fail(
            "axiom 8", {"S=" + subset_name(f, s) + ", b=" + f.name(b),
                        lhs.str(), f.relation(j, b).str()});
        return false;
      }
    }
    return true;
  });
  if (!failure) {
    failure.regime = regime;
    return failure;
  }

  std::vector<std::size_t> meets;
  for_each_subset(n, opts, [&](std::span<const std::size_t> s) {
    const std::size_t j = f.join(s);
    for (std::size_t a = 0; a < n; ++a) {
      meets.clear();
      for (std::size_t b : s) meets.push_back(f.meet(a, b));
      std::sort(meets.begin(), meets.end());
      meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
      const std::size_t lhs = f.meet(a, j);
      const std::size_t rhs = f.join(meets);
      if (f.relation(lhs, rhs) != one) {
        failure = Verdict::fail(
            "axiom 9", {"a=" + f.name(a) + ", S=" + subset_name(f, s), "1/1",
                        f.relation(lhs, rhs).str()});
        return false;
      }
    }
    return true;
  });
  if (!failure) {
    failure.regime = regime;
    return failure;
  }

  return Verdict::pass(regime);
}

GradedFrame validate_frame(const GradedFrame& frame, const CheckOptions& opts) {
  if (auto v = check_frame(frame, opts); !v) throw ViolationError(std::move(v));
  return frame;
}

GradedFrame frame_from_space(const GradedSpace& space) {
  const std::size_t n = space.size();
  const Universe carrier = Universe::numbered("o", n);

  const auto top = space.index_of(full_set(space.universe()));
  if (!top) throw SchemaError("space has no full open");

  std::vector<std::size_t> meet(n * n);
  std::vector<Grade> relation(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto m = space.index_of(intersect(space.open(a), space.open(b)));
      if (!m) throw SchemaError("space is not closed under intersection");
      meet[a * n + b] = *m;
      relation[a * n + b] = graded_inclusion(space.open(a), space.open(b));
    }
  }

  JoinFn join = [space](std::span<const std::size_t> subset) {
    std::vector<Grade> values(space.universe().size(), Grade::zero());
    for (std::size_t i : subset) {
      const auto& t = space.open(i);
      for (std::size_t x = 0; x < values.size(); ++x) {
        values[x] = graded_topos::join(values[x], t(x));
      }
    }
    const auto j = space.index_of(FuzzySet(space.universe(), std::move(values)));
    if (!j) throw SchemaError("space is not closed under union");
    return *j;
  };

  return GradedFrame(carrier, *top, std::move(meet), std::move(join),
                     std::move(relation));
}

FrameHom::FrameHom(GradedFrame source, GradedFrame target,
                   std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.size()) {
    throw SchemaError("frame homomorphism is not total");
  }
  for (std::size_t b : map_) {
    if (b >= target_.size()) {
      throw SchemaError("frame homomorphism leaves its target carrier");
    }
  }
}

FrameHom FrameHom::identity(const GradedFrame& frame) {
  std::vector<std::size_t> map(frame.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return FrameHom(frame, frame, std::move(map));
}

bool FrameHom::is_bijective() const {
  if (source_.size() != target_.size()) return false;
  std::vector<bool> hit(target_.size(), false);
  for (std::size_t b : map_) {
    if (hit[b]) return false;
    hit[b] = true;
  }
  return true;
}

Verdict check_frame_hom(const FrameHom& h, const CheckOptions& opts) {
  const GradedFrame& src = h.source();
  const GradedFrame& tgt = h.target();
  const std::size_t n = src.size();

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t lhs = h(src.meet(a, b));
      const std::size_t rhs = tgt.meet(h(a), h(b));
      if (lhs != rhs) {
        return Verdict::fail("meet", {"(" + src.name(a) + "," + src.name(b) + ")",
                                      tgt.name(rhs), tgt.name(lhs)});
      }
    }
  }

  Verdict failure;
  std::vector<std::size_t> images;
  const Regime regime =
      for_each_subset(n, opts, [&](std::span<const std::size_t> s) {
        images.clear();
        for (std::size_t a : s) images.push_back(h(a));
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        const std::size_t lhs = h(src.join(s));
        const std::size_t rhs = tgt.join(images);
        if (lhs != rhs) {
          failure = Verdict::fail("join", {subset_name(src, s), tgt.name(rhs),
                                           tgt.name(lhs)});
          return false;
        }
        return true;
      });
  if (!failure) {
    failure.regime = regime;
    return failure;
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Grade lhs = src.relation(a, b);
      const Grade rhs = tgt.relation(h(a), h(b));
      if (lhs > rhs) {
        return Verdict::fail("relation",
                             {"(" + src.name(a) + "," + src.name(b) + ")",
                              ">= " + lhs.str(), rhs.str()},
                             regime);
      }
    }
  }

  if (h(src.top()) != tgt.top()) {
    return Verdict::fail("top", {src.name(src.top()), tgt.name(tgt.top()),
                                 tgt.name(h(src.top()))},
                         regime);
  }
  return Verdict::pass(regime);
}

FrameHom compose(const FrameHom& f, const FrameHom& g) {
  if (!(f.target() == g.source())) {
    throw MixedCarrier("target of the first is not the source of the second");
  }
  std::vector<std::size_t> map(f.source().size());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = g(f(a));
  return FrameHom(f.source(), g.target(), std::move(map));
}

FrameHom inverse(const FrameHom& h) {
  if (!h.is_bijective()) throw SchemaError("frame homomorphism is not bijective");
  std::vector<std::size_t> map(h.target().size());
  for (std::size_t a = 0; a < h.source().size(); ++a) map[h(a)] = a;
  return FrameHom(h.target(), h.source(), std::move(map));
}

}  // namespace graded_topos
