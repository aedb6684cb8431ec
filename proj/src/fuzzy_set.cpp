#include "graded_topos/fuzzy_set.hpp"

#include <algorithm>
#include <unordered_map>

#include "graded_topos/errors.hpp"

namespace graded_topos {

Universe::Universe(std::vector<std::string> elements) {
  if (elements.empty()) throw SchemaError("universe must be non-empty");
  auto data = std::make_shared<Data>();
  data->index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string& id = elements[i];
    if (id.empty() || id.find(',') != std::string::npos) {
      throw SchemaError("element identifier '" + id +
                        "' must be non-empty and contain no ','");
    }
    if (!data->index.emplace(id, i).second) {
      throw SchemaError("duplicate element identifier '" + id + "'");
    }
  }
  data->elements = std::move(elements);
  data_ = std::move(data);
}

Universe Universe::numbered(std::string_view prefix, std::size_t size) {
  std::vector<std::string> ids;
  ids.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    ids.push_back(std::string(prefix) + std::to_string(i));
  }
  return Universe(std::move(ids));
}

std::optional<std::size_t> Universe::index_of(std::string_view id) const {
  const auto it = data_->index.find(std::string(id));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

FuzzySet::FuzzySet(Universe universe, std::vector<Grade> membership)
    : universe_(std::move(universe)), membership_(std::move(membership)) {
  if (membership_.size() != universe_.size()) {
    throw SchemaError("fuzzy set membership has " +
                      std::to_string(membership_.size()) +
                      " values for a universe of " +
                      std::to_string(universe_.size()));
  }
}

Grade FuzzySet::at(std::string_view element) const {
  const auto i = universe_.index_of(element);
  if (!i) throw SchemaError("element '" + std::string(element) + "' not in universe");
  return membership_[*i];
}

bool FuzzySet::is_constant(Grade g) const noexcept {
  return std::all_of(membership_.begin(), membership_.end(),
                     [g](Grade v) { return v == g; });
}

std::string FuzzySet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < membership_.size(); ++i) {
    if (i) out += ", ";
    out += universe_[i] + ":" + membership_[i].str();
  }
  return out + "}";
}

FuzzySet constant_set(const Universe& u, Grade g) {
  return FuzzySet(u, std::vector<Grade>(u.size(), g));
}

namespace {

void require_same(const Universe& a, const Universe& b, const char* where) {
  if (!(a == b)) throw MixedUniverse(where);
}

}  // namespace

FuzzySet unite(const Universe& u, std::span<const FuzzySet> sets) {
  std::vector<Grade> values(u.size(), Grade::zero());
  for (const FuzzySet& s : sets) {
    require_same(u, s.universe(), "union");
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = join(values[i], s(i));
    }
  }
  return FuzzySet(u, std::move(values));
}

FuzzySet unite(const FuzzySet& a, const FuzzySet& b) {
  require_same(a.universe(), b.universe(), "union");
  std::vector<Grade> values(a.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = join(a(i), b(i));
  return FuzzySet(a.universe(), std::move(values));
}

FuzzySet intersect(const FuzzySet& a, const FuzzySet& b) {
  require_same(a.universe(), b.universe(), "intersection");
  std::vector<Grade> values(a.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = meet(a(i), b(i));
  return FuzzySet(a.universe(), std::move(values));
}

Grade graded_inclusion(const FuzzySet& a, const FuzzySet& b) {
  require_same(a.universe(), b.universe(), "graded inclusion");
  Grade result = Grade::one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    result = meet(result, godel_arrow(a(i), b(i)));
  }
  return result;
}

PointMap::PointMap(Universe source, Universe target,
                   std::vector<std::size_t> image)
    : source_(std::move(source)),
      target_(std::move(target)),
      image_(std::move(image)) {
  if (image_.size() != source_.size()) {
    throw SchemaError("point map is not total on its source");
  }
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] >= target_.size()) {
      throw SchemaError("point map sends '" + source_[x] +
                        "' outside its target");
    }
  }
}

PointMap PointMap::identity(const Universe& u) {
  std::vector<std::size_t> image(u.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return PointMap(u, u, std::move(image));
}

bool PointMap::is_injective() const {
  std::vector<bool> seen(target_.size(), false);
  for (std::size_t y : image_) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool PointMap::is_surjective() const {
  std::vector<bool> hit(target_.size(), false);
  for (std::size_t y : image_) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

PointMap compose(const PointMap& f, const PointMap& g) {
  require_same(f.target(), g.source(), "point map composition");
  std::vector<std::size_t> image(f.source().size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = g(f(x));
  return PointMap(f.source(), g.target(), std::move(image));
}

FuzzySet image(const PointMap& f, const FuzzySet& t) {
  require_same(f.source(), t.universe(), "image");
  std::vector<Grade> values(f.target().size(), Grade::zero());
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    values[f(x)] = join(values[f(x)], t(x));
  }
  return FuzzySet(f.target(), std::move(values));
}

FuzzySet preimage(const PointMap& f, const FuzzySet& t) {
  require_same(f.target(), t.universe(), "preimage");
  std::vector<Grade> values(f.source().size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = t(f(x));
  return FuzzySet(f.source(), std::move(values));
}

}  // namespace graded_topos
