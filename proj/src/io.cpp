#include "graded_topos/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "graded_topos/errors.hpp"

namespace graded_topos {

using nlohmann::json;

namespace {

json parse(std::string_view text, std::string_view path) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(path), e.byte, e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const json& object(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw SchemaError(ctx + " must be an object");
  return j;
}

const json& array(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw SchemaError(ctx + " must be an array");
  return j;
}

const std::string& string(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw SchemaError(ctx + " must be a string");
  return j.get_ref<const std::string&>();
}

// Checks the key set of an object: every required key present, nothing else
// apart from the optional keys.
void keys(const json& j, const std::string& ctx, std::initializer_list<const char*> required,
          std::initializer_list<const char*> optional = {}) {
  object(j, ctx);
  for (const char* k : required) {
    if (!j.contains(k)) throw SchemaError(ctx + " lacks field '" + k + "'");
  }
  for (const auto& item : j.items()) {
    const auto& k = item.key();
    const auto is = [&](const char* c) { return k == c; };
    if (std::none_of(required.begin(), required.end(), is) &&
        std::none_of(optional.begin(), optional.end(), is)) {
      throw SchemaError(ctx + " has unknown field '" + k + "'");
    }
  }
}

Grade grade(const json& j, const std::string& ctx) {
  return Grade::parse(string(j, ctx));
}

Universe universe(const json& j, const std::string& ctx) {
  array(j, ctx);
  std::vector<std::string> ids;
  for (const auto& e : j) ids.push_back(string(e, ctx + " element"));
  if (ids.empty()) throw SchemaError(ctx + " must be non-empty");
  return Universe(std::move(ids));
}

json universe_json(const Universe& u) { return json(u.elements()); }

std::size_t element(const Universe& u, const std::string& id, const std::string& ctx) {
  const auto i = u.index_of(id);
  if (!i) throw SchemaError(ctx + ": unknown element '" + id + "'");
  return *i;
}

std::vector<std::string> split(const std::string& key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = key.find(',', start);
    parts.push_back(key.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out;
}

// Grades indexed by universe element, from {"x": "p/q"} with every element
// present exactly once.
std::vector<Grade> membership(const Universe& u, const json& j, const std::string& ctx) {
  object(j, ctx);
  if (j.size() != u.size()) throw SchemaError(ctx + " is not total on its universe");
  std::vector<Grade> values(u.size());
  for (const auto& item : j.items()) {
    values[element(u, item.key(), ctx)] = grade(item.value(), ctx + "." + item.key());
  }
  return values;
}

json membership_json(const FuzzySet& s) {
  json out = json::object();
  for (std::size_t i = 0; i < s.size(); ++i) out[s.universe()[i]] = s(i).str();
  return out;
}

// Row-major n*n table from {"a,b": v} covering every ordered pair once.
template <typename T, typename Read>
std::vector<T> pair_table(const Universe& rows, const Universe& cols, const json& j,
                          const std::string& ctx, Read read) {
  object(j, ctx);
  const std::size_t total = rows.size() * cols.size();
  if (j.size() != total) throw SchemaError(ctx + " is not total");
  std::vector<T> table(total);
  std::vector<bool> seen(total, false);
  for (const auto& item : j.items()) {
    const auto parts = split(item.key());
    if (parts.size() != 2) {
      throw SchemaError(ctx + " key '" + item.key() + "' is not a pair");
    }
    const std::size_t cell =
        element(rows, parts[0], ctx) * cols.size() + element(cols, parts[1], ctx);
    if (seen[cell]) throw SchemaError(ctx + " repeats key '" + item.key() + "'");
    seen[cell] = true;
    table[cell] = read(item.value(), ctx + "." + item.key());
  }
  return table;
}

constexpr std::size_t kMaxJoinCarrier = 20;

json frame_json(const GradedFrame& frame) {
  const std::size_t n = frame.size();
  if (n > kMaxJoinCarrier) {
    throw Overflow("join table of a frame with " + std::to_string(n) + " elements");
  }
  const Universe& c = frame.carrier();
  json meet = json::object();
  json relation = json::object();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::string key = c[a] + "," + c[b];
      meet[key] = c[frame.meet(a, b)];
      relation[key] = frame.relation(a, b).str();
    }
  }
  json join = json::object();
  std::vector<std::size_t> subset;
  std::vector<std::string> names;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    subset.clear();
    names.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        subset.push_back(i);
        names.push_back(c[i]);
      }
    }
    std::sort(names.begin(), names.end());
    join[joined(names)] = c[frame.join(subset)];
  }
  return json{{"carrier", universe_json(c)},
              {"join", std::move(join)},
              {"meet", std::move(meet)},
              {"relation", std::move(relation)},
              {"top", c[frame.top()]}};
}

GradedFrame frame_from_json(const json& j, const std::string& ctx) {
  keys(j, ctx, {"carrier", "top", "meet", "join", "relation"});
  const Universe c = universe(j["carrier"], ctx + ".carrier");
  const std::size_t n = c.size();
  if (n > kMaxJoinCarrier) {
    throw SchemaError(ctx + ".carrier has more than " +
                      std::to_string(kMaxJoinCarrier) + " elements");
  }
  const std::size_t top = element(c, string(j["top"], ctx + ".top"), ctx + ".top");
  const auto read_element = [&](const json& v, const std::string& where) {
    return element(c, string(v, where), where);
  };
  auto meet = pair_table<std::size_t>(c, c, j["meet"], ctx + ".meet", read_element);
  auto relation = pair_table<Grade>(c, c, j["relation"], ctx + ".relation", grade);

  const json& jj = object(j["join"], ctx + ".join");
  const std::size_t total = std::size_t{1} << n;
  if (jj.size() != total) throw SchemaError(ctx + ".join is not total on subsets");
  std::vector<std::size_t> by_mask(total);
  std::vector<bool> seen(total, false);
  for (const auto& item : jj.items()) {
    const std::string where = ctx + ".join." + item.key();
    std::size_t mask = 0;
    if (!item.key().empty()) {
      for (const auto& part : split(item.key())) {
        const std::size_t bit = std::size_t{1} << element(c, part, where);
        if (mask & bit) throw SchemaError(where + " repeats an element");
        mask |= bit;
      }
    }
    if (seen[mask]) throw SchemaError(where + " duplicates another subset key");
    seen[mask] = true;
    by_mask[mask] = read_element(item.value(), where);
  }
  return GradedFrame(c, top, std::move(meet), GradedFrame::tabulated_join(std::move(by_mask)),
                     std::move(relation));
}

}  // namespace

FuzzySet load_fuzzy_set(std::string_view text, std::string_view path) {
  const json j = parse(text, path);
  keys(j, "fuzzy set", {"universe", "membership"});
  const Universe u = universe(j["universe"], "universe");
  return FuzzySet(u, membership(u, j["membership"], "membership"));
}

std::string save_fuzzy_set(const FuzzySet& set) {
  return dump(json{{"membership", membership_json(set)},
                   {"universe", universe_json(set.universe())}});
}

PointMap load_point_map(std::string_view text, std::string_view path) {
  const json j = parse(text, path);
  keys(j, "point map", {"source", "target", "map"});
  const Universe source = universe(j["source"], "source");
  const Universe target = universe(j["target"], "target");
  const json& m = object(j["map"], "map");
  if (m.size() != source.size()) throw SchemaError("map is not total on its source");
  std::vector<std::size_t> image(source.size());
  for (const auto& item : m.items()) {
    image[element(source, item.key(), "map")] =
        element(target, string(item.value(), "map." + item.key()), "map." + item.key());
  }
  return PointMap(source, target, std::move(image));
}

std::string save_point_map(const PointMap& map) {
  json m = json::object();
  for (std::size_t x = 0; x < map.source().size(); ++x) {
    m[map.source()[x]] = map.target()[map(x)];
  }
  return dump(json{{"map", std::move(m)},
                   {"source", universe_json(map.source())},
                   {"target", universe_json(map.target())}});
}

GradedSpace load_space(std::string_view text, std::string_view path) {
  const json j = parse(text, path);
  keys(j, "space", {"universe", "opens"});
  const Universe u = universe(j["universe"], "universe");
  std::vector<FuzzySet> opens;
  for (const auto& o : array(j["opens"], "opens")) {
    const std::string ctx = "opens[" + std::to_string(opens.size()) + "]";
    opens.emplace_back(u, membership(u, o, ctx));
  }
  return GradedSpace(u, std::move(opens));
}

std::string save_space(const GradedSpace& space) {
  json opens = json::array();
  for (const FuzzySet& o : space.opens()) opens.push_back(membership_json(o));
  return dump(json{{"opens", std::move(opens)},
                   {"universe", universe_json(space.universe())}});
}

GradedFrame load_frame(std::string_view text, std::string_view path) {
  return frame_from_json(parse(text, path), "frame");
}

std::string save_frame(const GradedFrame& frame) { return dump(frame_json(frame)); }

GradedSystem load_system(std::string_view text, std::string_view path) {
  const json j = parse(text, path);
  keys(j, "system", {"points", "frame", "sat"});
  if (array(j["points"], "points").empty()) throw EmptyPoints();
  const Universe points = universe(j["points"], "points");
  GradedFrame frame = frame_from_json(j["frame"], "frame");
  auto sat = pair_table<Grade>(points, frame.carrier(), j["sat"], "sat", grade);
  return GradedSystem(points, std::move(frame), std::move(sat));
}

std::string save_system(const GradedSystem& system) {
  const Universe& c = system.frame().carrier();
  json sat = json::object();
  for (std::size_t x = 0; x < system.points().size(); ++x) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      sat[system.points()[x] + "," + c[a]] = system.sat(x, a).str();
    }
  }
  return dump(json{{"frame", frame_json(system.frame())},
                   {"points", universe_json(system.points())},
                   {"sat", std::move(sat)}});
}

namespace {

// Table over D^arity from {"d1,d2": v}; the arity is read off the keys.
template <typename T, typename Read>
std::pair<std::size_t, std::vector<T>> tuple_table(const Universe& d, const json& j,
                                                   const std::string& ctx, Read read) {
  object(j, ctx);
  if (j.empty()) throw SchemaError(ctx + " has an empty table");
  const std::size_t arity = split(j.begin().key()).size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (total > (std::size_t{1} << 24) / d.size()) throw SchemaError(ctx + " is too large");
    total *= d.size();
  }
  if (j.size() != total) throw SchemaError(ctx + " is not total");
  std::vector<T> values(total);
  std::vector<bool> seen(total, false);
  for (const auto& item : j.items()) {
    const std::string where = ctx + "." + item.key();
    const auto parts = split(item.key());
    if (parts.size() != arity) throw SchemaError(where + " has the wrong arity");
    std::size_t row = 0;
    for (const auto& p : parts) row = row * d.size() + element(d, p, where);
    if (seen[row]) throw SchemaError(where + " is repeated");
    seen[row] = true;
    values[row] = read(item.value(), where);
  }
  return {arity, std::move(values)};
}

std::string tuple_key(const Universe& d, std::size_t row, std::size_t arity) {
  std::vector<std::string> parts(arity);
  for (std::size_t i = arity; i-- > 0;) {
    parts[i] = d[row % d.size()];
    row /= d.size();
  }
  return joined(parts);
}

unsigned indexed(const std::string& name, char prefix, const std::string& ctx) {
  const bool ok = name.size() >= 2 && name.size() <= 7 && name[0] == prefix &&
                  std::all_of(name.begin() + 1, name.end(),
                              [](char ch) { return ch >= '0' && ch <= '9'; });
  if (!ok) {
    throw SchemaError(ctx + ": '" + name + "' is not of the form " + prefix + "<digits>");
  }
  return static_cast<unsigned>(std::stoul(name.substr(1)));
}

}  // namespace

Interpretation load_interpretation(std::string_view text, std::string_view path) {
  const json j = parse(text, path);
  keys(j, "interpretation", {"domain"}, {"constants", "functions", "predicates"});
  const Universe d = universe(j["domain"], "domain");

  std::map<unsigned, std::size_t> constants;
  if (j.contains("constants")) {
    for (const auto& item : object(j["constants"], "constants").items()) {
      const std::string where = "constants." + item.key();
      const unsigned c = indexed(item.key(), 'c', "constants");
      if (!constants.emplace(c, element(d, string(item.value(), where), where)).second) {
        throw SchemaError(where + " is declared twice");
      }
    }
  }
  std::map<std::string, FunctionTable> functions;
  if (j.contains("functions")) {
    for (const auto& item : object(j["functions"], "functions").items()) {
      const std::string where = "functions." + item.key();
      auto [arity, values] = tuple_table<std::size_t>(
          d, item.value(), where, [&](const json& v, const std::string& w) {
            return element(d, string(v, w), w);
          });
      functions.emplace(item.key(), FunctionTable{arity, std::move(values)});
    }
  }
  std::map<std::string, PredicateTable> predicates;
  if (j.contains("predicates")) {
    for (const auto& item : object(j["predicates"], "predicates").items()) {
      auto [arity, values] =
          tuple_table<Grade>(d, item.value(), "predicates." + item.key(), grade);
      predicates.emplace(item.key(), PredicateTable{arity, std::move(values)});
    }
  }
  return Interpretation(d, std::move(constants), std::move(functions),
                        std::move(predicates));
}

std::string save_interpretation(const Interpretation& interp) {
  const Universe& d = interp.domain();
  json constants = json::object();
  for (const auto& [c, value] : interp.constants()) {
    constants["c" + std::to_string(c)] = d[value];
  }
  json functions = json::object();
  for (const auto& [name, table] : interp.functions()) {
    json t = json::object();
    for (std::size_t r = 0; r < table.values.size(); ++r) {
      t[tuple_key(d, r, table.arity)] = d[table.values[r]];
    }
    functions[name] = std::move(t);
  }
  json predicates = json::object();
  for (const auto& [name, table] : interp.predicates()) {
    json t = json::object();
    for (std::size_t r = 0; r < table.values.size(); ++r) {
      t[tuple_key(d, r, table.arity)] = table.values[r].str();
    }
    predicates[name] = std::move(t);
  }
  return dump(json{{"constants", std::move(constants)},
                   {"domain", universe_json(d)},
                   {"functions", std::move(functions)},
                   {"predicates", std::move(predicates)}});
}

FormulaPool load_pool(std::string_view text, const Signature& sig, std::string_view path) {
  const json j = parse(text, path);
  keys(j, "pool", {"formulas"}, {"variables", "terms"});
  FormulaPool pool;
  for (const auto& f : array(j["formulas"], "formulas")) {
    pool.formulas.push_back(parse_formula(string(f, "formulas element"), sig));
  }
  if (j.contains("variables")) {
    for (const auto& v : array(j["variables"], "variables")) {
      pool.variables.push_back(indexed(string(v, "variables element"), 'x', "variables"));
    }
  }
  if (j.contains("terms")) {
    for (const auto& t : array(j["terms"], "terms")) {
      pool.terms.push_back(parse_term(string(t, "terms element"), sig));
    }
  }
  return pool;
}

std::string save_pool(const FormulaPool& pool) {
  json formulas = json::array();
  for (const Formula& f : pool.formulas) formulas.push_back(f.str());
  json out{{"formulas", std::move(formulas)}};
  if (!pool.variables.empty()) {
    json vars = json::array();
    for (unsigned v : pool.variables) vars.push_back("x" + std::to_string(v));
    out["variables"] = std::move(vars);
  }
  if (!pool.terms.empty()) {
    json terms = json::array();
    for (const Term& t : pool.terms) terms.push_back(t.str());
    out["terms"] = std::move(terms);
  }
  return dump(out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("cannot write " + path);
}

}  // namespace graded_topos
