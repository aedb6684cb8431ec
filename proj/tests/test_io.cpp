#include <doctest.h>

#include <filesystem>
#include <string>

#include "graded_topos/errors.hpp"
#include "graded_topos/functors.hpp"
#include "graded_topos/generators.hpp"
#include "graded_topos/io.hpp"

using namespace graded_topos;

namespace {

const std::string kDir = GT_FIXTURE_DIR;

std::string fixture(const std::string& name) { return read_file(kDir + "/" + name); }

}  // namespace

TEST_CASE("canonical fixtures are byte-identical after load and save") {
  for (const char* name : {"space.json", "indiscrete_space.json"}) {
    INFO(name);
    CHECK(save_space(load_space(fixture(name))) == fixture(name));
  }
  for (const char* name : {"frame.json", "two_chain_frame.json"}) {
    INFO(name);
    CHECK(save_frame(load_frame(fixture(name))) == fixture(name));
  }
  for (const char* name : {"system.json", "nonspatial_system.json", "spatial_noniso_system.json"}) {
    INFO(name);
    CHECK(save_system(load_system(fixture(name))) == fixture(name));
  }
  CHECK(save_fuzzy_set(load_fuzzy_set(fixture("fuzzy_set.json"))) == fixture("fuzzy_set.json"));
  CHECK(save_point_map(load_point_map(fixture("point_map.json"))) == fixture("point_map.json"));
  const Interpretation i = load_interpretation(fixture("interpretation.json"));
  CHECK(save_interpretation(i) == fixture("interpretation.json"));
  CHECK(save_pool(load_pool(fixture("pool.json"), i.signature())) == fixture("pool.json"));
}

TEST_CASE("loading does not depend on key order or grade spelling") {
  const GradedSpace a = load_space(
      R"({"opens": [{"x2": "0", "x1": "0.0"}, {"x1": "1", "x2": "2/2"}], "universe": ["x1", "x2"]})");
  CHECK(save_space(a) == fixture("indiscrete_space.json"));
  const GradedFrame f = load_frame(fixture("two_chain_frame.json"));
  CHECK(f.top() == 1);
  CHECK(f.bottom() == 0);
}

TEST_CASE("random structures round trip") {
  GeneratorConfig cfg;
  Rng rng(14);
  for (int k = 0; k < 40; ++k) {
    const GradedSystem s = generate_random_system(rng, cfg);
    const std::string text = save_system(s);
    const GradedSystem back = load_system(text);
    CHECK(back == s);
    CHECK(save_system(back) == text);
    const GradedSpace sp = ext_object(s);
    CHECK(load_space(save_space(sp)) == sp);
    const Interpretation i = generate_random_interpretation(rng, cfg);
    CHECK(save_interpretation(load_interpretation(save_interpretation(i))) == save_interpretation(i));
  }
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(load_space(R"({"universe": ["x"], "opens": [{"x": "3/2"}]})"), SchemaError);
  CHECK_THROWS_AS(load_space(R"({"universe": ["x"], "opens": [{}]})"), SchemaError);
  CHECK_THROWS_AS(load_space(R"({"universe": ["x"], "opens": [{"x": 0.5}]})"), SchemaError);
  CHECK_THROWS_AS(load_space(R"({"universe": ["x"]})"), SchemaError);
  CHECK_THROWS_AS(load_space(R"({"universe": ["x"], "opens": [], "more": 1})"), SchemaError);
  CHECK_THROWS_AS(load_frame(fixture("invalid/frame_meet_not_total.json")), SchemaError);
  CHECK_THROWS_AS(load_system(fixture("invalid/system_no_points.json")), EmptyPoints);
  CHECK_THROWS_AS(load_point_map(R"({"source": ["a"], "target": ["b"], "map": {"a": "c"}})"),
                  SchemaError);
  CHECK_THROWS_AS(load_interpretation(R"({"domain": ["d"], "constants": {"k1": "d"}})"),
                  SchemaError);
  const Interpretation i = load_interpretation(fixture("interpretation.json"));
  CHECK_THROWS_AS(load_pool(R"j({"formulas": ["r(x1)"]})j", i.signature()), UndeclaredSymbol);
}

TEST_CASE("parse errors carry path and position") {
  try {
    load_space("{\"universe\": [", "broken.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "broken.json");
    CHECK(e.position() > 0);
  }
  CHECK_THROWS_AS(read_file(kDir + "/does-not-exist.json"), ParseError);
}

TEST_CASE("write_file and read_file") {
  const auto path = std::filesystem::temp_directory_path() / "graded_topos_io_test.json";
  write_file(path.string(), fixture("space.json"));
  CHECK(read_file(path.string()) == fixture("space.json"));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(write_file("/nonexistent-dir/x.json", "{}"), Error);
}
