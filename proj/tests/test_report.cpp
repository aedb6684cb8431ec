#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "graded_topos/report.hpp"
#include "graded_topos/suites.hpp"

using namespace graded_topos;

TEST_CASE("reports from tallies") {
  Tally t("union-least");
  t.record(true, [] { return Witness{}; });
  CHECK(make_report(t).status == Status::pass);
  t.record(false, [] { return Witness{"here", "1/1", "1/2"}; });
  const Report r = make_report(t, 3.5);
  CHECK(r.status == Status::fail);
  CHECK(r.checked == 2);
  CHECK(r.witnesses.size() == 1);
  CHECK(make_report(Tally("empty")).status == Status::skipped);
  for (int k = 0; k < 40; ++k) t.record(false, [] { return Witness{"w", "a", "b"}; });
  CHECK(t.failures.size() == 16);
  CHECK(t.failed == 41);
}

TEST_CASE("failing verdicts always carry a witness") {
  Verdict v;
  v.ok = false;
  v.clause = "axiom 3";
  const Report r = make_report("frame", v);
  CHECK(r.status == Status::fail);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses[0].location.find("axiom 3") != std::string::npos);
}

TEST_CASE("json line has sorted keys and discloses the regime") {
  Report r;
  r.subject = "frame";
  r.regime = Regime::sampled;
  r.status = Status::fail;
  r.witnesses.push_back({"a", "b", "c"});
  const std::string line = to_json_line(r);
  CHECK(line.find('\n') == std::string::npos);
  const auto j = nlohmann::json::parse(line);
  CHECK(j["regime"] == "sampled");
  CHECK(j["status"] == "fail");
  CHECK(j["witnesses"][0]["actual"] == "c");
  CHECK(line.find("\"checked\"") < line.find("\"subject\""));
}

TEST_CASE("exit codes and summary") {
  std::vector<Report> reports(2);
  reports[0].subject = "a";
  reports[1].subject = "b";
  reports[1].status = Status::skipped;
  CHECK(exit_code(reports) == 0);
  reports[0].status = Status::fail;
  reports[0].witnesses.push_back({"x", "1", "0"});
  CHECK(exit_code(reports) == 1);
  std::ostringstream out;
  emit_summary(out, reports);
  CHECK(out.str().find("FAIL a") != std::string::npos);
  CHECK(out.str().find("SKIP b") != std::string::npos);
}

TEST_CASE("merging tallies") {
  std::vector<Tally> into{Tally("a")};
  into[0].record(true, [] { return Witness{}; });
  std::vector<Tally> more{Tally("a"), Tally("b")};
  more[0].record(false, [] { return Witness{"w", "e", "g"}; });
  more[1].skip();
  merge_tallies(into, more);
  REQUIRE(into.size() == 2);
  CHECK(into[0].checked == 2);
  CHECK(into[0].failed == 1);
  CHECK(into[1].skipped == 1);
}

TEST_CASE("suites are reproducible from the seed") {
  GeneratorConfig cfg;
  cfg.seed = 5;
  const SuiteResult a = run_suite("frame-laws", cfg);
  const SuiteResult b = run_suite("frame-laws", cfg);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t k = 0; k < a.reports.size(); ++k) {
    CHECK(a.reports[k].subject == b.reports[k].subject);
    CHECK(a.reports[k].checked == b.reports[k].checked);
    CHECK(a.reports[k].status == Status::pass);
  }
  CHECK(a.exit_code == 0);
  CHECK_THROWS_AS(run_suite("nope", cfg), SchemaError);
}
