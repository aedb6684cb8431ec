#include "graded_topos/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "graded_topos/errors.hpp"
#include "graded_topos/law_runs.hpp"

namespace graded_topos {

namespace {

using Run = std::function<std::vector<Tally>()>;

void timed(std::vector<Report>& out, const Run& run) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Tally> tallies = run();
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (const Tally& t : tallies) out.push_back(make_report(t, ms));
}

// Frames with at most five elements over a four-grade pool keep point
// enumeration small.
GeneratorConfig small(const GeneratorConfig& cfg) {
  GeneratorConfig c = cfg;
  c.max_carrier = std::min<std::size_t>(cfg.max_carrier, 5);
  c.grade_pool = GradeSet::parse("0,1/3,2/3,1");
  return c;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"props", "frame-laws", "system-laws", "functor-laws", "adjunction", "theorem2"};
}

SuiteResult run_suite(const std::string& name, const GeneratorConfig& cfg) {
  cfg.validate();
  SuiteResult result;
  auto& out = result.reports;
  if (name == "props") {
    timed(out, [&] { return run_inclusion_laws(cfg, 200); });
    GeneratorConfig maps = cfg;
    maps.max_points = std::max<std::size_t>(cfg.max_points, 5);
    timed(out, [&] { return run_image_monotonicity(maps, 500); });
  } else if (name == "frame-laws") {
    GeneratorConfig c = cfg;
    c.max_carrier = std::min<std::size_t>(cfg.max_carrier, 12);
    CheckOptions opts;
    opts.subset_cap = 12;
    timed(out, [&] { return run_frame_construction(c, 100, opts); });
    timed(out, [&] { return run_frame_hom_composition(cfg, 100); });
  } else if (name == "system-laws") {
    timed(out, [&] { return run_system_construction(cfg, 100); });
    timed(out, [&] { return run_morphism_transport(cfg, 100); });
    timed(out, [&] { return run_spatial_equivalence(cfg, 50, 10); });
  } else if (name == "functor-laws") {
    timed(out, [&] { return run_functoriality(small(cfg), 50); });
  } else if (name == "adjunction") {
    timed(out, [&] { return run_j_ext_adjunction(cfg, 50); });
    timed(out, [&] { return run_fm_s_adjunction(small(cfg), 25); });
    timed(out, [&] { return run_composite_adjunction(small(cfg), 25); });
  } else if (name == "theorem2") {
    GeneratorConfig c = cfg;
    c.max_points = std::min<std::size_t>(cfg.max_points, 3);
    timed(out, [&] { return run_sequent_laws(c, 300); });
  } else {
    throw SchemaError("unknown suite '" + name + "'");
  }
  result.exit_code = exit_code(out);
  return result;
}

}  // namespace graded_topos
