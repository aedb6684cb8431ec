#pragma once

#include <string>
#include <vector>

#include "graded_topos/generators.hpp"
#include "graded_topos/report.hpp"

namespace graded_topos {

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

struct SuiteResult {
  std::vector<Report> reports;
  int exit_code = 0;
};

/// Runs one named suite: props, frame-laws, system-laws, functor-laws,
/// adjunction or theorem2. Instance sizes are derived from `cfg`; the seed
/// fixes every instance. Throws SchemaError for an unknown name.
SuiteResult run_suite(const std::string& name, const GeneratorConfig& cfg);

}  // namespace graded_topos
