#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "graded_topos/verdict.hpp"

namespace graded_topos {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

/// Outcome of one named check, ready for emission.
struct Report {
  std::string subject;
  Status status = Status::pass;
  Regime regime = Regime::exhaustive;
  std::vector<Witness> witnesses;
  double elapsed_ms = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;
};

/// Failing tallies become fail reports; tallies with nothing checked become
/// skipped reports.
Report make_report(const Tally& tally, double elapsed_ms = 0);
/// A failing verdict with no witness gets one naming its clause.
Report make_report(std::string subject, const Verdict& verdict, double elapsed_ms = 0);

/// One JSON object, no trailing newline.
std::string to_json_line(const Report& r);
/// Writes one JSON line per report.
void emit_json(std::ostream& out, std::span<const Report> reports);
/// Human-readable summary, one line per report plus witnesses of failures.
void emit_summary(std::ostream& out, std::span<const Report> reports);

/// 0 if no report failed, else 1.
int exit_code(std::span<const Report> reports);

/// Adds the counts and witnesses of `more` into the tally of the same subject
/// in `into`, appending a new tally for unseen subjects.
void merge_tallies(std::vector<Tally>& into, std::span<const Tally> more);

}  // namespace graded_topos
