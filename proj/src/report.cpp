#include "graded_topos/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace graded_topos {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return {};
}

Report make_report(const Tally& tally, double elapsed_ms) {
  Report r;
  r.subject = tally.subject;
  r.regime = tally.regime;
  r.witnesses = tally.failures;
  r.elapsed_ms = elapsed_ms;
  r.checked = tally.checked;
  r.skipped = tally.skipped;
  if (!tally.ok()) {
    r.status = Status::fail;
  } else if (tally.checked == 0) {
    r.status = Status::skipped;
  }
  return r;
}

Report make_report(std::string subject, const Verdict& verdict, double elapsed_ms) {
  Report r;
  r.subject = std::move(subject);
  r.regime = verdict.regime;
  r.elapsed_ms = elapsed_ms;
  r.checked = 1;
  if (!verdict.ok) {
    r.status = Status::fail;
    for (Witness w : verdict.witnesses) {
      w.location = verdict.clause + (w.location.empty() ? "" : ": " + w.location);
      r.witnesses.push_back(std::move(w));
    }
    if (r.witnesses.empty()) r.witnesses.push_back(Witness{verdict.clause, "", ""});
  }
  return r;
}

std::string to_json_line(const Report& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Witness& w : r.witnesses) {
    witnesses.push_back({{"actual", w.actual}, {"expected", w.expected}, {"location", w.location}});
  }
  nlohmann::json j{{"checked", r.checked},
                   {"elapsed_ms", r.elapsed_ms},
                   {"regime", to_string(r.regime)},
                   {"skipped", r.skipped},
                   {"status", to_string(r.status)},
                   {"subject", r.subject},
                   {"witnesses", std::move(witnesses)}};
  return j.dump();
}

void emit_json(std::ostream& out, std::span<const Report> reports) {
  for (const Report& r : reports) out << to_json_line(r) << '\n';
}

void emit_summary(std::ostream& out, std::span<const Report> reports) {
  std::size_t failed = 0;
  for (const Report& r : reports) {
    out << (r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : "SKIP ")
        << r.subject << " (" << r.checked << " checked";
    if (r.skipped) out << ", " << r.skipped << " skipped";
    out << ", " << to_string(r.regime) << ")\n";
    if (r.status == Status::fail) ++failed;
    for (const Witness& w : r.witnesses) {
      out << "    at " << w.location;
      if (!w.expected.empty() || !w.actual.empty()) {
        out << ": expected " << w.expected << ", got " << w.actual;
      }
      out << '\n';
    }
  }
  out << reports.size() - failed << "/" << reports.size() << " checks passed\n";
}

int exit_code(std::span<const Report> reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const Report& r) { return r.status == Status::fail; })
             ? 1
             : 0;
}

void merge_tallies(std::vector<Tally>& into, std::span<const Tally> more) {
  for (const Tally& t : more) {
    auto it = std::find_if(into.begin(), into.end(),
                           [&](const Tally& x) { return x.subject == t.subject; });
    if (it == into.end()) {
      into.push_back(t);
      continue;
    }
    it->checked += t.checked;
    it->skipped += t.skipped;
    it->failed += t.failed;
    if (t.regime == Regime::sampled) it->regime = Regime::sampled;
    for (const Witness& w : t.failures) {
      if (it->failures.size() >= 16) break;
      it->failures.push_back(w);
    }
  }
}

}  // namespace graded_topos
