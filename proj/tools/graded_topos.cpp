// graded-topos: command-line front end for the graded topology checkers.
//
// Exit codes: 0 pass, 1 violation found, 2 input error.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graded_topos/errors.hpp"
#include "graded_topos/functors.hpp"
#include "graded_topos/io.hpp"
#include "graded_topos/logic.hpp"
#include "graded_topos/report.hpp"
#include "graded_topos/suites.hpp"

namespace gt = graded_topos;

namespace {

constexpr int kInputError = 2;

int finish(const std::vector<gt::Report>& reports) {
  gt::emit_json(std::cout, reports);
  gt::emit_summary(std::cerr, reports);
  return gt::exit_code(reports);
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

enum class Kind { space, frame, system };

// Guesses the structure in a JSON file from its distinguishing key.
Kind sniff(const std::string& text) {
  if (text.find("\"points\"") != std::string::npos) return Kind::system;
  if (text.find("\"carrier\"") != std::string::npos) return Kind::frame;
  return Kind::space;
}

gt::GradeSet grades_or(const std::string& option, const gt::GradeSet& fallback) {
  return option.empty() ? fallback : gt::GradeSet::parse(option);
}

int check(const std::string& what, const std::string& path) {
  const std::string text = gt::read_file(path);
  const auto opts = gt::CheckOptions::from_environment();
  const auto start = std::chrono::steady_clock::now();
  gt::Verdict v;
  if (what == "space") {
    v = gt::check_space(gt::load_space(text, path));
  } else if (what == "frame") {
    v = gt::check_frame(gt::load_frame(text, path), opts);
  } else {
    try {
      v = gt::check_system(gt::load_system(text, path), opts);
    } catch (const gt::EmptyPoints& e) {
      v = gt::Verdict::fail("non-empty points", {"points", "non-empty", "empty"});
    }
  }
  return finish({gt::make_report(what, v, since(start))});
}

int spatiality(const std::string& path) {
  const gt::GradedSystem s = gt::load_system(gt::read_file(path), path);
  const auto start = std::chrono::steady_clock::now();
  const gt::Verdict spatial = gt::check_spatial(s);
  const gt::Equivalence e = gt::check_spatial_equivalence(s);
  std::vector<gt::Report> reports{gt::make_report("spatial", spatial, since(start))};
  gt::Verdict agree = gt::Verdict::pass();
  if (!e.consistent()) {
    agree = gt::Verdict::fail("counit iso", {"counit", e.spatial ? "iso" : "not iso",
                                             e.counit_iso ? "iso" : "not iso"});
  }
  reports.push_back(gt::make_report("spatial-equivalence", agree, since(start)));
  return finish(reports);
}

int functor(const std::string& which, const std::string& in, const std::string& out,
            const std::string& grades) {
  const std::string text = gt::read_file(in);
  std::string result;
  if (which == "ext") {
    result = gt::save_space(gt::ext_object(gt::load_system(text, in)));
  } else if (which == "j") {
    result = gt::save_system(gt::j_object(gt::load_space(text, in)));
  } else if (which == "fm") {
    result = gt::save_frame(gt::fm_object(gt::load_system(text, in)));
  } else {
    const gt::GradedFrame frame = gt::load_frame(text, in);
    result = gt::save_system(gt::s_object(frame, grades_or(grades, gt::GradeSet::occurring_in(frame))));
  }
  gt::write_file(out, result);
  return 0;
}

std::vector<gt::Report> law_reports(const std::vector<gt::LawCheck>& checks, double ms) {
  std::vector<gt::Report> out;
  for (const auto& c : checks) out.push_back(gt::make_report(c.law, c.verdict, ms));
  return out;
}

int adjunction(const std::string& which, const std::string& in, const std::string& grades) {
  const std::string text = gt::read_file(in);
  const Kind kind = sniff(text);
  const auto start = std::chrono::steady_clock::now();
  std::vector<gt::LawCheck> checks;
  if (which == "j-ext") {
    if (kind == Kind::system) {
      const gt::GradedSystem s = gt::load_system(text, in);
      checks = gt::check_triangles_j_ext(s);
      checks.push_back({"J-Ext counit naturality",
                        gt::check_naturality_counit(gt::counit(s), gt::j_object(gt::ext_object(s)), s)});
    } else {
      const gt::GradedSpace space = gt::load_space(text, in);
      checks = gt::check_triangles_j_ext(space);
      checks.push_back({"unit-space-iso", gt::space_iso_check(gt::unit_space(space), space,
                                                              gt::ext_object(gt::j_object(space)))});
    }
  } else {
    try {
      if (kind == Kind::system) {
        const gt::GradedSystem s = gt::load_system(text, in);
        checks = gt::check_triangles_fm_s(s, grades_or(grades, gt::GradeSet::occurring_in(s)));
      } else {
        const gt::GradedFrame f = gt::load_frame(text, in);
        checks = gt::check_triangles_fm_s(f, grades_or(grades, gt::GradeSet::occurring_in(f)));
      }
    } catch (const gt::NoPoints& e) {
      gt::Report r;
      r.subject = "fm-S triangles";
      r.status = gt::Status::skipped;
      r.witnesses.push_back({"points", "at least one", e.what()});
      return finish({r});
    }
  }
  return finish(law_reports(checks, since(start)));
}

int eval(const std::string& interp_path, const std::string& formula, const std::string& assign) {
  const gt::Interpretation interp = gt::load_interpretation(gt::read_file(interp_path), interp_path);
  const gt::Formula phi = gt::parse_formula(formula, interp.signature());
  const gt::Assignment s = gt::parse_assignment(assign, interp.domain());
  std::cout << gt::sat_grade(interp, s, phi).str() << '\n';
  return 0;
}

int consequence(const std::string& interp_path, const std::string& lhs, const std::string& rhs) {
  const gt::Interpretation interp = gt::load_interpretation(gt::read_file(interp_path), interp_path);
  const gt::Formula phi = gt::parse_formula(lhs, interp.signature());
  const gt::Formula psi = gt::parse_formula(rhs, interp.signature());
  std::cout << gt::sequent_grade(interp, phi, psi).str() << '\n';
  return 0;
}

int sequent_laws(const std::string& interp_path, const std::string& pool_path) {
  const gt::Interpretation interp = gt::load_interpretation(gt::read_file(interp_path), interp_path);
  const gt::FormulaPool pool = gt::load_pool(gt::read_file(pool_path), interp.signature(), pool_path);
  gt::SequentSuiteOptions opts;
  opts.variables = pool.variables;
  opts.terms = pool.terms;
  const auto start = std::chrono::steady_clock::now();
  const auto tallies = gt::sequent_properties(interp, pool.formulas, opts);
  const double ms = since(start);
  std::vector<gt::Report> reports;
  for (const auto& t : tallies) reports.push_back(gt::make_report(t, ms));
  return finish(reports);
}

int suite(const std::string& name, gt::GeneratorConfig cfg) {
  return finish(gt::run_suite(name, cfg).reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checkers for graded fuzzy topologies, frames and systems"};
  app.require_subcommand(1);

  std::string what, file, in, out, grades, interp, formula, assign, lhs, rhs, pool, name;
  gt::GeneratorConfig cfg;

  auto* check_cmd = app.add_subcommand("check", "Check the axioms of a space, frame or system");
  check_cmd->add_option("kind", what)->required()->check(CLI::IsMember({"space", "frame", "system"}));
  check_cmd->add_option("file", file)->required();

  auto* spatial_cmd = app.add_subcommand("spatiality", "Test whether a system is spatial");
  spatial_cmd->add_option("file", file)->required();

  auto* functor_cmd = app.add_subcommand("functor", "Apply Ext, J, fm or S to a file");
  functor_cmd->add_option("which", what)->required()->check(CLI::IsMember({"ext", "j", "fm", "s"}));
  functor_cmd->add_option("--in", in)->required();
  functor_cmd->add_option("--out", out)->required();
  functor_cmd->add_option("--grades", grades, "Grade set for S, e.g. 0,1/2,1");

  auto* adj_cmd = app.add_subcommand("adjunction-test", "Check triangle identities on a file");
  adj_cmd->add_option("which", what)->required()->check(CLI::IsMember({"j-ext", "fm-s"}));
  adj_cmd->add_option("--in", in)->required();
  adj_cmd->add_option("--grades", grades, "Grade set for S, e.g. 0,1/2,1");

  auto* eval_cmd = app.add_subcommand("eval", "Grade to which an assignment satisfies a formula");
  eval_cmd->add_option("--interp", interp)->required();
  eval_cmd->add_option("--formula", formula)->required();
  eval_cmd->add_option("--assign", assign, "x1=d1,x2=d2");

  auto* cons_cmd = app.add_subcommand("consequence", "Grade of the sequent lhs |- rhs");
  cons_cmd->add_option("--interp", interp)->required();
  cons_cmd->add_option("--lhs", lhs)->required();
  cons_cmd->add_option("--rhs", rhs)->required();

  auto* seq_cmd = app.add_subcommand("theorem2", "Check the sequent laws over a formula pool");
  seq_cmd->add_option("--interp", interp)->required();
  seq_cmd->add_option("--pool", pool)->required();

  auto* suite_cmd = app.add_subcommand("suite", "Run a randomized law suite");
  suite_cmd->add_option("name", name)->required()->check(CLI::IsMember(gt::suite_names()));
  suite_cmd->add_option("--seed", cfg.seed)->required();
  suite_cmd->add_option("--max-points", cfg.max_points);
  suite_cmd->add_option("--max-generators", cfg.max_generators);
  suite_cmd->add_option("--max-carrier", cfg.max_carrier);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*check_cmd) return check(what, file);
    if (*spatial_cmd) return spatiality(file);
    if (*functor_cmd) return functor(what, in, out, grades);
    if (*adj_cmd) return adjunction(what, in, grades);
    if (*eval_cmd) return eval(interp, formula, assign);
    if (*cons_cmd) return consequence(interp, lhs, rhs);
    if (*seq_cmd) return sequent_laws(interp, pool);
    if (*suite_cmd) return suite(name, cfg);
  } catch (const gt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
