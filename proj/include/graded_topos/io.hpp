#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graded_topos/frame.hpp"
#include "graded_topos/fuzzy_set.hpp"
#include "graded_topos/logic.hpp"
#include "graded_topos/space.hpp"
#include "graded_topos/system.hpp"

namespace graded_topos {

// JSON load/save. Loaders check structure only (totality, ranges, grades in
// [0,1]); the axioms are left to the check_* functions. Savers emit canonical
// text: sorted keys, two-space indent, trailing newline, grades as "p/q".
// Loaders throw ParseError for malformed JSON and SchemaError otherwise.
// `path` only labels error messages.

FuzzySet load_fuzzy_set(std::string_view text, std::string_view path = "<input>");
std::string save_fuzzy_set(const FuzzySet& set);

PointMap load_point_map(std::string_view text, std::string_view path = "<input>");
std::string save_point_map(const PointMap& map);

GradedSpace load_space(std::string_view text, std::string_view path = "<input>");
std::string save_space(const GradedSpace& space);

/// Join keys list subset elements sorted by name, comma joined; "" is the
/// empty subset. Carriers above 20 elements are rejected (SchemaError on load,
/// Overflow on save).
GradedFrame load_frame(std::string_view text, std::string_view path = "<input>");
std::string save_frame(const GradedFrame& frame);

/// Throws EmptyPoints for an empty point list.
GradedSystem load_system(std::string_view text, std::string_view path = "<input>");
std::string save_system(const GradedSystem& system);

Interpretation load_interpretation(std::string_view text,
                                   std::string_view path = "<input>");
std::string save_interpretation(const Interpretation& interp);

/// Formulas and optional quantifier variables and terms for the sequent suite:
/// {"formulas": ["..."], "variables": ["x1"], "terms": ["c1"]}.
struct FormulaPool {
  std::vector<Formula> formulas;
  std::vector<unsigned> variables;
  std::vector<Term> terms;
};

FormulaPool load_pool(std::string_view text, const Signature& sig,
                      std::string_view path = "<input>");
std::string save_pool(const FormulaPool& pool);

/// Whole file contents. Throws ParseError if the file cannot be read.
std::string read_file(const std::string& path);
/// Throws Error if the file cannot be written.
void write_file(const std::string& path, std::string_view contents);

}  // namespace graded_topos
