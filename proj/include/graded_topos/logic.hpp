#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graded_topos/fuzzy_set.hpp"
#include "graded_topos/grade.hpp"
#include "graded_topos/verdict.hpp"

namespace graded_topos {

/// Constant c<i>, variable x<i>, or a function symbol applied to terms.
class Term {
 public:
  enum class Kind { constant, variable, function };

  static Term constant(unsigned index);
  static Term variable(unsigned index);
  static Term apply(std::string symbol, std::vector<Term> args);

  Kind kind() const noexcept { return node_->kind; }
  unsigned index() const noexcept { return node_->index; }
  const std::string& symbol() const noexcept { return node_->symbol; }
  std::span<const Term> args() const noexcept { return node_->args; }

  std::string str() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    unsigned index = 0;
    std::string symbol;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Geometric formulas: T, F, predicates, equality, binary conjunction, finite
/// non-empty disjunction and existential quantification. Immutable; subtrees
/// are shared between copies.
class Formula {
 public:
  enum class Kind { top, bottom, predicate, equality, conjunction, disjunction, exists };

  static Formula top();
  static Formula bottom();
  static Formula predicate(std::string symbol, std::vector<Term> args);
  static Formula equality(Term lhs, Term rhs);
  static Formula conjunction(Formula lhs, Formula rhs);
  /// Throws SchemaError on an empty list.
  static Formula disjunction(std::vector<Formula> disjuncts);
  static Formula exists(unsigned variable, Formula body);

  Kind kind() const noexcept { return node_->kind; }
  const std::string& symbol() const noexcept { return node_->symbol; }
  /// Predicate arguments, or the two sides of an equality.
  std::span<const Term> terms() const noexcept { return node_->terms; }
  /// Conjuncts, disjuncts, or the single body of an existential.
  std::span<const Formula> operands() const noexcept { return node_->operands; }
  /// The bound variable of an existential.
  unsigned variable() const noexcept { return node_->variable; }

  /// Concrete syntax accepted by parse_formula.
  std::string str() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string symbol;
    std::vector<Term> terms;
    std::vector<Formula> operands;
    unsigned variable = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Declared constants and symbol arities.
struct Signature {
  std::set<unsigned> constants;
  std::map<std::string, std::size_t> functions;
  std::map<std::string, std::size_t> predicates;
};

/// Throws SyntaxError, ArityMismatch or UndeclaredSymbol.
Formula parse_formula(std::string_view text, const Signature& sig);
Term parse_term(std::string_view text, const Signature& sig);

/// Function table D^arity -> D, row-major with the first argument most
/// significant.
struct FunctionTable {
  std::size_t arity = 0;
  std::vector<std::size_t> values;
};

/// Fuzzy relation D^arity -> [0,1], same layout as FunctionTable.
struct PredicateTable {
  std::size_t arity = 0;
  std::vector<Grade> values;
};

/// A finite model: domain, constants, function and predicate tables.
class Interpretation {
 public:
  /// Throws SchemaError on non-total tables, zero arities, out-of-range
  /// values, or symbol names that clash with the formula syntax.
  Interpretation(Universe domain, std::map<unsigned, std::size_t> constants,
                 std::map<std::string, FunctionTable> functions,
                 std::map<std::string, PredicateTable> predicates);

  const Universe& domain() const noexcept { return domain_; }
  const std::map<unsigned, std::size_t>& constants() const noexcept {
    return constants_;
  }
  const std::map<std::string, FunctionTable>& functions() const noexcept {
    return functions_;
  }
  const std::map<std::string, PredicateTable>& predicates() const noexcept {
    return predicates_;
  }
  const Signature& signature() const noexcept { return signature_; }

  /// Index into a table for the given argument tuple.
  std::size_t row(std::span<const std::size_t> args) const noexcept;

 private:
  Universe domain_;
  std::map<unsigned, std::size_t> constants_;
  std::map<std::string, FunctionTable> functions_;
  std::map<std::string, PredicateTable> predicates_;
  Signature signature_;
};

/// Values of the relevant variables; everything else is unbound.
using Assignment = std::map<unsigned, std::size_t>;

/// Parses "x1=d1,x2=d2" against the domain. Throws SchemaError.
Assignment parse_assignment(std::string_view text, const Universe& domain);

/// Throws UnboundVariable or UndeclaredSymbol.
std::size_t eval_term(const Interpretation& interp, const Assignment& s,
                      const Term& t);

/// Grade to which `s` satisfies `phi`. Throws UnboundVariable or
/// UndeclaredSymbol.
Grade sat_grade(const Interpretation& interp, const Assignment& s,
                const Formula& phi);

/// inf over assignments of the free variables of phi and psi of
/// sat(phi) -> sat(psi) with the Goedel arrow.
Grade sequent_grade(const Interpretation& interp, const Formula& phi,
                    const Formula& psi);

std::set<unsigned> free_variables(const Formula& phi);
std::set<unsigned> variables(const Term& t);

using Substitution = std::vector<std::pair<unsigned, Term>>;

/// Simultaneous capture-avoiding substitution of terms for free variables.
/// Throws CaptureViolation when a substituted term would be captured.
Formula substitute(const Formula& phi, const Substitution& pairs);
Term substitute(const Term& t, const Substitution& pairs);

/// Conjunction of (lhs_i = rhs_i); T when both are empty.
Formula tuple_equality(std::span<const unsigned> lhs, std::span<const unsigned> rhs);

struct SequentSuiteOptions {
  /// Disjunction sets are the non-empty sublists of the pool up to this size.
  std::size_t max_disjunction = 3;
  /// Variables used for x = x and the quantifier clauses; empty means the
  /// free variables of the pool plus x1.
  std::vector<unsigned> variables;
  /// Terms substituted in the quantifier clauses; empty means the chosen
  /// variables plus the declared constants.
  std::vector<Term> terms;
};

/// Evaluates the structural laws of graded sequents over all applicable
/// tuples from `pool`, one tally per law: sequent-identity, sequent-cut,
/// sequent-top, sequent-conj-left, sequent-conj-right, sequent-conj-intro,
/// sequent-disj-intro, sequent-disj-elim, sequent-distributivity,
/// sequent-equality-refl, sequent-equality-subst, sequent-exists-intro,
/// sequent-exists-elim and sequent-frobenius. Instances whose substitution
/// would capture a variable, and frobenius instances where the bound variable
/// is free on the left, are counted as skipped.
std::vector<Tally> sequent_properties(const Interpretation& interp,
                                      std::span<const Formula> pool,
                                      const SequentSuiteOptions& opts = {});

}  // namespace graded_topos
