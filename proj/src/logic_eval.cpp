#include <algorithm>

#include "graded_topos/errors.hpp"
#include "graded_topos/logic.hpp"

namespace graded_topos {

std::size_t eval_term(const Interpretation& interp, const Assignment& s,
                      const Term& t) {
  switch (t.kind()) {
    case Term::Kind::constant: {
      const auto it = interp.constants().find(t.index());
      if (it == interp.constants().end()) throw UndeclaredSymbol(t.str());
      return it->second;
    }
    case Term::Kind::variable: {
      const auto it = s.find(t.index());
      if (it == s.end()) throw UnboundVariable(t.index());
      return it->second;
    }
    case Term::Kind::function: break;
  }
  const auto it = interp.functions().find(t.symbol());
  if (it == interp.functions().end()) throw UndeclaredSymbol(t.symbol());
  if (it->second.arity != t.args().size()) throw ArityMismatch(t.symbol());
  std::vector<std::size_t> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(eval_term(interp, s, a));
  return it->second.values[interp.row(args)];
}

namespace {

Grade sat(const Interpretation& interp, Assignment& s, const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::top: return Grade::one();
    case Formula::Kind::bottom: return Grade::zero();
    case Formula::Kind::predicate: {
      const auto it = interp.predicates().find(phi.symbol());
      if (it == interp.predicates().end()) throw UndeclaredSymbol(phi.symbol());
      if (it->second.arity != phi.terms().size()) throw ArityMismatch(phi.symbol());
      std::vector<std::size_t> args;
      args.reserve(phi.terms().size());
      for (const Term& t : phi.terms()) args.push_back(eval_term(interp, s, t));
      return it->second.values[interp.row(args)];
    }
    case Formula::Kind::equality:
      return eval_term(interp, s, phi.terms()[0]) ==
                     eval_term(interp, s, phi.terms()[1])
                 ? Grade::one()
                 : Grade::zero();
    case Formula::Kind::conjunction: {
      const Grade a = sat(interp, s, phi.operands()[0]);
      if (a.is_zero()) return a;
      return meet(a, sat(interp, s, phi.operands()[1]));
    }
    case Formula::Kind::disjunction: {
      Grade g = Grade::zero();
      for (const Formula& d : phi.operands()) {
        g = join(g, sat(interp, s, d));
        if (g.is_one()) break;
      }
      return g;
    }
    case Formula::Kind::exists: {
      const unsigned x = phi.variable();
      const auto saved = s.find(x);
      const bool had = saved != s.end();
      const std::size_t old = had ? saved->second : 0;
      Grade g = Grade::zero();
      for (std::size_t d = 0; d < interp.domain().size() && !g.is_one(); ++d) {
        s[x] = d;
        g = join(g, sat(interp, s, phi.operands()[0]));
      }
      if (had) {
        s[x] = old;
      } else {
        s.erase(x);
      }
      return g;
    }
  }
  return Grade::zero();
}

}  // namespace

Grade sat_grade(const Interpretation& interp, const Assignment& s,
                const Formula& phi) {
  Assignment work = s;
  return sat(interp, work, phi);
}

Grade sequent_grade(const Interpretation& interp, const Formula& phi,
                    const Formula& psi) {
  std::set<unsigned> fv = free_variables(phi);
  fv.merge(free_variables(psi));
  const std::vector<unsigned> vars(fv.begin(), fv.end());
  const std::size_t d = interp.domain().size();

  std::vector<std::size_t> values(vars.size(), 0);
  Assignment s;
  Grade g = Grade::one();
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) s[vars[i]] = values[i];
    g = meet(g, godel_arrow(sat(interp, s, phi), sat(interp, s, psi)));
    if (g.is_zero()) return g;
    std::size_t i = 0;
    while (i < values.size() && ++values[i] == d) values[i++] = 0;
    if (i == values.size()) break;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Variables and substitution

std::set<unsigned> variables(const Term& t) {
  if (t.kind() == Term::Kind::variable) return {t.index()};
  std::set<unsigned> out;
  for (const Term& a : t.args()) out.merge(variables(a));
  return out;
}

std::set<unsigned> free_variables(const Formula& phi) {
  std::set<unsigned> out;
  switch (phi.kind()) {
    case Formula::Kind::top:
    case Formula::Kind::bottom:
      break;
    case Formula::Kind::predicate:
    case Formula::Kind::equality:
      for (const Term& t : phi.terms()) out.merge(variables(t));
      break;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
      for (const Formula& f : phi.operands()) out.merge(free_variables(f));
      break;
    case Formula::Kind::exists:
      out = free_variables(phi.operands()[0]);
      out.erase(phi.variable());
      break;
  }
  return out;
}

Term substitute(const Term& t, const Substitution& pairs) {
  switch (t.kind()) {
    case Term::Kind::constant: return t;
    case Term::Kind::variable:
      for (const auto& [x, u] : pairs) {
        if (x == t.index()) return u;
      }
      return t;
    case Term::Kind::function: break;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute(a, pairs));
  return Term::apply(t.symbol(), std::move(args));
}

Formula substitute(const Formula& phi, const Substitution& pairs) {
  switch (phi.kind()) {
    case Formula::Kind::top:
    case Formula::Kind::bottom:
      return phi;
    case Formula::Kind::predicate: {
      std::vector<Term> args;
      for (const Term& t : phi.terms()) args.push_back(substitute(t, pairs));
      return Formula::predicate(phi.symbol(), std::move(args));
    }
    case Formula::Kind::equality:
      return Formula::equality(substitute(phi.terms()[0], pairs),
                               substitute(phi.terms()[1], pairs));
    case Formula::Kind::conjunction:
      return Formula::conjunction(substitute(phi.operands()[0], pairs),
                                  substitute(phi.operands()[1], pairs));
    case Formula::Kind::disjunction: {
      std::vector<Formula> ds;
      for (const Formula& d : phi.operands()) ds.push_back(substitute(d, pairs));
      return Formula::disjunction(std::move(ds));
    }
    case Formula::Kind::exists: break;
  }
  const unsigned y = phi.variable();
  const Formula& body = phi.operands()[0];
  const auto fv = free_variables(body);
  Substitution inner;
  for (const auto& [x, t] : pairs) {
    if (x == y || !fv.count(x)) continue;
    if (variables(t).count(y)) throw CaptureViolation(y);
    inner.emplace_back(x, t);
  }
  if (inner.empty()) return phi;
  return Formula::exists(y, substitute(body, inner));
}

Formula tuple_equality(std::span<const unsigned> lhs, std::span<const unsigned> rhs) {
  if (lhs.size() != rhs.size()) {
    throw SchemaError("tuple equality between tuples of different length");
  }
  if (lhs.empty()) return Formula::top();
  Formula out = Formula::equality(Term::variable(lhs[0]), Term::variable(rhs[0]));
  for (std::size_t i = 1; i < lhs.size(); ++i) {
    out = Formula::conjunction(
        out, Formula::equality(Term::variable(lhs[i]), Term::variable(rhs[i])));
  }
  return out;
}

}  // namespace graded_topos
