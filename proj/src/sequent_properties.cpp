#include <map>

#include "graded_topos/errors.hpp"
#include "graded_topos/logic.hpp"

namespace graded_topos {

namespace {

class Sequents {
 public:
  explicit Sequents(const Interpretation& interp) : interp_(interp) {}

  Grade operator()(const Formula& phi, const Formula& psi) {
    auto key = std::make_pair(phi.str(), psi.str());
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const Grade g = sequent_grade(interp_, phi, psi);
    memo_.emplace(std::move(key), g);
    return g;
  }

 private:
  const Interpretation& interp_;
  std::map<std::pair<std::string, std::string>, Grade> memo_;
};

std::string sequent(const Formula& phi, const Formula& psi) {
  return phi.str() + " |- " + psi.str();
}

void expect_one(Tally& tally, Sequents& gr, const Formula& phi, const Formula& psi) {
  const Grade g = gr(phi, psi);
  tally.record(g.is_one(), [&] { return Witness{sequent(phi, psi), "1/1", g.str()}; });
}

// Non-empty sublists of pool, in order, of length at most k.
std::vector<std::vector<Formula>> sublists(std::span<const Formula> pool, std::size_t k) {
  std::vector<std::vector<Formula>> out;
  std::vector<Formula> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!current.empty()) out.push_back(current);
    if (current.size() == k) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

constexpr std::size_t kMaxTuples = 64;

}  // namespace

std::vector<Tally> sequent_properties(const Interpretation& interp,
                                      std::span<const Formula> pool,
                                      const SequentSuiteOptions& opts) {
  std::vector<unsigned> vars = opts.variables;
  if (vars.empty()) {
    std::set<unsigned> all{1};
    for (const Formula& f : pool) all.merge(free_variables(f));
    vars.assign(all.begin(), all.end());
  }
  std::vector<Term> terms = opts.terms;
  if (terms.empty()) {
    for (unsigned v : vars) terms.push_back(Term::variable(v));
    for (const auto& [c, value] : interp.constants()) terms.push_back(Term::constant(c));
  }
  const auto subsets = sublists(pool, opts.max_disjunction);

  Sequents gr(interp);
  std::vector<Tally> out;
  auto tally = [&](const char* name) -> Tally& {
    out.push_back(Tally{});
    out.back().subject = name;
    return out.back();
  };
  out.reserve(14);

  Tally& t1 = tally("sequent-identity");
  for (const Formula& phi : pool) expect_one(t1, gr, phi, phi);

  Tally& t2 = tally("sequent-cut");
  for (const Formula& phi : pool) {
    for (const Formula& psi : pool) {
      for (const Formula& chi : pool) {
        const Grade lhs = meet(gr(phi, psi), gr(psi, chi));
        const Grade rhs = gr(phi, chi);
        t2.record(lhs <= rhs, [&] {
          return Witness{"min(" + sequent(phi, psi) + ", " + sequent(psi, chi) + ") <= " +
                             sequent(phi, chi),
                         "<= " + rhs.str(), lhs.str()};
        });
      }
    }
  }

  Tally& t3i = tally("sequent-top");
  for (const Formula& phi : pool) expect_one(t3i, gr, phi, Formula::top());

  Tally& t3ii = tally("sequent-conj-left");
  Tally& t3iii = tally("sequent-conj-right");
  for (const Formula& phi : pool) {
    for (const Formula& psi : pool) {
      const Formula both = Formula::conjunction(phi, psi);
      expect_one(t3ii, gr, both, phi);
      expect_one(t3iii, gr, both, psi);
    }
  }

  Tally& t3iv = tally("sequent-conj-intro");
  for (const Formula& phi : pool) {
    for (const Formula& psi : pool) {
      for (const Formula& chi : pool) {
        const Formula both = Formula::conjunction(psi, chi);
        const Grade lhs = meet(gr(phi, psi), gr(phi, chi));
        const Grade rhs = gr(phi, both);
        t3iv.record(lhs == rhs, [&] {
          return Witness{sequent(phi, both), lhs.str(), rhs.str()};
        });
      }
    }
  }

  Tally& t4i = tally("sequent-disj-intro");
  Tally& t4ii = tally("sequent-disj-elim");
  for (const auto& s : subsets) {
    const Formula disj = Formula::disjunction(s);
    for (const Formula& phi : s) expect_one(t4i, gr, phi, disj);
    for (const Formula& psi : pool) {
      Grade lhs = Grade::one();
      for (const Formula& phi : s) lhs = meet(lhs, gr(phi, psi));
      const Grade rhs = gr(disj, psi);
      t4ii.record(lhs <= rhs, [&] {
        return Witness{sequent(disj, psi), ">= " + lhs.str(), rhs.str()};
      });
    }
  }

  Tally& t5 = tally("sequent-distributivity");
  for (const Formula& phi : pool) {
    for (const auto& s : subsets) {
      std::vector<Formula> distributed;
      for (const Formula& psi : s) distributed.push_back(Formula::conjunction(phi, psi));
      expect_one(t5, gr, Formula::conjunction(phi, Formula::disjunction(s)),
                 Formula::disjunction(std::move(distributed)));
    }
  }

  Tally& t6 = tally("sequent-equality-refl");
  for (unsigned x : vars) {
    expect_one(t6, gr, Formula::top(),
               Formula::equality(Term::variable(x), Term::variable(x)));
  }

  Tally& t7 = tally("sequent-equality-subst");
  for (const Formula& phi : pool) {
    const auto fv = free_variables(phi);
    const std::vector<unsigned> xs(fv.begin(), fv.end());
    std::vector<std::size_t> pick(xs.size(), 0);
    for (std::size_t n = 0; n < kMaxTuples; ++n) {
      std::vector<unsigned> ys;
      Substitution sub;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ys.push_back(vars[pick[i]]);
        sub.emplace_back(xs[i], Term::variable(ys.back()));
      }
      try {
        expect_one(t7, gr, Formula::conjunction(tuple_equality(xs, ys), phi),
                   substitute(phi, sub));
      } catch (const CaptureViolation&) {
        t7.skip();
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == vars.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }

  Tally& t8i = tally("sequent-exists-intro");
  Tally& t8ii = tally("sequent-exists-elim");
  for (const Formula& phi : pool) {
    for (const Formula& psi : pool) {
      for (unsigned y : vars) {
        const Formula ex_psi = Formula::exists(y, psi);
        const Formula ex_phi = Formula::exists(y, phi);
        for (const Term& t : terms) {
          const Substitution sub{{y, t}};
          try {
            const Formula psi_t = substitute(psi, sub);
            const Grade lhs = gr(phi, psi_t);
            const Grade rhs = gr(phi, ex_psi);
            t8i.record(lhs <= rhs, [&] {
              return Witness{sequent(phi, ex_psi), ">= " + lhs.str(), rhs.str()};
            });
          } catch (const CaptureViolation&) {
            t8i.skip();
          }
          try {
            const Formula phi_t = substitute(phi, sub);
            const Grade lhs = gr(ex_phi, psi);
            const Grade rhs = gr(phi_t, psi);
            t8ii.record(lhs <= rhs, [&] {
              return Witness{sequent(phi_t, psi), ">= " + lhs.str(), rhs.str()};
            });
          } catch (const CaptureViolation&) {
            t8ii.skip();
          }
        }
      }
    }
  }

  Tally& t9 = tally("sequent-frobenius");
  for (const Formula& phi : pool) {
    const auto fv = free_variables(phi);
    for (const Formula& psi : pool) {
      for (unsigned y : vars) {
        if (fv.count(y)) {
          t9.skip();
          continue;
        }
        expect_one(t9, gr, Formula::conjunction(phi, Formula::exists(y, psi)),
                   Formula::exists(y, Formula::conjunction(phi, psi)));
      }
    }
  }

  return out;
}

}  // namespace graded_topos
