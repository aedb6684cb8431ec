#include "graded_topos/logic.hpp"

#include <cctype>

#include "graded_topos/errors.hpp"

namespace graded_topos {

// ---------------------------------------------------------------------------
// Terms and formulas

Term Term::constant(unsigned index) {
  return Term(std::make_shared<const Node>(Node{Kind::constant, index, {}, {}}));
}

Term Term::variable(unsigned index) {
  return Term(std::make_shared<const Node>(Node{Kind::variable, index, {}, {}}));
}

Term Term::apply(std::string symbol, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(
      Node{Kind::function, 0, std::move(symbol), std::move(args)}));
}

std::string Term::str() const {
  switch (kind()) {
    case Kind::constant: return "c" + std::to_string(index());
    case Kind::variable: return "x" + std::to_string(index());
    case Kind::function: break;
  }
  std::string out = symbol() + "(";
  for (std::size_t i = 0; i < args().size(); ++i) {
    if (i) out += ", ";
    out += args()[i].str();
  }
  return out + ")";
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.index() == b.index() &&
         a.symbol() == b.symbol() && a.node_->args == b.node_->args;
}

Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::top, {}, {}, {}, 0}));
  return t;
}

Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::bottom, {}, {}, {}, 0}));
  return f;
}

Formula Formula::predicate(std::string symbol, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::predicate, std::move(symbol), std::move(args), {}, 0}));
}

Formula Formula::equality(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::equality, {}, {std::move(lhs), std::move(rhs)}, {}, 0}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::conjunction, {}, {}, {std::move(lhs), std::move(rhs)}, 0}));
}

Formula Formula::disjunction(std::vector<Formula> disjuncts) {
  if (disjuncts.empty()) throw SchemaError("empty disjunction");
  return Formula(std::make_shared<const Node>(
      Node{Kind::disjunction, {}, {}, std::move(disjuncts), 0}));
}

Formula Formula::exists(unsigned variable, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::exists, {}, {}, {std::move(body)}, variable}));
}

std::string Formula::str() const {
  switch (kind()) {
    case Kind::top: return "T";
    case Kind::bottom: return "F";
    case Kind::predicate: {
      std::string out = symbol() + "(";
      for (std::size_t i = 0; i < terms().size(); ++i) {
        if (i) out += ", ";
        out += terms()[i].str();
      }
      return out + ")";
    }
    case Kind::equality:
      return "(" + terms()[0].str() + " = " + terms()[1].str() + ")";
    case Kind::conjunction:
      return "(" + operands()[0].str() + " & " + operands()[1].str() + ")";
    case Kind::disjunction: {
      if (operands().size() == 2) {
        return "(" + operands()[0].str() + " | " + operands()[1].str() + ")";
      }
      std::string out = "V[";
      for (std::size_t i = 0; i < operands().size(); ++i) {
        if (i) out += ", ";
        out += operands()[i].str();
      }
      return out + "]";
    }
    case Kind::exists:
      return "E x" + std::to_string(variable()) + ". " + operands()[0].str();
  }
  return {};
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.symbol() == b.symbol() &&
         a.variable() == b.variable() && a.node_->terms == b.node_->terms &&
         a.node_->operands == b.node_->operands;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_indexed(std::string_view word, char prefix) {
  if (word.size() < 2 || word[0] != prefix) return false;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(word[i]))) return false;
  }
  return true;
}

bool is_reserved(std::string_view word) {
  return word == "T" || word == "F" || word == "E" || word == "V" ||
         is_indexed(word, 'x') || is_indexed(word, 'c');
}

bool is_identifier(std::string_view word) {
  if (word.empty() || !std::isalpha(static_cast<unsigned char>(word[0]))) {
    return false;
  }
  for (char ch : word) {
    if (!std::isalnum(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Formula whole_formula() {
    Formula f = formula();
    finish();
    return f;
  }

  Term whole_term() {
    Term t = term();
    finish();
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what);
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() ||
        !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an identifier");
    }
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned index_of(const std::string& w) {
    if (w.size() > 7) fail("index too large in '" + w + "'");
    return static_cast<unsigned>(std::stoul(w.substr(1)));
  }

  bool starts_term() {
    const std::size_t saved = pos_;
    skip_ws();
    bool result = false;
    if (pos_ < text_.size() &&
        std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const std::string w = word();
      result = is_indexed(w, 'x') || is_indexed(w, 'c') ||
               sig_.functions.count(w) != 0;
    }
    pos_ = saved;
    return result;
  }

  std::vector<Term> arguments() {
    expect('(');
    std::vector<Term> args;
    do {
      args.push_back(term());
    } while (accept(','));
    expect(')');
    return args;
  }

  Term term() {
    const std::string w = word();
    if (is_indexed(w, 'x')) return Term::variable(index_of(w));
    if (is_indexed(w, 'c')) {
      const unsigned i = index_of(w);
      if (!sig_.constants.count(i)) throw UndeclaredSymbol(w);
      return Term::constant(i);
    }
    const auto it = sig_.functions.find(w);
    if (it == sig_.functions.end()) {
      if (sig_.predicates.count(w)) fail("predicate '" + w + "' used as a term");
      throw UndeclaredSymbol(w);
    }
    auto args = arguments();
    if (args.size() != it->second) throw ArityMismatch(w);
    return Term::apply(w, std::move(args));
  }

  Formula formula() {
    if (accept('(')) {
      if (starts_term()) {
        Term lhs = term();
        expect('=');
        Term rhs = term();
        expect(')');
        return Formula::equality(std::move(lhs), std::move(rhs));
      }
      Formula lhs = formula();
      bool conj = false;
      if (accept('&')) {
        conj = true;
      } else if (!accept('|')) {
        fail("expected '&' or '|'");
      }
      Formula rhs = formula();
      expect(')');
      if (conj) return Formula::conjunction(std::move(lhs), std::move(rhs));
      return Formula::disjunction({std::move(lhs), std::move(rhs)});
    }

    const std::string w = word();
    if (w == "T") return Formula::top();
    if (w == "F") return Formula::bottom();
    if (w == "E") {
      const std::string v = word();
      if (!is_indexed(v, 'x')) fail("expected a variable after 'E'");
      expect('.');
      return Formula::exists(index_of(v), formula());
    }
    if (w == "V") {
      expect('[');
      std::vector<Formula> disjuncts;
      do {
        disjuncts.push_back(formula());
      } while (accept(','));
      expect(']');
      return Formula::disjunction(std::move(disjuncts));
    }
    if (is_indexed(w, 'x') || is_indexed(w, 'c')) {
      fail("expected a formula, found term '" + w + "'");
    }
    const auto it = sig_.predicates.find(w);
    if (it == sig_.predicates.end()) {
      if (sig_.functions.count(w)) fail("function '" + w + "' used as a formula");
      throw UndeclaredSymbol(w);
    }
    auto args = arguments();
    if (args.size() != it->second) throw ArityMismatch(w);
    return Formula::predicate(w, std::move(args));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
  return Parser(text, sig).whole_formula();
}

Term parse_term(std::string_view text, const Signature& sig) {
  return Parser(text, sig).whole_term();
}

// ---------------------------------------------------------------------------
// Interpretations

namespace {

std::size_t table_size(std::size_t domain, std::size_t arity) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (n > (std::size_t{1} << 24) / domain) {
      throw SchemaError("symbol table too large");
    }
    n *= domain;
  }
  return n;
}

void check_symbol_name(const std::string& name) {
  if (!is_identifier(name) || is_reserved(name)) {
    throw SchemaError("symbol name '" + name +
                      "' is not a usable identifier (T, F, E, V, x<n>, c<n> "
                      "are reserved)");
  }
}

}  // namespace

Interpretation::Interpretation(Universe domain,
                               std::map<unsigned, std::size_t> constants,
                               std::map<std::string, FunctionTable> functions,
                               std::map<std::string, PredicateTable> predicates)
    : domain_(std::move(domain)),
      constants_(std::move(constants)),
      functions_(std::move(functions)),
      predicates_(std::move(predicates)) {
  const std::size_t d = domain_.size();
  for (const auto& [index, value] : constants_) {
    if (value >= d) {
      throw SchemaError("constant c" + std::to_string(index) +
                        " is outside the domain");
    }
    signature_.constants.insert(index);
  }
  for (const auto& [name, table] : functions_) {
    check_symbol_name(name);
    if (table.arity == 0) throw SchemaError("function '" + name + "' has arity 0");
    if (table.values.size() != table_size(d, table.arity)) {
      throw SchemaError("function '" + name + "' table is not total");
    }
    for (std::size_t v : table.values) {
      if (v >= d) throw SchemaError("function '" + name + "' leaves the domain");
    }
    signature_.functions.emplace(name, table.arity);
  }
  for (const auto& [name, table] : predicates_) {
    check_symbol_name(name);
    if (functions_.count(name)) {
      throw SchemaError("'" + name + "' is both a function and a predicate");
    }
    if (table.arity == 0) throw SchemaError("predicate '" + name + "' has arity 0");
    if (table.values.size() != table_size(d, table.arity)) {
      throw SchemaError("predicate '" + name + "' table is not total");
    }
    signature_.predicates.emplace(name, table.arity);
  }
}

std::size_t Interpretation::row(std::span<const std::size_t> args) const noexcept {
  std::size_t r = 0;
  for (std::size_t a : args) r = r * domain_.size() + a;
  return r;
}

Assignment parse_assignment(std::string_view text, const Universe& domain) {
  Assignment s;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw SchemaError("assignment item '" + std::string(item) + "' lacks '='");
    }
    auto trim = [](std::string_view v) {
      while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
      while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
      return v;
    };
    const auto var = trim(item.substr(0, eq));
    const auto val = trim(item.substr(eq + 1));
    if (!is_indexed(var, 'x') || var.size() > 7) {
      throw SchemaError("'" + std::string(var) + "' is not a variable");
    }
    const auto d = domain.index_of(val);
    if (!d) throw SchemaError("'" + std::string(val) + "' is not a domain element");
    s[static_cast<unsigned>(std::stoul(std::string(var.substr(1))))] = *d;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return s;
}

}  // namespace graded_topos
