#include "focq/formula.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace focq {

Term Term::constant(std::string name) { return Term{Kind::Constant, std::move(name), {}}; }

Term Term::variable(std::string name) { return Term{Kind::Variable, std::move(name), {}}; }

Term Term::function(std::string name, std::vector<Term> args) {
  return Term{Kind::Function, std::move(name), std::move(args)};
}

bool Term::is_ground() const {
  if (kind == Kind::Variable) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

struct Formula::Node {
  Kind kind;
  std::string predicate;
  std::vector<Term> args;
  std::vector<Formula> children;
  std::vector<std::string> vars;
};

namespace {

const std::vector<Term> kNoTerms;
const std::vector<Formula> kNoChildren;
const std::vector<std::string> kNoVars;
const std::string kEqualSymbol = "=";

}  // namespace

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  if (predicate.empty()) throw std::invalid_argument("atom with empty predicate");
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(predicate), std::move(args), {}, {}}));
}

Formula Formula::equal(Term lhs, Term rhs) {
  std::vector<Term> args;
  args.push_back(std::move(lhs));
  args.push_back(std::move(rhs));
  return Formula(std::make_shared<const Node>(Node{Kind::Equal, kEqualSymbol, std::move(args), {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(f)}, {}}));
}

namespace {

std::vector<Formula> flatten(Formula::Kind kind, std::vector<Formula> fs) {
  std::vector<Formula> out;
  out.reserve(fs.size());
  for (auto& f : fs) {
    if (f.kind() == kind) {
      const auto& inner = f.children();
      out.insert(out.end(), inner.begin(), inner.end());
    } else {
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

Formula Formula::conjunction(std::vector<Formula> fs) {
  auto flat = flatten(Kind::And, std::move(fs));
  if (flat.size() < 2) throw std::invalid_argument("conjunction needs at least two conjuncts");
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {}, std::move(flat), {}}));
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  auto flat = flatten(Kind::Or, std::move(fs));
  if (flat.size() < 2) throw std::invalid_argument("disjunction needs at least two disjuncts");
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {}, std::move(flat), {}}));
}

Formula Formula::implies(Formula antecedent, Formula consequent) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, {}, {}, {std::move(antecedent), std::move(consequent)}, {}}));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Iff, {}, {}, {std::move(lhs), std::move(rhs)}, {}}));
}

Formula Formula::forall(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) throw std::invalid_argument("quantifier without variables");
  return Formula(std::make_shared<const Node>(Node{Kind::Forall, {}, {}, {std::move(body)}, std::move(vars)}));
}

Formula Formula::exists(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) throw std::invalid_argument("quantifier without variables");
  return Formula(std::make_shared<const Node>(Node{Kind::Exists, {}, {}, {std::move(body)}, std::move(vars)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::predicate() const {
  if (!is_atomic()) throw std::logic_error("predicate() on non-atomic formula");
  return node_->predicate;
}

const std::vector<Term>& Formula::args() const { return is_atomic() ? node_->args : kNoTerms; }

const std::vector<Formula>& Formula::children() const { return is_atomic() ? kNoChildren : node_->children; }

const std::vector<std::string>& Formula::variables() const { return is_quantifier() ? node_->vars : kNoVars; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.predicate == y.predicate && x.args == y.args && x.vars == y.vars &&
         x.children == y.children;
}

namespace {

void term_variables(const Term& t, const std::vector<std::string>& bound, std::vector<std::string>& out) {
  if (t.is_variable()) {
    if (std::find(bound.begin(), bound.end(), t.name) == bound.end() &&
        std::find(out.begin(), out.end(), t.name) == out.end())
      out.push_back(t.name);
    return;
  }
  for (const auto& a : t.args) term_variables(a, bound, out);
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  if (f.is_atomic()) {
    for (const auto& t : f.args()) term_variables(t, bound, out);
    return;
  }
  if (f.is_quantifier()) {
    const auto mark = bound.size();
    bound.insert(bound.end(), f.variables().begin(), f.variables().end());
    collect_free(f.child(0), bound, out);
    bound.resize(mark);
    return;
  }
  for (const auto& c : f.children()) collect_free(c, bound, out);
}

}  // namespace

std::vector<std::string> free_variables_ordered(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  auto ordered = free_variables_ordered(f);
  return {ordered.begin(), ordered.end()};
}

Formula universal_closure(const Formula& f) {
  auto vars = free_variables_ordered(f);
  if (vars.empty()) return f;
  return Formula::forall(std::move(vars), f);
}

namespace {

Formula nnf_of(const Formula& f, bool negated);

std::vector<Formula> nnf_all(const std::vector<Formula>& fs, bool negated) {
  std::vector<Formula> out;
  out.reserve(fs.size());
  for (const auto& c : fs) out.push_back(nnf_of(c, negated));
  return out;
}

Formula nnf_of(const Formula& f, bool negated) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Equal:
      return negated ? Formula::negation(f) : f;
    case K::Not:
      return nnf_of(f.child(0), !negated);
    case K::And:
      return negated ? Formula::disjunction(nnf_all(f.children(), true))
                     : Formula::conjunction(nnf_all(f.children(), false));
    case K::Or:
      return negated ? Formula::conjunction(nnf_all(f.children(), true))
                     : Formula::disjunction(nnf_all(f.children(), false));
    case K::Implies:
      // a => b  ==  ~a | b
      if (negated) return Formula::conjunction({nnf_of(f.child(0), false), nnf_of(f.child(1), true)});
      return Formula::disjunction({nnf_of(f.child(0), true), nnf_of(f.child(1), false)});
    case K::Iff: {
      const auto& a = f.child(0);
      const auto& b = f.child(1);
      if (negated) {
        return Formula::conjunction({Formula::disjunction({nnf_of(a, false), nnf_of(b, false)}),
                                     Formula::disjunction({nnf_of(a, true), nnf_of(b, true)})});
      }
      return Formula::conjunction({Formula::disjunction({nnf_of(a, true), nnf_of(b, false)}),
                                   Formula::disjunction({nnf_of(a, false), nnf_of(b, true)})});
    }
    case K::Forall:
      return negated ? Formula::exists(f.variables(), nnf_of(f.child(0), true))
                     : Formula::forall(f.variables(), nnf_of(f.child(0), false));
    case K::Exists:
      return negated ? Formula::forall(f.variables(), nnf_of(f.child(0), true))
                     : Formula::exists(f.variables(), nnf_of(f.child(0), false));
  }
  throw std::logic_error("unreachable formula kind");
}

// Bound variables are compared by binding position; free ones by name.
using Scope = std::vector<std::pair<std::string, int>>;

int lookup(const Scope& scope, const std::string& name) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it)
    if (it->first == name) return it->second;
  return -1;
}

bool alpha_terms(const Term& a, const Term& b, const Scope& sa, const Scope& sb) {
  if (a.kind != b.kind) return false;
  if (a.is_variable()) {
    const int ia = lookup(sa, a.name);
    const int ib = lookup(sb, b.name);
    if (ia != ib) return false;
    return ia >= 0 || a.name == b.name;
  }
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!alpha_terms(a.args[i], b.args[i], sa, sb)) return false;
  return true;
}

bool alpha_formulas(const Formula& a, const Formula& b, Scope& sa, Scope& sb, int& next) {
  if (a.kind() != b.kind()) return false;
  if (a.is_atomic()) {
    if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
      if (!alpha_terms(a.args()[i], b.args()[i], sa, sb)) return false;
    return true;
  }
  if (a.is_quantifier()) {
    if (a.variables().size() != b.variables().size()) return false;
    const auto mark = sa.size();
    for (std::size_t i = 0; i < a.variables().size(); ++i) {
      const int id = next++;
      sa.emplace_back(a.variables()[i], id);
      sb.emplace_back(b.variables()[i], id);
    }
    const bool ok = alpha_formulas(a.child(0), b.child(0), sa, sb, next);
    sa.resize(mark);
    sb.resize(mark);
    return ok;
  }
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!alpha_formulas(a.child(i), b.child(i), sa, sb, next)) return false;
  return true;
}

void term_symbols(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) return;
  out.insert(t.name);
  for (const auto& a : t.args) term_symbols(a, out);
}

void formula_symbols(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::Atom) out.insert(f.predicate());
  for (const auto& t : f.args()) term_symbols(t, out);
  for (const auto& c : f.children()) formula_symbols(c, out);
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_of(f, false); }

bool alpha_equivalent(const Formula& a, const Formula& b) {
  Scope sa;
  Scope sb;
  int next = 0;
  return alpha_formulas(a, b, sa, sb, next);
}

std::set<std::string> symbols(const Formula& f) {
  std::set<std::string> out;
  formula_symbols(f, out);
  return out;
}

}  // namespace focq
