#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace focq {

// A first-order term over SUMO symbols. Variable names are stored without the
// leading '?' of the surface syntax.
struct Term {
  enum class Kind : std::uint8_t { Constant, Variable, Function };

  Kind kind = Kind::Constant;
  std::string name;
  std::vector<Term> args;

  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term function(std::string name, std::vector<Term> args);

  bool is_variable() const noexcept { return kind == Kind::Variable; }
  bool is_ground() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;
};

// Immutable first-order formula. Copies share structure, so values are cheap to
// pass around and safe to read from several threads.
//
// And/Or always hold at least two children and never directly contain a child
// of the same connective (nested conjunctions are flattened on construction).
// Equality is its own node kind and is never represented as an Atom.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Equal, Not, And, Or, Implies, Iff, Forall, Exists };

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula equal(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula implies(Formula antecedent, Formula consequent);
  static Formula iff(Formula lhs, Formula rhs);
  static Formula forall(std::vector<std::string> vars, Formula body);
  static Formula exists(std::vector<std::string> vars, Formula body);

  Kind kind() const noexcept;

  // Atom: predicate symbol. Equal: "=".
  const std::string& predicate() const;
  // Atom: arguments. Equal: {lhs, rhs}.
  const std::vector<Term>& args() const;
  // Not: 1 child. And/Or: n >= 2. Implies/Iff: 2. Forall/Exists: 1 (the body).
  const std::vector<Formula>& children() const;
  const Formula& child(std::size_t i) const { return children().at(i); }
  // Forall/Exists only.
  const std::vector<std::string>& variables() const;

  bool is_atomic() const noexcept { return kind() == Kind::Atom || kind() == Kind::Equal; }
  bool is_quantifier() const noexcept { return kind() == Kind::Forall || kind() == Kind::Exists; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_variables(const Formula& f);

// Free variables in order of first occurrence (left to right).
std::vector<std::string> free_variables_ordered(const Formula& f);

// Wraps `f` in a universal quantifier over its free variables (identity when closed).
Formula universal_closure(const Formula& f);

// Negation normal form: only And/Or/Forall/Exists above literals, with Implies
// and Iff eliminated.
Formula nnf(const Formula& f);

// Structural equality up to consistent renaming of bound variables.
bool alpha_equivalent(const Formula& a, const Formula& b);

// Every constant, function and predicate symbol ("=" excluded).
std::set<std::string> symbols(const Formula& f);

}  // namespace focq
