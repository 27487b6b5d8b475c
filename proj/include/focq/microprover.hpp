#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "focq/formula.hpp"
#include "focq/prover_result.hpp"

namespace focq::tptp {
struct Statement;
}

namespace focq::microprover {

struct Literal {
  bool positive = true;
  std::string predicate;  // "=" for equality
  std::vector<Term> args;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// Variables of each clause are named X0, X1, ... in order of first occurrence,
// so clauses never share variables.
struct Clause {
  std::vector<Literal> literals;
  std::string origin;
};

// Skolem symbols are "sk<N>", numbered across every formula passed to the same
// Clausifier and never reusing a name from `reserved`.
class Clausifier {
 public:
  explicit Clausifier(std::set<std::string> reserved = {});

  // NNF, skolemization, CNF. The result is equisatisfiable with the universal
  // closure of `f`. Tautologies are dropped.
  std::vector<Clause> operator()(const Formula& f, const std::string& origin = {});

 private:
  std::string fresh_skolem();

  std::set<std::string> reserved_;
  int next_skolem_ = 1;
  int next_var_ = 0;
};

std::vector<Clause> clausify(const Formula& f);

std::string to_string(const Literal& l);
std::string to_string(const Clause& c);

struct LabeledFormula {
  std::string name;
  Formula formula;
};

struct ProverOptions {
  double limit_seconds = 600.0;
  std::size_t max_clause_size = 12;
  // Generated-clause cap; 0 disables it.
  std::size_t max_clauses = 50000;
  // Keep input axioms out of the given-clause queue while a conjecture is
  // present (they are only resolved against descendants of the conjecture).
  bool set_of_support = true;
};

struct ProofAttempt {
  ProverResult result;
  // SZS-style output: status line and, for proofs, a CNFRefutation block that
  // cites input axioms as file('problem', <name>).
  std::string transcript;
  long given = 0;
  long generated = 0;
};

// Theorem when the axioms together with the negated conjecture are refuted.
// Saturation and the clause caps give GaveUp, the deadline gives Timeout; the
// prover never claims CounterSatisfiable. Without a conjecture the axioms
// themselves are checked for a refutation.
ProofAttempt prove(std::span<const LabeledFormula> axioms, const std::optional<LabeledFormula>& conjecture,
                   const ProverOptions& options = {});

// Runs on parsed TPTP statements: fof/cnf statements inside the supported
// subset are used, others are skipped (which can only lose proofs).
ProofAttempt prove_statements(const std::vector<tptp::Statement>& statements, const ProverOptions& options = {});

}  // namespace focq::microprover
