#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "focq/formula.hpp"
#include "focq/prover_result.hpp"

namespace focq {
struct Ontology;
struct CompetencyQuestion;
}  // namespace focq

namespace focq::tptp {

// Identifier mangling shared with the published TPTP-SUMO files:
//   * constants, functions and predicates get the "s__" prefix; characters
//     outside [A-Za-z0-9_] are written as '_' followed by two upper-case hex
//     digits ("Fiat-Money" -> "s__Fiat_2DMoney");
//   * variables get a "V" prefix and are upper-cased ("?obj" -> "VOBJ"); when two
//     source variables of one formula collide, later ones get "_<n>" appended;
//   * "equal" is emitted as the infix "=".
// demangle_symbol reverses the symbol rule and also strips TPTP-SUMO's "__m"
// suffix used for relations in term position ("s__agent__m" -> "agent").
std::string mangle_symbol(std::string_view name);
std::string demangle_symbol(std::string_view name);
std::string mangle_variable(std::string_view name);

// Throws focq::Error("MangleCollision") when two distinct symbols of the set
// mangle to the same identifier.
void check_mangling_injective(const std::set<std::string>& symbols);

// FOF text of a formula after closing its free variables universally.
std::string to_fof(const Formula& f);

// "fof(<name>, <role>, <formula>)."
std::string emit_fof(const Formula& f, std::string_view role, std::string_view name);

// TPTP formula names must be lower_words; anything else is single-quoted.
std::string formula_name(std::string_view name);

struct Statement {
  enum class Kind { Fof, Cnf, Include, Other };

  Kind kind = Kind::Other;
  std::string name;
  std::string role;
  // Demangled formula, absent when the statement is outside the supported
  // FOF subset (see `unsupported`).
  std::optional<Formula> formula;
  std::string unsupported;
  std::string text;
  std::string include_path;
  std::vector<std::string> include_selection;
  int line = 0;
};

// Statement-level syntax errors throw SyntaxError; formulas outside the subset
// (e.g. $true, typed forms) are kept as opaque statements.
std::vector<Statement> parse(std::string_view source);

// Reads a TPTP file and expands include directives recursively. Includes are
// resolved against the including file's directory, then against $TPTP.
std::vector<Statement> load_file(const std::filesystem::path& path);

// Parses one FOF formula (no surrounding fof(...) wrapper).
Formula parse_formula(std::string_view text);

struct Problem {
  std::string cq_id;
  std::vector<std::string> header_comments;
  std::vector<std::string> includes;
  std::vector<std::pair<std::string, std::string>> local_axioms;
  std::pair<std::string, std::string> conjecture;
  std::vector<std::string> warnings;

  std::string render() const;
};

struct EmitOptions {
  enum class Mode { Include, Inline };
  Mode mode = Mode::Inline;
  // Path written into the include directive in Include mode; defaults to the
  // ontology's own path.
  std::string include_path;
};

Problem emit_problem(const Ontology& ontology, const CompetencyQuestion& cq, const EmitOptions& options = {});

// Writes "<cq_id>.p" into `dir` atomically and returns its path.
std::filesystem::path write_problem(const Problem& problem, const std::filesystem::path& dir);

// Scans prover output. The first "SZS status <S>" line wins; names of input
// formulas cited inside the "SZS output start/end" block become used_axioms
// (only for Theorem). Names listed in `exclude` (the conjecture) are dropped.
ProverResult parse_szs(std::string_view output, const std::set<std::string>& exclude = {});

}  // namespace focq::tptp
