#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "focq/formula.hpp"

namespace focq::kif {

// A top-level formula together with the ";; key: value" comment annotations
// that immediately precede it.
struct AnnotatedFormula {
  Formula formula;
  std::map<std::string, std::string> annotations;
  int line = 0;
};

// Parses the first-order subset of SUO-KIF. Throws SyntaxError for malformed
// s-expressions and UnsupportedConstruct for row variables, quoted terms,
// variables in predicate position and sentences in term position.
std::vector<Formula> parse(std::string_view source);
std::vector<AnnotatedFormula> parse_annotated(std::string_view source);

// Parses exactly one formula.
Formula parse_formula(std::string_view source);

// Canonical single-line SUO-KIF text; parse(print(f)) == {f}.
std::string print(const Formula& f);
std::string print(const Term& t);

}  // namespace focq::kif
