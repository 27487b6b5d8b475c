#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "focq/formula.hpp"

namespace focq {

enum class SourceFormat { Kif, Tptp };

SourceFormat source_format_from_string(std::string_view s);

struct Axiom {
  std::string label;
  // Always present for KIF sources; for TPTP sources only when the statement
  // falls inside the supported FOF subset.
  std::optional<Formula> formula;
  // Original statement text (TPTP sources only).
  std::string tptp_text;
  std::string role = "axiom";
};

// A ground binary fact over one of the four structural predicates.
struct StructuralFact {
  std::string relation;
  std::string child;
  std::string parent;

  friend auto operator<=>(const StructuralFact&, const StructuralFact&) = default;
};

inline constexpr std::string_view kStructuralRelations[] = {"instance", "subclass", "subrelation", "subAttribute"};

struct Ontology {
  std::string name;
  SourceFormat format = SourceFormat::Kif;
  std::filesystem::path path;
  std::vector<Axiom> axioms;
  std::vector<StructuralFact> facts;
  // Every SUMO symbol occurring syntactically in the axioms.
  std::set<std::string> symbols;
};

// KIF axioms are labelled by a preceding ";; id: <label>" comment, otherwise
// "ax<N>" (1-based). Throws DuplicateLabel, SyntaxError, UnsupportedConstruct.
Ontology ontology_from_kif(std::string name, std::string_view text);
Ontology ontology_from_tptp(std::string name, std::string_view text, const std::filesystem::path& base = {});
Ontology load_ontology(const std::filesystem::path& path, SourceFormat format);
Ontology load_ontology(const std::filesystem::path& path);  // format from extension

using Edge = std::pair<std::string, std::string>;  // (child, parent)

struct OntologyIndex {
  std::set<Edge> instance_edges;
  std::set<Edge> subclass_edges;
  std::set<Edge> subrelation_edges;
  std::set<Edge> subattribute_edges;
  std::set<std::string> vocabulary;

  // child -> sorted parents
  std::map<std::string, std::vector<std::string>> instance_parents;
  std::map<std::string, std::vector<std::string>> subclass_parents;
  std::map<std::string, std::vector<std::string>> subrelation_parents;
  std::map<std::string, std::vector<std::string>> subattribute_parents;

  bool in_vocabulary(std::string_view term) const { return vocabulary.count(std::string(term)) > 0; }
};

// Edges come from `core` and every extra source; the vocabulary is exactly the
// symbol set of `core`. Throws CycleDetected for cyclic subclass/subAttribute graphs.
OntologyIndex build_index(const Ontology& core, std::span<const Ontology> extra_sources = {});

// Restricts the vocabulary to terms also occurring in `other` (the
// "covered by both ontologies" configuration).
void intersect_vocabulary(OntologyIndex& index, const Ontology& other);

// true iff `term` reaches the class Attribute via instance then subclass*, or
// via subAttribute* then instance then subclass*.
bool is_attribute(const OntologyIndex& index, std::string_view term);

// true iff `term` is used as a class: it occurs in a subclass edge or is the
// parent of an instance edge.
bool is_class(const OntologyIndex& index, std::string_view term);

}  // namespace focq
