#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "focq/formula.hpp"
#include "focq/ontology.hpp"
#include "focq/prover_result.hpp"
#include "focq/wordnet.hpp"

namespace focq {

enum class Polarity { TruthTest, FalsityTest };

std::string_view to_string(Polarity p);
Polarity polarity_from_string(std::string_view s);

enum class PatternKind {
  AntonymClass,
  AntonymAttribute,
  RelationAgent,
  RelationResult,
  RelationInstrument,
  Event1_EqEq,
  Event2_EqSub,
  Event3_SubSub,
  Creative,
};

inline constexpr PatternKind kAllPatterns[] = {
    PatternKind::AntonymClass,       PatternKind::AntonymAttribute, PatternKind::RelationAgent,
    PatternKind::RelationResult,     PatternKind::RelationInstrument, PatternKind::Event1_EqEq,
    PatternKind::Event2_EqSub,       PatternKind::Event3_SubSub,    PatternKind::Creative,
};

std::string_view to_string(PatternKind k);  // tag used in ids: "antonym_class", "event1", ...
PatternKind pattern_from_string(std::string_view s);

struct Provenance {
  std::vector<std::string> synsets;
  std::vector<std::string> terms;
  std::vector<std::string> mapping_relations;
  std::string morph_relation;
};

struct CompetencyQuestion {
  std::string id;
  Polarity polarity = Polarity::TruthTest;
  PatternKind pattern = PatternKind::Creative;
  Formula formula;
  Provenance provenance;
};

namespace cqgen {

using CoreMap = std::map<wordnet::SynsetId, wordnet::MappingEntry>;

struct Generated {
  std::vector<CompetencyQuestion> cqs;
  // reason -> number of inputs skipped for it
  std::map<std::string, long> skipped;
  // Antonym generation only: pairs whose synsets both map by equivalence.
  long equivalence_pairs = 0;
};

// Generated ids: "cq_<pattern>_<terms>" for truth-tests and the same plus "_f"
// for the paired falsity-test. Terms are lower-cased and sorted for the
// symmetric patterns and kept in role order otherwise.
std::string make_id(PatternKind pattern, std::vector<std::string> terms, Polarity polarity);

Generated gen_antonym(std::span<const wordnet::AntonymPair> pairs, const CoreMap& core, const OntologyIndex& index);
Generated gen_relation(std::span<const wordnet::MorphLink> links, const CoreMap& core, const OntologyIndex& index);
Generated gen_event(std::span<const wordnet::MorphLink> links, const CoreMap& core, const OntologyIndex& index);

// Flips polarity; the formula becomes nnf(not formula).
CompetencyQuestion negate_cq(const CompetencyQuestion& cq);

// SUO-KIF with ";; id: <id>" and ";; polarity: truth|falsity" annotations
// before each formula. Throws MissingAnnotation.
std::vector<CompetencyQuestion> load_creative(std::string_view text);
std::vector<CompetencyQuestion> load_creative_file(const std::filesystem::path& path);

// Proves `conjecture` from `axioms`; used here with no axioms at all.
using EntailmentCheck =
    std::function<ProverResult(const std::vector<std::pair<std::string, Formula>>& axioms, const Formula& conjecture)>;

// false when the conclusion of an implication-shaped CQ follows from its
// premises alone. Non-implications and prover failures count as non-trivial.
bool check_nontriviality(const CompetencyQuestion& cq, const EntailmentCheck& prover);

// Corpus store: one JSON line per CQ,
// {schema_version, id, polarity, pattern, kif_text, provenance}.
nlohmann::json to_json(const CompetencyQuestion& cq);
CompetencyQuestion cq_from_json(const nlohmann::json& j);
void save_corpus(const std::filesystem::path& path, std::span<const CompetencyQuestion> cqs);
std::vector<CompetencyQuestion> load_corpus(const std::filesystem::path& path);

}  // namespace cqgen
}  // namespace focq
