#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "focq/ontology.hpp"
#include "focq/wordnet.hpp"

namespace focq::coremap {

using wordnet::MappingEntry;
using wordnet::MappingRelation;

struct CoreEntry {
  MappingEntry entry;
  std::string original_term;
  int path_length = 0;  // 0 when the term was already in the core
};

enum class DropReason { NoCoreAncestor, DuplicateSynset };

struct Dropped {
  MappingEntry entry;
  DropReason reason;
};

struct Propagation {
  std::vector<CoreEntry> core;
  std::vector<Dropped> dropped;
  // Terms that had both class and attribute edges (class edges were tried first).
  std::vector<std::string> ambiguous_terms;
};

// Relation after generalising a mapping `steps_taken` (>= 1) levels up.
MappingRelation downgrade(MappingRelation relation, int steps_taken);

// Moves every mapping onto the index's core vocabulary by walking up the
// structural relations. The nearest core ancestor wins; equal depths are broken
// by lexicographic term name. Output order follows input order.
Propagation propagate_to_core(std::span<const MappingEntry> entries, const OntologyIndex& index);

// Convenience lookup synset -> core mapping.
std::map<wordnet::SynsetId, MappingEntry> core_map(std::span<const CoreEntry> core);

std::string_view to_string(DropReason r);

}  // namespace focq::coremap
