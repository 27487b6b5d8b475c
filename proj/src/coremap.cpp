#include "focq/coremap.hpp"

#include <optional>
#include <set>
#include <stdexcept>

namespace focq::coremap {

MappingRelation downgrade(MappingRelation relation, int steps_taken) {
  if (steps_taken < 1) throw std::invalid_argument("downgrade: steps_taken must be >= 1");
  switch (relation) {
    case MappingRelation::Equivalence:
    case MappingRelation::Subsumption: return MappingRelation::Subsumption;
    case MappingRelation::Instance: return MappingRelation::Instance;
    case MappingRelation::NotEquivalence:
    case MappingRelation::NotSubsumption: return MappingRelation::NotSubsumption;
  }
  return relation;
}

std::string_view to_string(DropReason r) {
  switch (r) {
    case DropReason::NoCoreAncestor: return "no_core_ancestor";
    case DropReason::DuplicateSynset: return "duplicate_synset";
  }
  return "?";
}

namespace {

using Adjacency = std::map<std::string, std::vector<std::string>>;

struct Hit {
  std::string term;
  int depth = 0;
};

const std::vector<std::string>* parents_of(const Adjacency& adj, const std::string& node) {
  auto it = adj.find(node);
  return it == adj.end() ? nullptr : &it->second;
}

// Level-by-level BFS from `start` (depth 0 = `start` itself is never a hit).
// The first level holding a core term decides; ties go to the smallest name.
std::optional<Hit> nearest_core(const Adjacency& adj, std::set<std::string> frontier, int start_depth,
                                const OntologyIndex& index) {
  std::set<std::string> seen = frontier;
  int depth = start_depth;
  while (!frontier.empty()) {
    for (const auto& t : frontier)  // sorted: first hit is the lexicographic minimum
      if (depth > 0 && index.in_vocabulary(t)) return Hit{t, depth};
    std::set<std::string> next;
    for (const auto& t : frontier)
      if (auto ps = parents_of(adj, t))
        for (const auto& p : *ps)
          if (seen.insert(p).second) next.insert(p);
    frontier = std::move(next);
    ++depth;
  }
  return std::nullopt;
}

}  // namespace

Propagation propagate_to_core(std::span<const MappingEntry> entries, const OntologyIndex& index) {
  Propagation out;
  std::set<wordnet::SynsetId> taken;
  std::set<std::string> ambiguous;

  for (const auto& e : entries) {
    if (taken.count(e.synset)) {
      out.dropped.push_back(Dropped{e, DropReason::DuplicateSynset});
      continue;
    }
    if (index.in_vocabulary(e.term)) {
      taken.insert(e.synset);
      out.core.push_back(CoreEntry{e, e.term, 0});
      continue;
    }

    const bool has_class = index.subclass_parents.count(e.term) > 0;
    const bool has_attr = index.subattribute_parents.count(e.term) > 0;
    if (has_class && has_attr && ambiguous.insert(e.term).second) out.ambiguous_terms.push_back(e.term);

    std::optional<Hit> hit;
    bool via_instance = false;
    if (has_class) hit = nearest_core(index.subclass_parents, {e.term}, 0, index);
    if (!hit && has_attr) hit = nearest_core(index.subattribute_parents, {e.term}, 0, index);
    if (!hit && index.subrelation_parents.count(e.term)) hit = nearest_core(index.subrelation_parents, {e.term}, 0, index);
    if (!hit) {
      if (auto classes = parents_of(index.instance_parents, e.term)) {
        hit = nearest_core(index.subclass_parents, std::set<std::string>(classes->begin(), classes->end()), 1, index);
        via_instance = hit.has_value();
      }
    }

    if (!hit) {
      out.dropped.push_back(Dropped{e, DropReason::NoCoreAncestor});
      continue;
    }
    MappingEntry moved = e;
    moved.term = hit->term;
    moved.relation = downgrade(e.relation, hit->depth);
    // Something mapped onto an individual belongs to every class above it.
    if (via_instance && (e.relation == MappingRelation::Equivalence || e.relation == MappingRelation::Subsumption))
      moved.relation = MappingRelation::Instance;
    taken.insert(e.synset);
    out.core.push_back(CoreEntry{std::move(moved), e.term, hit->depth});
  }
  return out;
}

std::map<wordnet::SynsetId, MappingEntry> core_map(std::span<const CoreEntry> core) {
  std::map<wordnet::SynsetId, MappingEntry> out;
  for (const auto& c : core) out.emplace(c.entry.synset, c.entry);
  return out;
}

}  // namespace focq::coremap
