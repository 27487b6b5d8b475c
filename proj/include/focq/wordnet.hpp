#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace focq::wordnet {

enum class Pos : std::uint8_t { Noun, Verb, Adj, Adv };

inline constexpr Pos kAllPos[] = {Pos::Noun, Pos::Verb, Pos::Adj, Pos::Adv};

char pos_letter(Pos pos);                 // n v a r
Pos pos_from_letter(char c);              // accepts n v a s r
std::string_view pos_name(Pos pos);       // noun verb adj adv
Pos pos_from_name(std::string_view name);

struct SynsetId {
  Pos pos = Pos::Noun;
  std::uint32_t offset = 0;

  // "n:00001740"
  std::string str() const;
  static SynsetId parse(std::string_view text);

  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
};

enum class MappingRelation { Equivalence, Subsumption, Instance, NotEquivalence, NotSubsumption };

std::string_view to_string(MappingRelation r);
MappingRelation mapping_relation_from_string(std::string_view s);

struct MappingEntry {
  SynsetId synset;
  std::string term;
  MappingRelation relation = MappingRelation::Equivalence;

  friend bool operator==(const MappingEntry&, const MappingEntry&) = default;
};

// Stored with a < b.
struct AntonymPair {
  SynsetId a;
  SynsetId b;

  static AntonymPair make(SynsetId x, SynsetId y);
  friend auto operator<=>(const AntonymPair&, const AntonymPair&) = default;
};

enum class MorphRelation { Agent, Result, Instrument, Event, Other };

struct MorphLink {
  SynsetId verb;
  SynsetId noun;
  MorphRelation relation = MorphRelation::Other;
  // Lower-cased relation name as it appeared in the input ("body-part", ...).
  std::string relation_name;
  std::string verb_key;
  std::string noun_key;
};

// The 14 relation names of the morphosemantic database.
inline constexpr std::string_view kMorphRelationNames[] = {
    "agent",    "body-part", "by-means-of", "destination", "event",     "instrument", "location",
    "material", "property",  "result",      "state",       "undergoer", "uses",       "vehicle",
};

struct Synset {
  SynsetId id;
  std::vector<std::string> words;
};

struct DataFile {
  std::vector<Synset> synsets;
  std::vector<AntonymPair> antonyms;  // sorted, unique
};

// WN 3.0 data.{noun,verb,adj,adv}. License header lines (leading spaces) are
// skipped; '!' pointers are collapsed to synset-level pairs.
DataFile parse_wn_data(std::string_view text, Pos pos, const std::string& origin = "<data>");
DataFile parse_wn_data_file(const std::filesystem::path& path, Pos pos);

struct MappingOptions {
  // Trailing annotation character -> relation. Complement suffixes are
  // disabled unless configured.
  std::map<char, MappingRelation> suffixes{
      {'=', MappingRelation::Equivalence},
      {'+', MappingRelation::Subsumption},
      {'@', MappingRelation::Instance},
  };
};

struct MappingFile {
  std::vector<MappingEntry> entries;
  long candidate_lines = 0;
  long skipped_unannotated = 0;
  long extra_annotations = 0;  // annotations beyond the first on a line
};

// WordNetMappings30-<pos>.txt: data lines whose gloss carries "&%Term<suffix>".
// Throws focq::Error("UnknownSuffix") for suffix characters not configured.
MappingFile parse_mapping(std::string_view text, Pos pos, const MappingOptions& options = {},
                          const std::string& origin = "<mapping>");
MappingFile parse_mapping_file(const std::filesystem::path& path, Pos pos, const MappingOptions& options = {});

struct SenseInfo {
  SynsetId synset;
  int sense_number = 0;
  int tag_count = 0;
};

using SenseIndex = std::map<std::string, SenseInfo>;

// index.sense: "sense_key offset sense_number tag_cnt". Throws DuplicateKey.
SenseIndex parse_sense_index(std::string_view text, const std::string& origin = "<index.sense>");
SenseIndex parse_sense_index_file(const std::filesystem::path& path);

// Delimiter-separated rows (verb sense key, relation, noun sense key); tab or
// comma separated, optional header row. Throws UnresolvedSenseKey,
// UnknownMorphRelation.
std::vector<MorphLink> parse_morphosemantic(std::string_view text, const SenseIndex& senses,
                                            const std::string& origin = "<morphosemantic>");
std::vector<MorphLink> parse_morphosemantic_file(const std::filesystem::path& path, const SenseIndex& senses);

std::string_view to_string(MorphRelation r);

}  // namespace focq::wordnet
