#include "focq/wordnet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "focq/errors.hpp"
#include "focq/store.hpp"

namespace focq::wordnet {

char pos_letter(Pos pos) {
  switch (pos) {
    case Pos::Noun: return 'n';
    case Pos::Verb: return 'v';
    case Pos::Adj: return 'a';
    case Pos::Adv: return 'r';
  }
  return '?';
}

Pos pos_from_letter(char c) {
  switch (c) {
    case 'n': return Pos::Noun;
    case 'v': return Pos::Verb;
    case 'a':
    case 's': return Pos::Adj;
    case 'r': return Pos::Adv;
  }
  throw Error("BadPos", std::string("unknown part of speech '") + c + "'");
}

std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adj: return "adj";
    case Pos::Adv: return "adv";
  }
  return "?";
}

Pos pos_from_name(std::string_view name) {
  for (auto p : kAllPos)
    if (pos_name(p) == name) return p;
  throw Error("BadPos", "unknown part of speech '" + std::string(name) + "'");
}

std::string SynsetId::str() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c:%08u", pos_letter(pos), static_cast<unsigned>(offset));
  return buf;
}

SynsetId SynsetId::parse(std::string_view text) {
  if (text.size() != 10 || text[1] != ':') throw Error("BadSynsetId", "bad synset id '" + std::string(text) + "'");
  SynsetId id;
  id.pos = pos_from_letter(text[0]);
  auto digits = text.substr(2);
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id.offset);
  if (ec != std::errc{} || p != digits.data() + digits.size())
    throw Error("BadSynsetId", "bad synset id '" + std::string(text) + "'");
  return id;
}

std::string_view to_string(MappingRelation r) {
  switch (r) {
    case MappingRelation::Equivalence: return "equivalence";
    case MappingRelation::Subsumption: return "subsumption";
    case MappingRelation::Instance: return "instance";
    case MappingRelation::NotEquivalence: return "not_equivalence";
    case MappingRelation::NotSubsumption: return "not_subsumption";
  }
  return "?";
}

MappingRelation mapping_relation_from_string(std::string_view s) {
  for (auto r : {MappingRelation::Equivalence, MappingRelation::Subsumption, MappingRelation::Instance,
                 MappingRelation::NotEquivalence, MappingRelation::NotSubsumption})
    if (to_string(r) == s) return r;
  throw Error("BadMappingRelation", "unknown mapping relation '" + std::string(s) + "'");
}

AntonymPair AntonymPair::make(SynsetId x, SynsetId y) {
  if (y < x) std::swap(x, y);
  return AntonymPair{x, y};
}

std::string_view to_string(MorphRelation r) {
  switch (r) {
    case MorphRelation::Agent: return "agent";
    case MorphRelation::Result: return "result";
    case MorphRelation::Instrument: return "instrument";
    case MorphRelation::Event: return "event";
    case MorphRelation::Other: return "other";
  }
  return "?";
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  long n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    f(++n, text.substr(pos, nl - pos));
    pos = nl + 1;
  }
}

bool parse_uint(std::string_view s, std::uint32_t& out, int base = 10) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
  return ec == std::errc{} && p == s.data() + s.size();
}

// The license header of every WN database file is indented by two spaces.
bool is_header(std::string_view line) { return line.empty() || line[0] == ' '; }

struct DataLine {
  std::uint32_t offset = 0;
  std::vector<std::string> words;
  std::vector<std::pair<char, SynsetId>> antonym_targets;  // (unused, target)
};

DataLine parse_data_line(std::string_view line, long n, const std::string& origin) {
  auto bar = line.find(" | ");
  auto fields = split_ws(bar == std::string_view::npos ? line : line.substr(0, bar));
  auto bad = [&](const std::string& why) { return MalformedLine(origin, n, why); };
  if (fields.size() < 4) throw bad("too few fields");
  DataLine d;
  if (fields[0].size() != 8 || !parse_uint(fields[0], d.offset)) throw bad("bad synset offset");
  std::uint32_t w_cnt = 0;
  if (!parse_uint(fields[3], w_cnt, 16)) throw bad("bad word count");
  std::size_t i = 4;
  for (std::uint32_t w = 0; w < w_cnt; ++w) {
    if (i + 1 >= fields.size()) throw bad("truncated word list");
    std::string word(fields[i]);
    // Adjective syntactic markers: "word(a)", "word(p)", "word(ip)".
    if (auto paren = word.find('('); paren != std::string::npos && word.back() == ')') word.erase(paren);
    d.words.push_back(std::move(word));
    i += 2;
  }
  std::uint32_t p_cnt = 0;
  if (i >= fields.size() || !parse_uint(fields[i], p_cnt)) throw bad("bad pointer count");
  ++i;
  for (std::uint32_t p = 0; p < p_cnt; ++p) {
    if (i + 3 >= fields.size()) throw bad("truncated pointer list");
    auto symbol = fields[i];
    std::uint32_t target = 0;
    if (fields[i + 1].size() != 8 || !parse_uint(fields[i + 1], target)) throw bad("bad pointer offset");
    if (fields[i + 2].size() != 1) throw bad("bad pointer pos");
    Pos tpos;
    try {
      tpos = pos_from_letter(fields[i + 2][0]);
    } catch (const Error&) {
      throw bad("bad pointer pos");
    }
    if (fields[i + 3].size() != 4) throw bad("bad pointer source/target");
    if (symbol == "!") d.antonym_targets.emplace_back('!', SynsetId{tpos, target});
    i += 4;
  }
  return d;
}

}  // namespace

DataFile parse_wn_data(std::string_view text, Pos pos, const std::string& origin) {
  DataFile out;
  for_each_line(text, [&](long n, std::string_view line) {
    if (is_header(line)) return;
    auto d = parse_data_line(line, n, origin);
    SynsetId self{pos, d.offset};
    for (const auto& [_, target] : d.antonym_targets)
      if (target != self) out.antonyms.push_back(AntonymPair::make(self, target));
    out.synsets.push_back(Synset{self, std::move(d.words)});
  });
  std::sort(out.antonyms.begin(), out.antonyms.end());
  out.antonyms.erase(std::unique(out.antonyms.begin(), out.antonyms.end()), out.antonyms.end());
  return out;
}

DataFile parse_wn_data_file(const std::filesystem::path& path, Pos pos) {
  return parse_wn_data(store::read_text(path), pos, path.string());
}

namespace {

bool term_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

}  // namespace

MappingFile parse_mapping(std::string_view text, Pos pos, const MappingOptions& options, const std::string& origin) {
  MappingFile out;
  for_each_line(text, [&](long n, std::string_view line) {
    if (is_header(line) || line[0] == ';') return;
    auto fields = split_ws(line.substr(0, line.find(' ')));
    std::uint32_t offset = 0;
    if (fields.empty() || fields[0].size() != 8 || !parse_uint(fields[0], offset))
      throw MalformedLine(origin, n, "bad synset offset");
    ++out.candidate_lines;

    bool first = true;
    std::size_t at = 0;
    while ((at = line.find("&%", at)) != std::string_view::npos) {
      std::size_t b = at + 2, e = b;
      while (e < line.size() && term_char(line[e])) ++e;
      if (e == b || e >= line.size()) throw MalformedLine(origin, n, "annotation without term or suffix");
      const char suffix = line[e];
      auto it = options.suffixes.find(suffix);
      if (it == options.suffixes.end())
        throw Error("UnknownSuffix", origin + ":" + std::to_string(n) + ": unknown mapping suffix '" +
                                         std::string(1, suffix) + "'");
      if (first) {
        out.entries.push_back(MappingEntry{SynsetId{pos, offset}, std::string(line.substr(b, e - b)), it->second});
        first = false;
      } else {
        ++out.extra_annotations;
      }
      at = e + 1;
    }
    if (first) ++out.skipped_unannotated;
  });
  return out;
}

MappingFile parse_mapping_file(const std::filesystem::path& path, Pos pos, const MappingOptions& options) {
  return parse_mapping(store::read_text(path), pos, options, path.string());
}

namespace {

// lemma%ss_type:lex_filenum:lex_id:head_word:head_id
Pos pos_of_sense_key(std::string_view key) {
  auto pct = key.find('%');
  if (pct == std::string_view::npos || pct + 1 >= key.size()) throw Error("BadSenseKey", std::string(key));
  switch (key[pct + 1]) {
    case '1': return Pos::Noun;
    case '2': return Pos::Verb;
    case '3':
    case '5': return Pos::Adj;
    case '4': return Pos::Adv;
  }
  throw Error("BadSenseKey", std::string(key));
}

}  // namespace

SenseIndex parse_sense_index(std::string_view text, const std::string& origin) {
  SenseIndex out;
  for_each_line(text, [&](long n, std::string_view line) {
    auto fields = split_ws(line);
    if (fields.empty()) return;
    if (fields.size() != 4) throw MalformedLine(origin, n, "expected 4 fields");
    SenseInfo info;
    std::uint32_t sense = 0, tags = 0;
    if (fields[1].size() != 8 || !parse_uint(fields[1], info.synset.offset) || !parse_uint(fields[2], sense) ||
        !parse_uint(fields[3], tags))
      throw MalformedLine(origin, n, "bad numeric field");
    try {
      info.synset.pos = pos_of_sense_key(fields[0]);
    } catch (const Error&) {
      throw MalformedLine(origin, n, "bad sense key");
    }
    info.sense_number = static_cast<int>(sense);
    info.tag_count = static_cast<int>(tags);
    if (!out.emplace(std::string(fields[0]), info).second)
      throw Error("DuplicateKey", origin + ":" + std::to_string(n) + ": duplicate sense key " + std::string(fields[0]));
  });
  return out;
}

SenseIndex parse_sense_index_file(const std::filesystem::path& path) {
  return parse_sense_index(store::read_text(path), path.string());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_on(std::string_view line, char delim) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto d = line.find(delim, pos);
    out.push_back(trim(line.substr(pos, d == std::string_view::npos ? std::string_view::npos : d - pos)));
    if (d == std::string_view::npos) break;
    pos = d + 1;
  }
  return out;
}

MorphRelation classify_relation(const std::string& name) {
  if (name == "agent") return MorphRelation::Agent;
  if (name == "result") return MorphRelation::Result;
  if (name == "instrument") return MorphRelation::Instrument;
  if (name == "event") return MorphRelation::Event;
  return MorphRelation::Other;
}

}  // namespace

std::vector<MorphLink> parse_morphosemantic(std::string_view text, const SenseIndex& senses,
                                            const std::string& origin) {
  std::vector<MorphLink> out;
  bool first_row = true;
  for_each_line(text, [&](long n, std::string_view raw) {
    auto line = trim(raw);
    if (line.empty() || line[0] == '#') return;
    const char delim = line.find('\t') != std::string_view::npos ? '\t' : ',';
    auto fields = split_on(line, delim);
    const bool header = first_row && fields[0].find('%') == std::string_view::npos;
    first_row = false;
    if (header) return;
    if (fields.size() < 3) throw MalformedLine(origin, n, "expected verb key, relation, noun key");

    auto resolve = [&](std::string_view key) {
      auto it = senses.find(std::string(key));
      if (it == senses.end()) throw Error("UnresolvedSenseKey", origin + ":" + std::to_string(n) + ": " + std::string(key));
      return it->second.synset;
    };
    MorphLink link;
    link.verb_key = fields[0];
    link.noun_key = fields[2];
    link.relation_name = fields[1];
    std::transform(link.relation_name.begin(), link.relation_name.end(), link.relation_name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (std::find(std::begin(kMorphRelationNames), std::end(kMorphRelationNames), link.relation_name) ==
        std::end(kMorphRelationNames))
      throw Error("UnknownMorphRelation", origin + ":" + std::to_string(n) + ": " + link.relation_name);
    link.relation = classify_relation(link.relation_name);
    link.verb = resolve(link.verb_key);
    link.noun = resolve(link.noun_key);
    if (link.verb.pos != Pos::Verb || link.noun.pos != Pos::Noun)
      throw MalformedLine(origin, n, "expected a verb sense then a noun sense");
    out.push_back(std::move(link));
  });
  return out;
}

std::vector<MorphLink> parse_morphosemantic_file(const std::filesystem::path& path, const SenseIndex& senses) {
  return parse_morphosemantic(store::read_text(path), senses, path.string());
}

}  // namespace focq::wordnet
