#include "focq/cqgen.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "focq/errors.hpp"
#include "focq/kif.hpp"
#include "focq/store.hpp"

namespace focq {

std::string_view to_string(Polarity p) { return p == Polarity::TruthTest ? "truth" : "falsity"; }

Polarity polarity_from_string(std::string_view s) {
  if (s == "truth" || s == "truth-test" || s == "truth_test") return Polarity::TruthTest;
  if (s == "falsity" || s == "falsity-test" || s == "falsity_test") return Polarity::FalsityTest;
  throw Error("BadPolarity", "unknown polarity '" + std::string(s) + "'");
}

std::string_view to_string(PatternKind k) {
  switch (k) {
    case PatternKind::AntonymClass: return "antonym_class";
    case PatternKind::AntonymAttribute: return "antonym_attribute";
    case PatternKind::RelationAgent: return "relation_agent";
    case PatternKind::RelationResult: return "relation_result";
    case PatternKind::RelationInstrument: return "relation_instrument";
    case PatternKind::Event1_EqEq: return "event1";
    case PatternKind::Event2_EqSub: return "event2";
    case PatternKind::Event3_SubSub: return "event3";
    case PatternKind::Creative: return "creative";
  }
  return "?";
}

PatternKind pattern_from_string(std::string_view s) {
  for (auto k : kAllPatterns)
    if (to_string(k) == s) return k;
  throw Error("BadPattern", "unknown pattern '" + std::string(s) + "'");
}

namespace cqgen {

using wordnet::MappingRelation;

namespace {

bool symmetric(PatternKind k) {
  return k == PatternKind::AntonymClass || k == PatternKind::AntonymAttribute || k == PatternKind::Event1_EqEq ||
         k == PatternKind::Event3_SubSub;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

Term var(const char* name) { return Term::variable(name); }
Term con(const std::string& name) { return Term::constant(name); }

// Truth-test and its paired falsity-test.
void emit_pair(Generated& g, PatternKind pattern, std::vector<std::string> id_terms, Formula truth, Provenance prov) {
  CompetencyQuestion cq{make_id(pattern, id_terms, Polarity::TruthTest), Polarity::TruthTest, pattern,
                        std::move(truth), std::move(prov)};
  auto f = negate_cq(cq);
  g.cqs.push_back(std::move(cq));
  g.cqs.push_back(std::move(f));
}

void skip(Generated& g, const std::string& reason) { ++g.skipped[reason]; }

enum class TermKind { Attribute, Class, Other };

TermKind kind_of(const OntologyIndex& index, const std::string& term) {
  if (is_attribute(index, term)) return TermKind::Attribute;
  if (is_class(index, term)) return TermKind::Class;
  return TermKind::Other;
}

const wordnet::MappingEntry* lookup(const CoreMap& core, const wordnet::SynsetId& id) {
  auto it = core.find(id);
  return it == core.end() ? nullptr : &it->second;
}

}  // namespace

std::string make_id(PatternKind pattern, std::vector<std::string> terms, Polarity polarity) {
  for (auto& t : terms) t = lower(std::move(t));
  if (symmetric(pattern)) std::sort(terms.begin(), terms.end());
  std::string id = "cq_" + std::string(to_string(pattern));
  for (const auto& t : terms) id += "_" + t;
  if (polarity == Polarity::FalsityTest) id += "_f";
  return id;
}

Generated gen_antonym(std::span<const wordnet::AntonymPair> pairs, const CoreMap& core, const OntologyIndex& index) {
  Generated g;
  std::vector<wordnet::AntonymPair> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  std::set<std::pair<std::string, std::string>> seen;

  for (const auto& p : sorted) {
    const auto* ma = lookup(core, p.a);
    const auto* mb = lookup(core, p.b);
    if (!ma || !mb) { skip(g, "unmapped"); continue; }
    if (ma->relation != MappingRelation::Equivalence || mb->relation != MappingRelation::Equivalence) {
      skip(g, "not_equivalence");
      continue;
    }
    ++g.equivalence_pairs;
    if (ma->term == mb->term) { skip(g, "identical_terms"); continue; }

    const auto ka = kind_of(index, ma->term);
    const auto kb = kind_of(index, mb->term);
    if (ka != kb) { skip(g, "mixed_kind"); continue; }
    if (ka == TermKind::Other) { skip(g, "not_applicable"); continue; }

    // Conjuncts in descending name order: (instance ?X Melting) before (instance ?X Freezing).
    auto hi = std::max(ma->term, mb->term);
    auto lo = std::min(ma->term, mb->term);
    if (!seen.emplace(lo, hi).second) { skip(g, "duplicate"); continue; }

    const bool attr = ka == TermKind::Attribute;
    const char* pred = attr ? "attribute" : "instance";
    auto body = Formula::conjunction({Formula::atom(pred, {var("X"), con(hi)}), Formula::atom(pred, {var("X"), con(lo)})});
    auto truth = Formula::negation(Formula::exists({"X"}, body));

    Provenance prov;
    prov.synsets = {p.a.str(), p.b.str()};
    prov.terms = {ma->term, mb->term};
    prov.mapping_relations = {std::string(to_string(ma->relation)), std::string(to_string(mb->relation))};
    prov.morph_relation = "antonym";
    emit_pair(g, attr ? PatternKind::AntonymAttribute : PatternKind::AntonymClass, {hi, lo}, std::move(truth),
              std::move(prov));
  }
  return g;
}

namespace {

bool class_mapping(MappingRelation r) { return r == MappingRelation::Equivalence || r == MappingRelation::Subsumption; }

std::vector<wordnet::MorphLink> canonical_order(std::span<const wordnet::MorphLink> links) {
  std::vector<wordnet::MorphLink> out(links.begin(), links.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.verb, a.noun, a.relation_name) < std::tie(b.verb, b.noun, b.relation_name);
  });
  return out;
}

Provenance link_provenance(const wordnet::MorphLink& l, const wordnet::MappingEntry& v, const wordnet::MappingEntry& n) {
  Provenance prov;
  prov.synsets = {l.verb.str(), l.noun.str()};
  prov.terms = {v.term, n.term};
  prov.mapping_relations = {std::string(to_string(v.relation)), std::string(to_string(n.relation))};
  prov.morph_relation = l.relation_name;
  return prov;
}

}  // namespace

Generated gen_relation(std::span<const wordnet::MorphLink> links, const CoreMap& core, const OntologyIndex& index) {
  Generated g;
  std::set<std::tuple<std::string, std::string, std::string>> seen;

  for (const auto& l : canonical_order(links)) {
    PatternKind pattern;
    switch (l.relation) {
      case wordnet::MorphRelation::Agent: pattern = PatternKind::RelationAgent; break;
      case wordnet::MorphRelation::Result: pattern = PatternKind::RelationResult; break;
      case wordnet::MorphRelation::Instrument: pattern = PatternKind::RelationInstrument; break;
      default: skip(g, "not_selected"); continue;
    }
    const auto* mv = lookup(core, l.verb);
    const auto* mn = lookup(core, l.noun);
    if (!mv || !mn) { skip(g, "unmapped"); continue; }
    if (!class_mapping(mv->relation) || !class_mapping(mn->relation)) { skip(g, "unsupported_mapping"); continue; }
    if (!is_class(index, mv->term) || !is_class(index, mn->term)) { skip(g, "not_class"); continue; }
    const std::string rel(to_string(l.relation));
    if (!seen.emplace(rel, mv->term, mn->term).second) { skip(g, "duplicate"); continue; }

    auto truth = Formula::exists({"X", "Y"}, Formula::conjunction({
                                                 Formula::atom("instance", {var("X"), con(mv->term)}),
                                                 Formula::atom(rel, {var("X"), var("Y")}),
                                                 Formula::atom("instance", {var("Y"), con(mn->term)}),
                                             }));
    emit_pair(g, pattern, {mv->term, mn->term}, std::move(truth), link_provenance(l, *mv, *mn));
  }
  return g;
}

Generated gen_event(std::span<const wordnet::MorphLink> links, const CoreMap& core, const OntologyIndex& index) {
  Generated g;
  std::set<std::tuple<PatternKind, std::string, std::string>> seen;

  for (const auto& l : canonical_order(links)) {
    if (l.relation != wordnet::MorphRelation::Event) { skip(g, "not_selected"); continue; }
    const auto* mv = lookup(core, l.verb);
    const auto* mn = lookup(core, l.noun);
    if (!mv || !mn) { skip(g, "unmapped"); continue; }
    if (!class_mapping(mv->relation) || !class_mapping(mn->relation)) { skip(g, "unsupported_mapping"); continue; }
    if (mv->term == mn->term) { skip(g, "same_constant"); continue; }
    if (!is_class(index, mv->term) || !is_class(index, mn->term)) { skip(g, "not_class"); continue; }

    const bool veq = mv->relation == MappingRelation::Equivalence;
    const bool neq = mn->relation == MappingRelation::Equivalence;
    PatternKind pattern;
    std::vector<std::string> terms;
    Formula truth = Formula::atom("true");  // replaced below
    if (veq && neq) {
      pattern = PatternKind::Event1_EqEq;
      terms = {mv->term, mn->term};
      truth = Formula::negation(Formula::equal(con(mv->term), con(mn->term)));
    } else if (veq != neq) {
      pattern = PatternKind::Event2_EqSub;
      const auto& eq = veq ? mv->term : mn->term;
      const auto& sub = veq ? mn->term : mv->term;
      terms = {eq, sub};
      truth = Formula::negation(Formula::atom("subclass", {con(eq), con(sub)}));
    } else {
      pattern = PatternKind::Event3_SubSub;
      terms = {mv->term, mn->term};
      truth = Formula::negation(Formula::disjunction({Formula::atom("subclass", {con(mv->term), con(mn->term)}),
                                                      Formula::atom("subclass", {con(mn->term), con(mv->term)})}));
    }
    auto key = terms;
    if (symmetric(pattern)) std::sort(key.begin(), key.end());
    if (!seen.emplace(pattern, key[0], key[1]).second) { skip(g, "duplicate"); continue; }
    emit_pair(g, pattern, std::move(terms), std::move(truth), link_provenance(l, *mv, *mn));
  }
  return g;
}

CompetencyQuestion negate_cq(const CompetencyQuestion& cq) {
  CompetencyQuestion out = cq;
  out.polarity = cq.polarity == Polarity::TruthTest ? Polarity::FalsityTest : Polarity::TruthTest;
  out.formula = nnf(Formula::negation(cq.formula));
  if (cq.pattern != PatternKind::Creative) {
    if (cq.polarity == Polarity::TruthTest) {
      out.id = cq.id + "_f";
    } else if (cq.id.size() > 2 && cq.id.compare(cq.id.size() - 2, 2, "_f") == 0) {
      out.id = cq.id.substr(0, cq.id.size() - 2);
    }
  }
  return out;
}

std::vector<CompetencyQuestion> load_creative(std::string_view text) {
  std::vector<CompetencyQuestion> out;
  std::set<std::string> ids;
  for (auto& a : kif::parse_annotated(text)) {
    auto id = a.annotations.find("id");
    auto pol = a.annotations.find("polarity");
    if (id == a.annotations.end() || pol == a.annotations.end())
      throw Error("MissingAnnotation", "line " + std::to_string(a.line) + ": creative CQ needs ;; id: and ;; polarity:");
    if (!ids.insert(id->second).second) throw Error("DuplicateLabel", "duplicate CQ id '" + id->second + "'");
    Provenance prov;
    auto syms = symbols(a.formula);
    prov.terms.assign(syms.begin(), syms.end());
    out.push_back(CompetencyQuestion{id->second, polarity_from_string(pol->second), PatternKind::Creative,
                                     std::move(a.formula), std::move(prov)});
  }
  return out;
}

std::vector<CompetencyQuestion> load_creative_file(const std::filesystem::path& path) {
  return load_creative(store::read_text(path));
}

bool check_nontriviality(const CompetencyQuestion& cq, const EntailmentCheck& prover) {
  const Formula* f = &cq.formula;
  while (f->kind() == Formula::Kind::Forall) f = &f->child(0);
  if (f->kind() != Formula::Kind::Implies) return true;
  try {
    // Valid on its own <=> the conclusion follows from the premises alone.
    auto r = prover({}, universal_closure(*f));
    return r.szs != SzsStatus::Theorem;
  } catch (const std::exception&) {
    return true;
  }
}

nlohmann::json to_json(const CompetencyQuestion& cq) {
  return {{"schema_version", store::kSchemaVersion},
          {"id", cq.id},
          {"polarity", to_string(cq.polarity)},
          {"pattern", to_string(cq.pattern)},
          {"kif_text", kif::print(cq.formula)},
          {"provenance",
           {{"synsets", cq.provenance.synsets},
            {"terms", cq.provenance.terms},
            {"mapping_relations", cq.provenance.mapping_relations},
            {"morph_relation", cq.provenance.morph_relation}}}};
}

CompetencyQuestion cq_from_json(const nlohmann::json& j) {
  Provenance prov;
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    prov.synsets = p.value("synsets", std::vector<std::string>{});
    prov.terms = p.value("terms", std::vector<std::string>{});
    prov.mapping_relations = p.value("mapping_relations", std::vector<std::string>{});
    prov.morph_relation = p.value("morph_relation", std::string{});
  }
  return CompetencyQuestion{j.at("id").get<std::string>(), polarity_from_string(j.at("polarity").get<std::string>()),
                            pattern_from_string(j.at("pattern").get<std::string>()),
                            kif::parse_formula(j.at("kif_text").get<std::string>()), std::move(prov)};
}

void save_corpus(const std::filesystem::path& path, std::span<const CompetencyQuestion> cqs) {
  std::vector<nlohmann::json> records;
  records.reserve(cqs.size());
  for (const auto& cq : cqs) records.push_back(to_json(cq));
  store::write_jsonl(path, records);
}

std::vector<CompetencyQuestion> load_corpus(const std::filesystem::path& path) {
  std::vector<CompetencyQuestion> out;
  for (const auto& j : store::read_jsonl(path)) out.push_back(cq_from_json(j));
  return out;
}

}  // namespace cqgen
}  // namespace focq
