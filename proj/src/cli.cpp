#include "focq/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "focq/coremap.hpp"
#include "focq/cqgen.hpp"
#include "focq/errors.hpp"
#include "focq/kif.hpp"
#include "focq/microprover.hpp"
#include "focq/ontology.hpp"
#include "focq/report.hpp"
#include "focq/runner.hpp"
#include "focq/store.hpp"
#include "focq/tptp.hpp"
#include "focq/verdict.hpp"
#include "focq/wordnet.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace focq::cli {
namespace {

struct Config {
  fs::path file;
  std::map<wordnet::Pos, fs::path> data;
  std::map<wordnet::Pos, fs::path> mappings;
  fs::path sense_index;
  fs::path morphosemantic;
  wordnet::MappingOptions mapping_options;
  fs::path core;
  std::vector<fs::path> extra;
  fs::path intersect;
  fs::path creative;
  fs::path store = "store";
  std::string prover_command;
  bool builtin = false;
  double timeout = 600.0;
  int jobs = 1;
};

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

Config load_config(const fs::path& file) {
  Config c;
  c.file = file;
  json j;
  try {
    j = json::parse(store::read_text(file));
  } catch (const json::exception& e) {
    throw Error("ConfigError", file.string() + ": " + e.what());
  }
  const auto base = file.parent_path();
  if (j.contains("wordnet")) {
    const auto& w = j["wordnet"];
    for (auto p : wordnet::kAllPos) {
      const std::string name(wordnet::pos_name(p));
      if (w.contains("data") && w["data"].contains(name)) c.data[p] = resolve(base, w["data"][name]);
      if (w.contains("mappings") && w["mappings"].contains(name)) c.mappings[p] = resolve(base, w["mappings"][name]);
    }
    if (w.contains("sense_index")) c.sense_index = resolve(base, w["sense_index"]);
    if (w.contains("morphosemantic")) c.morphosemantic = resolve(base, w["morphosemantic"]);
    if (w.contains("mapping_suffixes")) {
      c.mapping_options.suffixes.clear();
      for (const auto& [k, v] : w["mapping_suffixes"].items()) {
        if (k.size() != 1) throw Error("ConfigError", "mapping suffix must be one character: '" + k + "'");
        c.mapping_options.suffixes[k[0]] = wordnet::mapping_relation_from_string(v.get<std::string>());
      }
    }
  }
  if (j.contains("ontologies")) {
    const auto& o = j["ontologies"];
    if (o.contains("core")) c.core = resolve(base, o["core"]);
    for (const auto& e : o.value("extra", std::vector<std::string>{})) c.extra.push_back(resolve(base, e));
    if (o.contains("intersect")) c.intersect = resolve(base, o["intersect"]);
  }
  if (j.contains("creative")) c.creative = resolve(base, j["creative"]);
  if (j.contains("store")) c.store = resolve(base, j["store"]);
  if (j.contains("prover")) {
    const auto& p = j["prover"];
    c.prover_command = p.value("command", std::string{});
    c.builtin = p.value("builtin", false);
    c.timeout = p.value("timeout", 600.0);
    c.jobs = p.value("jobs", 1);
  }
  // Pinned inputs: refuse to run on anything but the recorded content.
  if (j.contains("checksums")) {
    for (const auto& [path, sum] : j["checksums"].items()) {
      const auto full = resolve(base, path);
      const auto actual = store::sha256_file(full);
      if (actual != sum.get<std::string>())
        throw Error("ChecksumMismatch", full.string() + " has sha256 " + actual + ", expected " + sum.get<std::string>());
    }
  }
  return c;
}

void apply_env(Config& c) {
  if (const char* cmd = std::getenv("FOCQ_PROVER_CMD"); cmd && *cmd) c.prover_command = cmd;
  if (const char* jobs = std::getenv("FOCQ_JOBS"); jobs && *jobs) {
    try {
      c.jobs = std::stoi(jobs);
    } catch (const std::exception&) {
      throw Error("ConfigError", "FOCQ_JOBS is not a number");
    }
  }
}

// Fills unset WordNet inputs from the conventional file names in `dir`.
void discover_inputs(Config& c, const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  for (auto p : wordnet::kAllPos) {
    const std::string name(wordnet::pos_name(p));
    if (!c.data.count(p) && fs::exists(dir / ("data." + name))) c.data[p] = dir / ("data." + name);
    const auto m = dir / ("WordNetMappings30-" + name + ".txt");
    if (!c.mappings.count(p) && fs::exists(m)) c.mappings[p] = m;
  }
  if (c.sense_index.empty() && fs::exists(dir / "index.sense")) c.sense_index = dir / "index.sense";
  if (c.morphosemantic.empty()) {
    std::vector<fs::path> found;
    for (const auto& e : fs::directory_iterator(dir)) {
      const auto name = e.path().filename().string();
      const auto ext = e.path().extension().string();
      if (name.find("morphosemantic") != std::string::npos && (ext == ".tsv" || ext == ".csv")) found.push_back(e.path());
    }
    std::sort(found.begin(), found.end());
    if (!found.empty()) c.morphosemantic = found.front();
  }
}

// ---------------------------------------------------------------------------

int cmd_ingest(Config& c, const fs::path& input, std::ostream& out) {
  if (!input.empty()) discover_inputs(c, input);
  if (c.data.empty() && c.mappings.empty() && c.sense_index.empty() && c.morphosemantic.empty())
    throw Error("NoInput", "no input files");

  std::vector<json> antonyms, mappings, links;
  std::set<wordnet::SynsetId> known;
  long synsets = 0;
  std::set<wordnet::AntonymPair> pairs;
  for (const auto& [pos, path] : c.data) {
    auto d = wordnet::parse_wn_data_file(path, pos);
    synsets += static_cast<long>(d.synsets.size());
    for (const auto& s : d.synsets) known.insert(s.id);
    pairs.insert(d.antonyms.begin(), d.antonyms.end());
  }
  for (const auto& p : pairs) antonyms.push_back({{"a", p.a.str()}, {"b", p.b.str()}});

  long skipped = 0, extra = 0;
  for (const auto& [pos, path] : c.mappings) {
    auto m = wordnet::parse_mapping_file(path, pos, c.mapping_options);
    skipped += m.skipped_unannotated;
    extra += m.extra_annotations;
    for (const auto& e : m.entries)
      mappings.push_back({{"synset", e.synset.str()},
                          {"pos", wordnet::pos_name(e.synset.pos)},
                          {"term", e.term},
                          {"relation", to_string(e.relation)}});
  }

  long dangling = 0;
  if (!c.morphosemantic.empty()) {
    if (c.sense_index.empty()) throw Error("ConfigError", "morphosemantic links need index.sense");
    const auto senses = wordnet::parse_sense_index_file(c.sense_index);
    for (const auto& l : wordnet::parse_morphosemantic_file(c.morphosemantic, senses)) {
      if (!known.empty() && (!known.count(l.verb) || !known.count(l.noun))) ++dangling;
      links.push_back({{"verb", l.verb.str()},
                       {"noun", l.noun.str()},
                       {"relation", l.relation_name},
                       {"verb_key", l.verb_key},
                       {"noun_key", l.noun_key}});
    }
  }

  store::write_jsonl(c.store / "antonyms.jsonl", antonyms);
  store::write_jsonl(c.store / "mappings.jsonl", mappings);
  store::write_jsonl(c.store / "morph_links.jsonl", links);
  out << "synsets " << synsets << "\n"
      << "antonym_pairs " << antonyms.size() << "\n"
      << "mapping_entries " << mappings.size() << "\n"
      << "mapping_unannotated " << skipped << "\n"
      << "mapping_extra_annotations " << extra << "\n"
      << "morph_links " << links.size() << "\n";
  if (dangling) out << "morph_links_unknown_synsets " << dangling << "\n";
  return 0;
}

std::vector<wordnet::MappingEntry> read_mappings(const fs::path& path) {
  std::vector<wordnet::MappingEntry> out;
  for (const auto& j : store::read_jsonl(path))
    out.push_back(wordnet::MappingEntry{wordnet::SynsetId::parse(j.at("synset").get<std::string>()),
                                        j.at("term").get<std::string>(),
                                        wordnet::mapping_relation_from_string(j.at("relation").get<std::string>())});
  return out;
}

OntologyIndex load_index(const Config& c) {
  if (c.core.empty()) throw Error("ConfigError", "no core ontology given");
  const auto core = load_ontology(c.core);
  std::vector<Ontology> extra;
  for (const auto& e : c.extra) extra.push_back(load_ontology(e));
  auto index = build_index(core, extra);
  if (!c.intersect.empty()) intersect_vocabulary(index, load_ontology(c.intersect));
  return index;
}

int cmd_propagate(Config& c, std::ostream& out) {
  const auto entries = read_mappings(c.store / "mappings.jsonl");
  const auto index = load_index(c);
  const auto prop = coremap::propagate_to_core(entries, index);

  std::vector<json> core, dropped;
  for (const auto& e : prop.core)
    core.push_back({{"synset", e.entry.synset.str()},
                    {"pos", wordnet::pos_name(e.entry.synset.pos)},
                    {"term", e.entry.term},
                    {"relation", to_string(e.entry.relation)},
                    {"provenance", {{"original_term", e.original_term}, {"path_length", e.path_length}}}});
  for (const auto& d : prop.dropped)
    dropped.push_back({{"synset", d.entry.synset.str()},
                       {"term", d.entry.term},
                       {"relation", to_string(d.entry.relation)},
                       {"reason", coremap::to_string(d.reason)}});
  store::write_jsonl(c.store / "core_mappings.jsonl", core);
  store::write_jsonl(c.store / "dropped.jsonl", dropped);
  out << "input " << entries.size() << "\ncore " << core.size() << "\ndropped " << dropped.size() << "\n";
  if (!prop.ambiguous_terms.empty()) out << "ambiguous_terms " << prop.ambiguous_terms.size() << "\n";
  return 0;
}

int cmd_generate(Config& c, const fs::path& out_path, std::ostream& out) {
  const auto core_entries = read_mappings(c.store / "core_mappings.jsonl");
  cqgen::CoreMap core;
  for (const auto& e : core_entries) core.emplace(e.synset, e);

  std::vector<wordnet::AntonymPair> pairs;
  for (const auto& j : store::read_jsonl(c.store / "antonyms.jsonl"))
    pairs.push_back(wordnet::AntonymPair::make(wordnet::SynsetId::parse(j.at("a").get<std::string>()),
                                               wordnet::SynsetId::parse(j.at("b").get<std::string>())));
  std::vector<wordnet::MorphLink> links;
  for (const auto& j : store::read_jsonl(c.store / "morph_links.jsonl")) {
    wordnet::MorphLink l;
    l.verb = wordnet::SynsetId::parse(j.at("verb").get<std::string>());
    l.noun = wordnet::SynsetId::parse(j.at("noun").get<std::string>());
    l.relation_name = j.at("relation").get<std::string>();
    l.relation = l.relation_name == "agent"        ? wordnet::MorphRelation::Agent
                 : l.relation_name == "result"     ? wordnet::MorphRelation::Result
                 : l.relation_name == "instrument" ? wordnet::MorphRelation::Instrument
                 : l.relation_name == "event"      ? wordnet::MorphRelation::Event
                                                   : wordnet::MorphRelation::Other;
    l.verb_key = j.value("verb_key", std::string{});
    l.noun_key = j.value("noun_key", std::string{});
    links.push_back(std::move(l));
  }

  const auto index = load_index(c);
  const auto ant = cqgen::gen_antonym(pairs, core, index);
  const auto rel = cqgen::gen_relation(links, core, index);
  const auto evt = cqgen::gen_event(links, core, index);

  std::vector<CompetencyQuestion> corpus;
  for (const auto* g : {&ant, &rel, &evt}) corpus.insert(corpus.end(), g->cqs.begin(), g->cqs.end());
  if (!c.creative.empty()) {
    auto creative = cqgen::load_creative_file(c.creative);
    corpus.insert(corpus.end(), creative.begin(), creative.end());
  }
  std::sort(corpus.begin(), corpus.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < corpus.size(); ++i)
    if (corpus[i].id == corpus[i - 1].id) throw Error("DuplicateLabel", "duplicate CQ id '" + corpus[i].id + "'");
  cqgen::save_corpus(out_path.empty() ? c.store / "corpus.jsonl" : out_path, corpus);

  // Totals cover the generated CQs; hand-written ones are listed separately.
  std::map<PatternKind, long> truth;
  long n_truth = 0, n_false = 0, c_truth = 0, c_false = 0;
  for (const auto& cq : corpus) {
    const bool creative = cq.pattern == PatternKind::Creative;
    if (cq.polarity == Polarity::TruthTest) {
      ++truth[cq.pattern];
      ++(creative ? c_truth : n_truth);
    } else {
      ++(creative ? c_false : n_false);
    }
  }
  for (auto k : kAllPatterns) out << "pattern " << to_string(k) << " " << truth[k] << "\n";
  std::map<report::Family, long> fam;
  for (const auto& [k, n] : truth) fam[report::family_of(k)] += n;
  for (auto f : {report::Family::Antonym, report::Family::Relation, report::Family::Event1, report::Family::Event2,
                 report::Family::Event3, report::Family::Creative})
    out << "family " << report::to_string(f) << " " << fam[f] << "\n";
  out << "antonym_equivalence_pairs " << ant.equivalence_pairs << "\n";
  for (const auto& [name, g] : {std::pair{"antonym", &ant}, std::pair{"relation", &rel}, std::pair{"event", &evt}})
    for (const auto& [reason, n] : g->skipped) out << "skipped " << name << " " << reason << " " << n << "\n";
  if (c_truth + c_false) out << "creative " << c_truth << " truth + " << c_false << " falsity\n";
  out << "totals " << n_truth << " + " << n_false << " = " << n_truth + n_false << "\n";
  return 0;
}

int cmd_translate(const fs::path& input, const fs::path& output, std::ostream& out) {
  const auto onto = ontology_from_kif(input.stem().string(), store::read_text(input));
  std::set<std::string> syms = onto.symbols;
  tptp::check_mangling_injective(syms);
  std::string text = "% translated from " + input.filename().string() + "\n";
  for (const auto& a : onto.axioms) text += tptp::emit_fof(*a.formula, a.role, a.label) + "\n";
  store::write_atomic(output, text);
  out << "axioms " << onto.axioms.size() << "\n";
  return 0;
}

int cmd_emit(const fs::path& corpus_path, const fs::path& ontology_path, const fs::path& dir, const std::string& mode,
             const std::string& include_path, long sample, unsigned seed, const std::vector<std::string>& ids,
             std::ostream& out) {
  auto corpus = cqgen::load_corpus(corpus_path);
  if (!ids.empty()) {
    std::set<std::string> want(ids.begin(), ids.end());
    std::erase_if(corpus, [&](const auto& cq) { return !want.count(cq.id); });
    if (corpus.size() != want.size()) throw Error("UnresolvedCqId", "some requested ids are not in the corpus");
  }
  if (sample > 0 && static_cast<std::size_t>(sample) < corpus.size()) {
    std::vector<CompetencyQuestion> picked;
    std::mt19937 rng(seed);
    std::sample(corpus.begin(), corpus.end(), std::back_inserter(picked), sample, rng);
    corpus = std::move(picked);
  }
  const auto onto = load_ontology(ontology_path);
  tptp::EmitOptions opt;
  if (mode == "include") {
    opt.mode = tptp::EmitOptions::Mode::Include;
    opt.include_path = include_path.empty() ? fs::absolute(ontology_path).string() : include_path;
  }
  long warnings = 0;
  for (const auto& cq : corpus) {
    auto problem = tptp::emit_problem(onto, cq, opt);
    warnings += static_cast<long>(problem.warnings.size());
    tptp::write_problem(problem, dir);
  }
  out << "problems " << corpus.size() << "\n";
  if (warnings) out << "warnings " << warnings << "\n";
  return 0;
}

int cmd_run(Config& c, const fs::path& dir, const std::string& prover, const fs::path& journal,
            const fs::path& output_dir, long max_clauses, std::ostream& out) {
  runner::RunnerConfig rc;
  rc.timeout_seconds = c.timeout;
  rc.max_parallel = c.jobs;
  rc.journal = journal.empty() ? dir / "journal.jsonl" : journal;
  rc.output_dir = output_dir.empty() ? dir / "out" : output_dir;
  if (prover == "builtin" || (prover.empty() && c.builtin)) {
    rc.backend = runner::RunnerConfig::Backend::Builtin;
  } else {
    rc.command_template = c.prover_command;
  }
  if (max_clauses >= 0) rc.builtin.max_clauses = static_cast<std::size_t>(max_clauses);
  const auto problems = runner::discover(dir);
  const auto summary = runner::run_corpus(problems, rc);
  std::map<SzsStatus, long> counts;
  for (const auto& r : summary.results) ++counts[r.result.szs];
  out << "problems " << problems.size() << "\nexecuted " << summary.executed << "\nskipped " << summary.skipped
      << "\n";
  for (const auto& [s, n] : counts) out << "status " << to_string(s) << " " << n << "\n";
  return 0;
}

std::vector<Verdict> verdicts_for(const fs::path& journal, const std::vector<CompetencyQuestion>& corpus) {
  std::map<std::string, Polarity> pol;
  for (const auto& cq : corpus) pol.emplace(cq.id, cq.polarity);
  std::map<std::string, Verdict> by_id;  // the latest record of an id wins
  for (const auto& rec : runner::read_journal(journal)) {
    auto it = pol.find(rec.cq_id);
    if (it == pol.end()) throw Error("UnresolvedCqId", "journal entry for unknown CQ '" + rec.cq_id + "'");
    by_id[rec.cq_id] = classify(it->second, rec.result, rec.cq_id);
  }
  std::vector<Verdict> out;
  for (auto& [_, v] : by_id) out.push_back(std::move(v));
  return out;
}

int cmd_report(const fs::path& journal, const fs::path& corpus_path, const std::string& format,
               std::optional<double> limit, const fs::path& verdicts_out, std::ostream& out) {
  const auto corpus = cqgen::load_corpus(corpus_path);
  const auto verdicts = verdicts_for(journal, corpus);
  if (!verdicts_out.empty()) {
    std::vector<json> recs;
    for (const auto& v : verdicts)
      recs.push_back({{"cq_id", v.cq_id},
                      {"polarity", to_string(v.polarity)},
                      {"szs", to_string(v.szs)},
                      {"classification", to_string(v.classification)},
                      {"effective", to_string(v.effective)},
                      {"flagged", v.flagged},
                      {"wall_seconds", v.wall_seconds},
                      {"used_axioms", v.used_axioms}});
    store::write_jsonl(verdicts_out, recs);
  }
  const auto rep = report::summarize(verdicts, corpus, limit);
  if (format == "csv") out << report::render_csv(rep);
  else if (format == "json") out << report::render_json(rep).dump(2) << "\n";
  else out << report::render_text(rep);
  return 0;
}

int cmd_diff(const fs::path& a, const fs::path& b, const fs::path& corpus_path, std::ostream& out) {
  const auto corpus = cqgen::load_corpus(corpus_path);
  const auto ra = report::summarize(verdicts_for(a, corpus), corpus);
  const auto rb = report::summarize(verdicts_for(b, corpus), corpus);
  out << report::render_delta(report::diff_reports(ra, rb));
  return 0;
}

int cmd_check_cqs(const fs::path& corpus_path, double timeout, std::ostream& out) {
  const auto corpus = cqgen::load_corpus(corpus_path);
  microprover::ProverOptions opt;
  opt.limit_seconds = timeout;
  auto prover = [&](const std::vector<std::pair<std::string, Formula>>& axioms, const Formula& conjecture) {
    std::vector<microprover::LabeledFormula> ax;
    for (const auto& [n, f] : axioms) ax.push_back({n, f});
    return microprover::prove(ax, microprover::LabeledFormula{"cq", conjecture}, opt).result;
  };
  long trivial = 0;
  for (const auto& cq : corpus) {
    if (!cqgen::check_nontriviality(cq, prover)) {
      ++trivial;
      out << "trivial " << cq.id << ": conclusion follows from the premises alone\n";
    }
  }
  out << "checked " << corpus.size() << "\ntrivial " << trivial << "\n";
  return 0;
}

int cmd_prove(const fs::path& problem, double timeout, long max_clauses, long max_clause_size, bool no_sos,
              std::ostream& out) {
  microprover::ProverOptions opt;
  opt.limit_seconds = timeout;
  if (max_clauses >= 0) opt.max_clauses = static_cast<std::size_t>(max_clauses);
  if (max_clause_size > 0) opt.max_clause_size = static_cast<std::size_t>(max_clause_size);
  opt.set_of_support = !no_sos;
  out << microprover::prove_statements(tptp::load_file(problem), opt).transcript << std::flush;
  return 0;
}

}  // namespace

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Competency-question evaluation of first-order ontologies"};
  app.require_subcommand(1);
  std::string config_file;
  app.add_option("--config", config_file, "JSON configuration file");

  std::string store_dir;
  auto add_store = [&](CLI::App* sub) { sub->add_option("--store", store_dir, "intermediate store directory"); };
  std::string core, intersect;
  std::vector<std::string> extra;
  auto add_onto = [&](CLI::App* sub) {
    sub->add_option("--core", core, "core ontology (.kif or TPTP); defines the vocabulary");
    sub->add_option("--extra", extra, "further ontologies contributing structural edges");
    sub->add_option("--intersect", intersect, "restrict the vocabulary to terms also in this ontology");
  };

  auto* ingest = app.add_subcommand("ingest", "WordNet, mapping and morphosemantic files to JSON stores");
  std::string input_dir;
  ingest->add_option("--input", input_dir, "directory with data.*, WordNetMappings30-*.txt, index.sense, morphosemantic links");
  add_store(ingest);

  auto* propagate = app.add_subcommand("propagate", "move mappings onto the core vocabulary");
  add_store(propagate);
  add_onto(propagate);

  auto* generate = app.add_subcommand("generate", "generate the CQ corpus");
  std::string gen_out, creative;
  add_store(generate);
  add_onto(generate);
  generate->add_option("--creative", creative, "annotated SUO-KIF file of hand-written CQs");
  generate->add_option("--out", gen_out, "corpus file (default <store>/corpus.jsonl)");

  auto* translate = app.add_subcommand("translate", "SUO-KIF file to TPTP axioms");
  std::string tr_in, tr_out;
  translate->add_option("--input", tr_in)->required();
  translate->add_option("--output", tr_out)->required();

  auto* emit = app.add_subcommand("emit", "write one TPTP problem per CQ");
  std::string em_corpus, em_onto, em_out, em_mode = "inline", em_include;
  long em_sample = 0;
  unsigned em_seed = 1;
  std::vector<std::string> em_ids;
  emit->add_option("--corpus", em_corpus)->required();
  emit->add_option("--ontology", em_onto)->required();
  emit->add_option("--out", em_out)->required();
  emit->add_option("--mode", em_mode)->check(CLI::IsMember({"inline", "include"}));
  emit->add_option("--include-path", em_include, "path written into include directives");
  emit->add_option("--sample", em_sample, "emit only this many CQs, sampled with --seed");
  emit->add_option("--seed", em_seed);
  emit->add_option("--ids", em_ids, "emit only these CQ ids")->delimiter(',');

  auto* run = app.add_subcommand("run", "run a prover over a problem directory");
  std::string run_dir, run_cmd, run_prover, run_journal, run_outdir;
  std::optional<double> run_timeout;
  std::optional<int> run_jobs;
  long run_max_clauses = -1;
  run->add_option("--corpus", run_dir, "directory of .p problems")->required();
  run->add_option("--prover-cmd", run_cmd, "command template with {problem} and {timeout}");
  run->add_option("--prover", run_prover, "'builtin' selects the built-in resolution prover")
      ->check(CLI::IsMember({"builtin", "external"}));
  run->add_option("--timeout", run_timeout, "seconds per problem (default 600)");
  run->add_option("--jobs", run_jobs, "parallel prover processes");
  run->add_option("--journal", run_journal, "journal file (default <corpus>/journal.jsonl)");
  run->add_option("--output-dir", run_outdir, "raw prover outputs (default <corpus>/out)");
  run->add_option("--max-clauses", run_max_clauses, "built-in prover clause cap (0: none)");

  auto* rep = app.add_subcommand("report", "summarise a journal");
  std::string rep_journal, rep_corpus, rep_format = "text", rep_verdicts;
  std::optional<double> rep_limit;
  rep->add_option("--journal", rep_journal)->required();
  rep->add_option("--corpus", rep_corpus)->required();
  rep->add_option("--format", rep_format)->check(CLI::IsMember({"text", "csv", "json"}));
  rep->add_option("--timeout", rep_limit, "time limit of the campaign, noted in the text output");
  rep->add_option("--verdicts-out", rep_verdicts, "also write per-CQ verdicts as JSON lines");

  auto* diff = app.add_subcommand("diff", "compare two journals over the same corpus");
  std::string diff_a, diff_b, diff_corpus;
  diff->add_option("--a", diff_a)->required();
  diff->add_option("--b", diff_b)->required();
  diff->add_option("--corpus", diff_corpus)->required();

  auto* check = app.add_subcommand("check-cqs", "flag CQs whose conclusion follows from their premises alone");
  std::string check_corpus;
  double check_timeout = 5.0;
  check->add_option("--corpus", check_corpus)->required();
  check->add_option("--timeout", check_timeout);

  auto* prove = app.add_subcommand("prove", "built-in resolution prover on a TPTP problem");
  std::string prove_file;
  double prove_timeout = 600.0;
  long prove_max_clauses = -1, prove_max_size = 0;
  bool prove_no_sos = false;
  prove->add_option("problem", prove_file)->required();
  prove->add_option("--timeout", prove_timeout);
  prove->add_option("--max-clauses", prove_max_clauses, "generated-clause cap (0: none)");
  prove->add_option("--max-clause-size", prove_max_size);
  prove->add_flag("--no-sos", prove_no_sos, "treat axioms like the negated conjecture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    Config c;
    if (!config_file.empty()) c = load_config(config_file);
    apply_env(c);
    if (!store_dir.empty()) c.store = store_dir;
    if (!core.empty()) c.core = core;
    if (!extra.empty()) c.extra.assign(extra.begin(), extra.end());
    if (!intersect.empty()) c.intersect = intersect;
    if (!creative.empty()) c.creative = creative;

    if (*ingest) return cmd_ingest(c, input_dir, out);
    if (*propagate) return cmd_propagate(c, out);
    if (*generate) return cmd_generate(c, gen_out, out);
    if (*translate) return cmd_translate(tr_in, tr_out, out);
    if (*emit) return cmd_emit(em_corpus, em_onto, em_out, em_mode, em_include, em_sample, em_seed, em_ids, out);
    if (*run) {
      if (!run_cmd.empty()) c.prover_command = run_cmd;
      if (run_timeout) c.timeout = *run_timeout;
      if (run_jobs) c.jobs = *run_jobs;
      return cmd_run(c, run_dir, run_prover, run_journal, run_outdir, run_max_clauses, out);
    }
    if (*rep) return cmd_report(rep_journal, rep_corpus, rep_format, rep_limit, rep_verdicts, out);
    if (*diff) return cmd_diff(diff_a, diff_b, diff_corpus, out);
    if (*check) return cmd_check_cqs(check_corpus, check_timeout, out);
    if (*prove) return cmd_prove(prove_file, prove_timeout, prove_max_clauses, prove_max_size, prove_no_sos, out);
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << std::endl;
    return e.code() == "NoInput" ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << std::endl;
    return 1;
  }
  return 2;
}

}  // namespace focq::cli
