#include "focq/ontology.hpp"

#include <algorithm>
#include <deque>
#include <regex>

#include "focq/errors.hpp"
#include "focq/kif.hpp"
#include "focq/store.hpp"
#include "focq/tptp.hpp"

namespace focq {

SourceFormat source_format_from_string(std::string_view s) {
  if (s == "kif") return SourceFormat::Kif;
  if (s == "tptp") return SourceFormat::Tptp;
  throw Error("ConfigError", "unknown ontology format '" + std::string(s) + "'");
}

namespace {

bool is_structural(const std::string& predicate) {
  return std::find(std::begin(kStructuralRelations), std::end(kStructuralRelations), predicate) !=
         std::end(kStructuralRelations);
}

// Ground binary atoms over a structural predicate, at the top level only.
void collect_fact(const Formula& f, std::vector<StructuralFact>& out) {
  if (f.kind() != Formula::Kind::Atom || !is_structural(f.predicate()) || f.args().size() != 2) return;
  const auto& a = f.args()[0];
  const auto& b = f.args()[1];
  if (a.kind != Term::Kind::Constant || b.kind != Term::Kind::Constant) return;
  out.push_back(StructuralFact{f.predicate(), a.name, b.name});
}

void add_label(std::set<std::string>& labels, const std::string& label) {
  if (!labels.insert(label).second) throw Error("DuplicateLabel", "duplicate axiom label '" + label + "'");
}

}  // namespace

Ontology ontology_from_kif(std::string name, std::string_view text) {
  Ontology o;
  o.name = std::move(name);
  o.format = SourceFormat::Kif;
  std::set<std::string> labels;
  int n = 0;
  for (auto& a : kif::parse_annotated(text)) {
    ++n;
    auto it = a.annotations.find("id");
    std::string label = it != a.annotations.end() ? it->second : "ax" + std::to_string(n);
    add_label(labels, label);
    collect_fact(a.formula, o.facts);
    auto syms = symbols(a.formula);
    o.symbols.insert(syms.begin(), syms.end());
    o.axioms.push_back(Axiom{std::move(label), std::move(a.formula), {}, "axiom"});
  }
  return o;
}

Ontology ontology_from_tptp(std::string name, std::string_view text, const std::filesystem::path& base) {
  static const std::regex kSymbol(R"(\bs__[A-Za-z0-9_]+)");
  Ontology o;
  o.name = std::move(name);
  o.format = SourceFormat::Tptp;
  std::vector<tptp::Statement> stmts;
  if (base.empty()) {
    stmts = tptp::parse(text);
  } else {
    stmts = tptp::load_file(base);
  }
  std::set<std::string> labels;
  for (auto& st : stmts) {
    if (st.kind == tptp::Statement::Kind::Include) continue;
    if (st.kind == tptp::Statement::Kind::Other) continue;
    add_label(labels, st.name);
    if (st.formula) collect_fact(*st.formula, o.facts);
    for (std::sregex_iterator it(st.text.begin(), st.text.end(), kSymbol), end; it != end; ++it)
      o.symbols.insert(tptp::demangle_symbol(it->str()));
    o.axioms.push_back(Axiom{st.name, std::move(st.formula), std::move(st.text), st.role});
  }
  return o;
}

Ontology load_ontology(const std::filesystem::path& path, SourceFormat format) {
  auto name = path.stem().string();
  Ontology o = format == SourceFormat::Kif ? ontology_from_kif(name, store::read_text(path))
                                           : ontology_from_tptp(name, {}, path);
  o.path = path;
  return o;
}

Ontology load_ontology(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return load_ontology(path, ext == ".kif" ? SourceFormat::Kif : SourceFormat::Tptp);
}

namespace {

using Adjacency = std::map<std::string, std::vector<std::string>>;

Adjacency adjacency(const std::set<Edge>& edges) {
  Adjacency adj;
  for (const auto& [child, parent] : edges) adj[child].push_back(parent);  // set order keeps parents sorted
  return adj;
}

void check_acyclic(const std::string& relation, const Adjacency& adj) {
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  std::vector<std::string> path;

  std::function<void(const std::string&)> visit = [&](const std::string& node) {
    mark[node] = Mark::Grey;
    path.push_back(node);
    if (auto it = adj.find(node); it != adj.end()) {
      for (const auto& next : it->second) {
        auto m = mark.count(next) ? mark[next] : Mark::White;
        if (m == Mark::Grey) {
          auto from = std::find(path.begin(), path.end(), next);
          std::string cycle;
          for (auto p = from; p != path.end(); ++p) cycle += *p + " -> ";
          cycle += next;
          throw Error("CycleDetected", relation + " cycle: " + cycle);
        }
        if (m == Mark::White) visit(next);
      }
    }
    path.pop_back();
    mark[node] = Mark::Black;
  };
  for (const auto& [node, _] : adj)
    if (!mark.count(node)) visit(node);
}

}  // namespace

OntologyIndex build_index(const Ontology& core, std::span<const Ontology> extra_sources) {
  OntologyIndex idx;
  auto add = [&](const Ontology& o) {
    for (const auto& f : o.facts) {
      Edge e{f.child, f.parent};
      if (f.relation == "instance") idx.instance_edges.insert(e);
      else if (f.relation == "subclass") idx.subclass_edges.insert(e);
      else if (f.relation == "subrelation") idx.subrelation_edges.insert(e);
      else if (f.relation == "subAttribute") idx.subattribute_edges.insert(e);
    }
  };
  add(core);
  for (const auto& o : extra_sources) add(o);

  idx.instance_parents = adjacency(idx.instance_edges);
  idx.subclass_parents = adjacency(idx.subclass_edges);
  idx.subrelation_parents = adjacency(idx.subrelation_edges);
  idx.subattribute_parents = adjacency(idx.subattribute_edges);
  check_acyclic("subclass", idx.subclass_parents);
  check_acyclic("subAttribute", idx.subattribute_parents);

  idx.vocabulary = core.symbols;
  return idx;
}

void intersect_vocabulary(OntologyIndex& index, const Ontology& other) {
  std::set<std::string> kept;
  std::set_intersection(index.vocabulary.begin(), index.vocabulary.end(), other.symbols.begin(), other.symbols.end(),
                        std::inserter(kept, kept.end()));
  index.vocabulary = std::move(kept);
}

namespace {

const std::vector<std::string>& parents(const std::map<std::string, std::vector<std::string>>& adj,
                                        const std::string& node) {
  static const std::vector<std::string> kNone;
  auto it = adj.find(node);
  return it == adj.end() ? kNone : it->second;
}

// Reflexive-transitive closure of `adj` from the start set.
std::set<std::string> closure(const std::map<std::string, std::vector<std::string>>& adj,
                              std::set<std::string> start) {
  std::deque<std::string> queue(start.begin(), start.end());
  while (!queue.empty()) {
    auto node = queue.front();
    queue.pop_front();
    for (const auto& p : parents(adj, node))
      if (start.insert(p).second) queue.push_back(p);
  }
  return start;
}

}  // namespace

bool is_attribute(const OntologyIndex& index, std::string_view term) {
  const std::string t(term);
  auto attrs = closure(index.subattribute_parents, {t});
  std::set<std::string> classes;
  for (const auto& a : attrs)
    for (const auto& c : parents(index.instance_parents, a)) classes.insert(c);
  return closure(index.subclass_parents, std::move(classes)).count("Attribute") > 0;
}

bool is_class(const OntologyIndex& index, std::string_view term) {
  const std::string t(term);
  if (index.subclass_parents.count(t)) return true;
  for (const auto& [child, parent] : index.subclass_edges)
    if (parent == t) return true;
  for (const auto& [child, parent] : index.instance_edges)
    if (parent == t) return true;
  return false;
}

}  // namespace focq
