#include "focq/microprover.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "focq/tptp.hpp"

namespace focq::microprover {

// ---------------------------------------------------------------------------
// Clausification

namespace {

struct Matrix {
  enum class Kind { Lit, And, Or };
  Kind kind = Kind::Lit;
  Literal lit;
  std::vector<Matrix> kids;
};

using Env = std::map<std::string, Term>;

Term substitute(const Term& t, const Env& env) {
  if (t.is_variable()) {
    auto it = env.find(t.name);
    return it == env.end() ? t : it->second;
  }
  if (t.args.empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(substitute(a, env));
  return Term::function(t.name, std::move(args));
}

std::vector<Term> substitute_all(const std::vector<Term>& ts, const Env& env) {
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(substitute(t, env));
  return out;
}

using Cnf = std::vector<std::vector<Literal>>;

Cnf to_cnf(const Matrix& m) {
  switch (m.kind) {
    case Matrix::Kind::Lit: return {{m.lit}};
    case Matrix::Kind::And: {
      Cnf out;
      for (const auto& k : m.kids) {
        auto c = to_cnf(k);
        out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
      }
      return out;
    }
    case Matrix::Kind::Or: {
      Cnf acc{{}};
      for (const auto& k : m.kids) {
        auto c = to_cnf(k);
        Cnf next;
        next.reserve(acc.size() * c.size());
        for (const auto& a : acc)
          for (const auto& b : c) {
            auto merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            next.push_back(std::move(merged));
          }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

void rename_term(Term& t, std::map<std::string, std::string>& names) {
  if (t.is_variable()) {
    auto [it, inserted] = names.emplace(t.name, "");
    if (inserted) it->second = "X" + std::to_string(names.size() - 1);
    t.name = it->second;
    return;
  }
  for (auto& a : t.args) rename_term(a, names);
}

// Drops duplicate literals; false for tautologies.
bool tidy(std::vector<Literal>& lits) {
  std::vector<Literal> out;
  for (auto& l : lits) {
    bool dup = false;
    for (const auto& o : out) {
      if (o.predicate == l.predicate && o.args == l.args) {
        if (o.positive != l.positive) return false;
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(l));
  }
  lits = std::move(out);
  std::map<std::string, std::string> names;
  for (auto& l : lits)
    for (auto& a : l.args) rename_term(a, names);
  return true;
}

}  // namespace

Clausifier::Clausifier(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}

std::string Clausifier::fresh_skolem() {
  while (true) {
    auto name = "sk" + std::to_string(next_skolem_++);
    if (!reserved_.count(name)) return name;
  }
}

std::vector<Clause> Clausifier::operator()(const Formula& f, const std::string& origin) {
  const auto g = nnf(universal_closure(f));

  std::function<Matrix(const Formula&, Env, std::vector<Term>)> walk = [&](const Formula& h, Env env,
                                                                            std::vector<Term> universals) -> Matrix {
    using K = Formula::Kind;
    switch (h.kind()) {
      case K::Atom: return Matrix{Matrix::Kind::Lit, Literal{true, h.predicate(), substitute_all(h.args(), env)}, {}};
      case K::Equal: return Matrix{Matrix::Kind::Lit, Literal{true, "=", substitute_all(h.args(), env)}, {}};
      case K::Not: {
        const auto& a = h.child(0);
        return Matrix{Matrix::Kind::Lit, Literal{false, a.predicate(), substitute_all(a.args(), env)}, {}};
      }
      case K::And:
      case K::Or: {
        Matrix m{h.kind() == K::And ? Matrix::Kind::And : Matrix::Kind::Or, {}, {}};
        for (const auto& c : h.children()) m.kids.push_back(walk(c, env, universals));
        return m;
      }
      case K::Forall:
        for (const auto& v : h.variables()) {
          auto fresh = Term::variable("_U" + std::to_string(next_var_++));
          env[v] = fresh;
          universals.push_back(fresh);
        }
        return walk(h.child(0), std::move(env), std::move(universals));
      case K::Exists:
        for (const auto& v : h.variables()) {
          auto name = fresh_skolem();
          env[v] = universals.empty() ? Term::constant(name) : Term::function(name, universals);
        }
        return walk(h.child(0), std::move(env), std::move(universals));
      default: break;
    }
    throw std::logic_error("clausify: formula not in negation normal form");
  };

  std::vector<Clause> out;
  for (auto& lits : to_cnf(walk(g, {}, {}))) {
    if (!tidy(lits)) continue;
    out.push_back(Clause{std::move(lits), origin});
  }
  return out;
}

std::vector<Clause> clausify(const Formula& f) {
  Clausifier c(symbols(f));
  return c(f);
}

namespace {

std::string term_text(const Term& t) {
  if (t.is_variable()) return t.name;
  std::string s = tptp::mangle_symbol(t.name);
  if (t.args.empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ", ";
    s += term_text(t.args[i]);
  }
  return s + ')';
}

}  // namespace

std::string to_string(const Literal& l) {
  if (l.predicate == "=" && l.args.size() == 2)
    return term_text(l.args[0]) + (l.positive ? " = " : " != ") + term_text(l.args[1]);
  std::string s = l.positive ? "" : "~ ";
  s += term_text(Term::function(l.predicate, l.args));
  return s;
}

std::string to_string(const Clause& c) {
  if (c.literals.empty()) return "$false";
  std::string s;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i) s += " | ";
    s += to_string(c.literals[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Saturation

namespace {

struct Symbol {
  std::string name;
  int arity = 0;
  bool predicate = false;
};

struct Node {
  int sym = -1;  // -1 for variables
  int var = -1;
  std::vector<int> args;
  bool ground = true;
  int weight = 1;
};

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Hash-consed terms: structurally equal terms share one id.
class Bank {
 public:
  int symbol(const std::string& name, int arity, bool predicate) {
    auto key = std::make_tuple(name, arity, predicate);
    auto it = symbol_ids_.find(key);
    if (it != symbol_ids_.end()) return it->second;
    symbols_.push_back(Symbol{name, arity, predicate});
    symbol_ids_.emplace(key, static_cast<int>(symbols_.size() - 1));
    return static_cast<int>(symbols_.size() - 1);
  }
  const Symbol& sym(int s) const { return symbols_[s]; }
  std::size_t symbol_count() const { return symbols_.size(); }

  int var(int v) {
    while (static_cast<int>(vars_.size()) <= v) {
      Node n;
      n.var = static_cast<int>(vars_.size());
      n.ground = false;
      nodes_.push_back(n);
      vars_.push_back(static_cast<int>(nodes_.size() - 1));
    }
    return vars_[v];
  }

  int app(int sym, const std::vector<int>& args) {
    std::vector<int> key;
    key.reserve(args.size() + 1);
    key.push_back(sym);
    key.insert(key.end(), args.begin(), args.end());
    auto it = cons_.find(key);
    if (it != cons_.end()) return it->second;
    Node n;
    n.sym = sym;
    n.args = args;
    for (int a : args) {
      n.ground = n.ground && nodes_[a].ground;
      n.weight += nodes_[a].weight;
    }
    nodes_.push_back(std::move(n));
    int id = static_cast<int>(nodes_.size() - 1);
    cons_.emplace(std::move(key), id);
    return id;
  }

  const Node& node(int id) const { return nodes_[id]; }

 private:
  std::vector<Node> nodes_;
  std::vector<int> vars_;
  std::unordered_map<std::vector<int>, int, KeyHash> cons_;
  std::map<std::tuple<std::string, int, bool>, int> symbol_ids_;
  std::vector<Symbol> symbols_;
};

// Literal = atom id * 2 + (1 if negative).
inline int lit_atom(int lit) { return lit >> 1; }
inline bool lit_negative(int lit) { return lit & 1; }
inline int make_lit(int atom, bool negative) { return atom * 2 + (negative ? 1 : 0); }

struct IClause {
  std::vector<int> lits;  // sorted, unique
  int nvars = 0;
  int weight = 0;
  std::vector<int> parents;
  std::string rule;         // "input", "resolution", "factoring"
  std::string name;         // input clauses: formula name
  std::string role;         // input clauses: axiom, negated_conjecture, equality
  bool from_conjecture = false;
  // Feature bits; a subsumer's bits are a subset of the subsumed clause's.
  std::uint64_t features = 0;
};

class Saturation {
 public:
  Saturation(const ProverOptions& opt, std::chrono::steady_clock::time_point deadline)
      : opt_(opt), deadline_(deadline) {}

  Bank bank;

  int add_input(const Clause& c, const std::string& name, const std::string& role, bool support);
  void add_equality_axioms();
  bool uses_equality() const { return uses_equality_; }

  SzsStatus run();

  std::string proof_block() const;
  std::vector<std::string> used_axioms() const;
  long given() const { return given_; }
  long generated() const { return generated_; }

 private:
  int term_from(const Term& t, std::map<std::string, int>& vars);
  int atom_from(const Literal& l, std::map<std::string, int>& vars);

  // Unification over a shared binding array (variables of the second clause
  // are shifted past those of the first).
  int deref(int t) const;
  bool occurs(int v, int t) const;
  bool unify(int a, int b);
  void undo(std::size_t mark);
  int apply(int t);

  bool match(int pattern, int target);
  std::uint64_t features(const std::vector<int>& lits) const;
  bool subsume_from(const IClause& c, const IClause& d, std::size_t i);
  bool subsumes(const IClause& c, const IClause& d);
  bool forward_subsumed(const IClause& d);

  int shift(int t, int offset);
  // Builds, normalises and queues a new clause; false when the empty clause appeared.
  bool emit(std::vector<int> lits, std::vector<int> parents, const std::string& rule, bool from_conjecture);
  void activate(int id);
  bool infer(int given);

  std::string clause_text(const IClause& c) const;
  std::string term_text(int t) const;

  ProverOptions opt_;
  std::chrono::steady_clock::time_point deadline_;
  bool uses_equality_ = false;

  std::vector<IClause> clauses_;
  std::vector<int> binding_;
  std::vector<int> trail_;

  struct Rank {
    std::size_t lits;
    int weight;
    int id;
    bool operator>(const Rank& o) const { return std::tie(lits, weight, id) > std::tie(o.lits, o.weight, o.id); }
  };
  std::priority_queue<Rank, std::vector<Rank>, std::greater<>> by_size_;
  std::priority_queue<int, std::vector<int>, std::greater<>> by_age_;
  std::vector<char> done_;

  std::vector<int> active_;
  // (predicate symbol, negative) -> [(clause, literal index)]
  std::map<std::pair<int, bool>, std::vector<std::pair<int, int>>> index_;
  std::unordered_set<int> ground_units_;
  std::map<std::pair<int, bool>, std::vector<int>> subsumers_;
  std::unordered_set<std::vector<int>, KeyHash> seen_;

  int empty_clause_ = -1;
  bool capped_ = false;
  long given_ = 0;
  long generated_ = 0;
};

int Saturation::term_from(const Term& t, std::map<std::string, int>& vars) {
  if (t.is_variable()) {
    auto [it, inserted] = vars.emplace(t.name, static_cast<int>(vars.size()));
    return bank.var(it->second);
  }
  std::vector<int> args;
  for (const auto& a : t.args) args.push_back(term_from(a, vars));
  return bank.app(bank.symbol(t.name, static_cast<int>(t.args.size()), false), args);
}

int Saturation::atom_from(const Literal& l, std::map<std::string, int>& vars) {
  std::vector<int> args;
  for (const auto& a : l.args) args.push_back(term_from(a, vars));
  if (l.predicate == "=") uses_equality_ = true;
  return bank.app(bank.symbol(l.predicate, static_cast<int>(l.args.size()), true), args);
}

int Saturation::add_input(const Clause& c, const std::string& name, const std::string& role, bool support) {
  std::map<std::string, int> vars;
  IClause ic;
  for (const auto& l : c.literals) ic.lits.push_back(make_lit(atom_from(l, vars), !l.positive));
  std::sort(ic.lits.begin(), ic.lits.end());
  ic.lits.erase(std::unique(ic.lits.begin(), ic.lits.end()), ic.lits.end());
  ic.nvars = static_cast<int>(vars.size());
  for (int l : ic.lits) ic.weight += bank.node(lit_atom(l)).weight;
  ic.features = features(ic.lits);
  ic.rule = "input";
  ic.name = name;
  ic.role = role;
  ic.from_conjecture = role == "negated_conjecture";
  const int id = static_cast<int>(clauses_.size());
  const bool empty = ic.lits.empty();
  clauses_.push_back(std::move(ic));
  done_.push_back(0);
  if (empty && empty_clause_ < 0) empty_clause_ = id;
  if (support) {
    by_size_.push(Rank{clauses_[id].lits.size(), clauses_[id].weight, id});
    by_age_.push(id);
  } else {
    done_[id] = 1;
    activate(id);
  }
  return id;
}

void Saturation::add_equality_axioms() {
  const int eq = bank.symbol("=", 2, true);
  auto v = [&](int i) { return bank.var(i); };
  auto eq_atom = [&](int a, int b) { return bank.app(eq, {a, b}); };
  auto add = [&](std::vector<int> lits, int nvars, const std::string& what) {
    IClause ic;
    std::sort(lits.begin(), lits.end());
    ic.lits = std::move(lits);
    ic.nvars = nvars;
    for (int l : ic.lits) ic.weight += bank.node(lit_atom(l)).weight;
    ic.features = features(ic.lits);
    ic.rule = "input";
    ic.name = what;
    ic.role = "equality";
    clauses_.push_back(std::move(ic));
    done_.push_back(1);
    activate(static_cast<int>(clauses_.size() - 1));
  };
  add({make_lit(eq_atom(v(0), v(0)), false)}, 1, "reflexivity");
  add({make_lit(eq_atom(v(0), v(1)), true), make_lit(eq_atom(v(1), v(0)), false)}, 2, "symmetry");
  add({make_lit(eq_atom(v(0), v(1)), true), make_lit(eq_atom(v(1), v(2)), true), make_lit(eq_atom(v(0), v(2)), false)},
      3, "transitivity");

  const std::size_t n = bank.symbol_count();
  for (std::size_t s = 0; s < n; ++s) {
    const auto sym = bank.sym(static_cast<int>(s));
    if (sym.arity == 0 || (sym.predicate && sym.name == "=")) continue;
    for (int i = 0; i < sym.arity; ++i) {
      // Variables 0..arity-1 are the arguments; `arity` replaces argument i.
      std::vector<int> lhs, rhs;
      for (int j = 0; j < sym.arity; ++j) {
        lhs.push_back(v(j));
        rhs.push_back(j == i ? v(sym.arity) : v(j));
      }
      const int l = bank.app(static_cast<int>(s), lhs);
      const int r = bank.app(static_cast<int>(s), rhs);
      const int premise = make_lit(eq_atom(v(i), v(sym.arity)), true);
      if (sym.predicate) {
        add({premise, make_lit(l, true), make_lit(r, false)}, sym.arity + 1, "congruence_" + sym.name);
      } else {
        add({premise, make_lit(eq_atom(l, r), false)}, sym.arity + 1, "congruence_" + sym.name);
      }
    }
  }
}

int Saturation::deref(int t) const {
  while (true) {
    const auto& n = bank.node(t);
    if (n.var < 0 || binding_[n.var] < 0) return t;
    t = binding_[n.var];
  }
}

bool Saturation::occurs(int v, int t) const {
  t = deref(t);
  const auto& n = bank.node(t);
  if (n.var >= 0) return n.var == v;
  if (n.ground) return false;
  for (int a : n.args)
    if (occurs(v, a)) return true;
  return false;
}

bool Saturation::unify(int a, int b) {
  std::vector<std::pair<int, int>> stack{{a, b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    x = deref(x);
    y = deref(y);
    if (x == y) continue;
    const auto& nx = bank.node(x);
    const auto& ny = bank.node(y);
    if (nx.var >= 0 || ny.var >= 0) {
      const int v = nx.var >= 0 ? nx.var : ny.var;
      const int t = nx.var >= 0 ? y : x;
      if (occurs(v, t)) return false;
      binding_[v] = t;
      trail_.push_back(v);
      continue;
    }
    if (nx.sym != ny.sym || nx.args.size() != ny.args.size()) return false;
    for (std::size_t i = 0; i < nx.args.size(); ++i) stack.emplace_back(nx.args[i], ny.args[i]);
  }
  return true;
}

void Saturation::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    binding_[trail_.back()] = -1;
    trail_.pop_back();
  }
}

int Saturation::apply(int t) {
  t = deref(t);
  const auto& n = bank.node(t);
  if (n.ground || n.var >= 0) return t;
  std::vector<int> args;
  args.reserve(n.args.size());
  const int sym = n.sym;
  const auto src = n.args;  // bank may grow while we recurse
  for (int a : src) args.push_back(apply(a));
  return bank.app(sym, args);
}

int Saturation::shift(int t, int offset) {
  const auto& n = bank.node(t);
  if (n.ground || offset == 0) return t;
  if (n.var >= 0) return bank.var(n.var + offset);
  const int sym = n.sym;
  const auto src = n.args;
  std::vector<int> args;
  args.reserve(src.size());
  for (int a : src) args.push_back(shift(a, offset));
  return bank.app(sym, args);
}

// One-way matching: only variables of `pattern` get bound; target variables
// behave like constants. Bindings go through binding_/trail_.
bool Saturation::match(int pattern, int target) {
  const auto& p = bank.node(pattern);
  if (p.ground) return pattern == target;
  if (p.var >= 0) {
    if (binding_[p.var] >= 0) return binding_[p.var] == target;
    binding_[p.var] = target;
    trail_.push_back(p.var);
    return true;
  }
  const auto& t = bank.node(target);
  if (t.var >= 0 || t.sym != p.sym) return false;
  for (std::size_t i = 0; i < p.args.size(); ++i)
    if (!match(p.args[i], t.args[i])) return false;
  return true;
}

bool Saturation::subsume_from(const IClause& c, const IClause& d, std::size_t i) {
  if (i == c.lits.size()) return true;
  const int cl = c.lits[i];
  const int csym = bank.node(lit_atom(cl)).sym;
  for (int dl : d.lits) {
    if (lit_negative(cl) != lit_negative(dl) || csym != bank.node(lit_atom(dl)).sym) continue;
    const std::size_t m = trail_.size();
    if (match(lit_atom(cl), lit_atom(dl)) && subsume_from(c, d, i + 1)) return true;
    undo(m);
  }
  return false;
}

std::uint64_t Saturation::features(const std::vector<int>& lits) const {
  auto bit = [](std::size_t h) { return std::uint64_t{1} << (h % 64); };
  std::uint64_t f = 0;
  for (int l : lits) {
    const auto& atom = bank.node(lit_atom(l));
    const std::size_t base = static_cast<std::size_t>(atom.sym) * 2 + (lit_negative(l) ? 1 : 0);
    f |= bit(base * 0x9e3779b1u);
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      const auto& a = bank.node(atom.args[i]);
      if (a.var < 0) f |= bit((base * 31 + i) * 0x85ebca6bu + static_cast<std::size_t>(a.sym) * 0xc2b2ae35u);
    }
  }
  return f;
}

bool Saturation::subsumes(const IClause& c, const IClause& d) {
  if (c.lits.size() > d.lits.size() || (c.features & ~d.features)) return false;
  if (static_cast<int>(binding_.size()) < c.nvars) binding_.resize(c.nvars, -1);
  const std::size_t mark = trail_.size();
  const bool ok = subsume_from(c, d, 0);
  undo(mark);
  return ok;
}

// Candidate subsumers are bucketed by the (symbol, sign) of their first
// literal, which must occur in the subsumed clause.
bool Saturation::forward_subsumed(const IClause& d) {
  for (int l : d.lits)
    if (ground_units_.count(l)) return true;
  std::pair<int, bool> last{-1, false};
  for (int l : d.lits) {
    const std::pair<int, bool> key{bank.node(lit_atom(l)).sym, lit_negative(l)};
    if (key == last) continue;
    last = key;
    auto it = subsumers_.find(key);
    if (it == subsumers_.end()) continue;
    for (int c : it->second)
      if (subsumes(clauses_[c], d)) return true;
  }
  return false;
}

void Saturation::activate(int id) {
  const auto& c = clauses_[id];
  active_.push_back(id);
  for (std::size_t i = 0; i < c.lits.size(); ++i) {
    const int atom = lit_atom(c.lits[i]);
    index_[{bank.node(atom).sym, lit_negative(c.lits[i])}].emplace_back(id, static_cast<int>(i));
  }
  if (c.lits.size() == 1 && bank.node(lit_atom(c.lits[0])).ground) {
    ground_units_.insert(c.lits[0]);
  } else if (!c.lits.empty()) {
    subsumers_[{bank.node(lit_atom(c.lits[0])).sym, lit_negative(c.lits[0])}].push_back(id);
  }
}

bool Saturation::emit(std::vector<int> lits, std::vector<int> parents, const std::string& rule, bool from_conjecture) {
  // Normalise variable numbering by first occurrence, then sort.
  std::map<int, int> renaming;
  std::function<int(int)> rename = [&](int t) -> int {
    const auto& n = bank.node(t);
    if (n.ground) return t;
    if (n.var >= 0) {
      auto [it, inserted] = renaming.emplace(n.var, static_cast<int>(renaming.size()));
      return bank.var(it->second);
    }
    const int sym = n.sym;
    const auto src = n.args;
    std::vector<int> args;
    for (int a : src) args.push_back(rename(a));
    return bank.app(sym, args);
  };
  std::vector<int> out;
  for (int l : lits) out.push_back(make_lit(rename(lit_atom(l)), lit_negative(l)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (lit_atom(out[i]) == lit_atom(out[i + 1])) return true;  // tautology
  if (out.size() > opt_.max_clause_size) return true;
  if (!seen_.insert(out).second) return true;

  IClause c;
  c.lits = std::move(out);
  c.nvars = static_cast<int>(renaming.size());
  for (int l : c.lits) c.weight += bank.node(lit_atom(l)).weight;
  c.features = features(c.lits);
  c.parents = std::move(parents);
  c.rule = rule;
  c.from_conjecture = from_conjecture;
  if (!c.lits.empty() && forward_subsumed(c)) return true;

  const int id = static_cast<int>(clauses_.size());
  clauses_.push_back(std::move(c));
  done_.push_back(0);
  ++generated_;
  if (clauses_[id].lits.empty()) {
    empty_clause_ = id;
    return false;
  }
  by_size_.push(Rank{clauses_[id].lits.size(), clauses_[id].weight, id});
  by_age_.push(id);
  if (opt_.max_clauses > 0 && static_cast<std::size_t>(generated_) >= opt_.max_clauses) capped_ = true;
  return true;
}

bool Saturation::infer(int g) {
  const IClause given = clauses_[g];  // copy: clauses_ grows below
  const int offset = given.nvars;

  // Factoring.
  for (std::size_t i = 0; i < given.lits.size(); ++i) {
    for (std::size_t j = i + 1; j < given.lits.size(); ++j) {
      const int li = given.lits[i], lj = given.lits[j];
      if (lit_negative(li) != lit_negative(lj)) continue;
      if (static_cast<int>(binding_.size()) < given.nvars) binding_.resize(given.nvars, -1);
      const std::size_t mark = trail_.size();
      if (unify(lit_atom(li), lit_atom(lj))) {
        std::vector<int> lits;
        for (std::size_t k = 0; k < given.lits.size(); ++k)
          if (k != j) lits.push_back(make_lit(apply(lit_atom(given.lits[k])), lit_negative(given.lits[k])));
        undo(mark);
        if (!emit(std::move(lits), {g}, "factoring", given.from_conjecture)) return false;
      } else {
        undo(mark);
      }
    }
  }

  // Binary resolution against every active clause (the given one included).
  for (std::size_t i = 0; i < given.lits.size(); ++i) {
    const int gl = given.lits[i];
    auto it = index_.find({bank.node(lit_atom(gl)).sym, !lit_negative(gl)});
    if (it == index_.end()) continue;
    const auto partners = it->second;  // copy: activation may not happen here, but emit can grow index_ buckets
    for (const auto& [pid, pi] : partners) {
      if (std::chrono::steady_clock::now() > deadline_) return true;
      const IClause& p = clauses_[pid];
      const int total = offset + p.nvars;
      if (static_cast<int>(binding_.size()) < total) binding_.resize(total, -1);
      const std::size_t mark = trail_.size();
      const int patom = shift(lit_atom(p.lits[pi]), offset);
      if (!unify(lit_atom(gl), patom)) {
        undo(mark);
        continue;
      }
      std::vector<int> lits;
      for (std::size_t k = 0; k < given.lits.size(); ++k)
        if (k != i) lits.push_back(make_lit(apply(lit_atom(given.lits[k])), lit_negative(given.lits[k])));
      for (std::size_t k = 0; k < p.lits.size(); ++k)
        if (static_cast<int>(k) != pi)
          lits.push_back(make_lit(apply(shift(lit_atom(p.lits[k]), offset)), lit_negative(p.lits[k])));
      undo(mark);
      if (!emit(std::move(lits), {g, pid}, "resolution", given.from_conjecture || p.from_conjecture)) return false;
      if (capped_) return true;
    }
  }
  return true;
}

SzsStatus Saturation::run() {
  if (empty_clause_ >= 0) return SzsStatus::Theorem;
  long picks = 0;
  while (true) {
    if (std::chrono::steady_clock::now() > deadline_) return SzsStatus::Timeout;
    if (capped_) return SzsStatus::GaveUp;
    // Unit preference (fewest literals, then lightest) with every fifth pick
    // taking the oldest clause so that nothing starves.
    int g = -1;
    if (++picks % 5 == 0) {
      while (!by_age_.empty() && done_[by_age_.top()]) by_age_.pop();
      if (!by_age_.empty()) {
        g = by_age_.top();
        by_age_.pop();
      }
    }
    if (g < 0) {
      while (!by_size_.empty() && done_[by_size_.top().id]) by_size_.pop();
      if (by_size_.empty()) return SzsStatus::GaveUp;  // saturated without a refutation
      g = by_size_.top().id;
      by_size_.pop();
    }
    done_[g] = 1;
    if (clauses_[g].rule != "input" && forward_subsumed(clauses_[g])) continue;
    ++given_;
    activate(g);
    if (!infer(g)) return SzsStatus::Theorem;
  }
}

std::string Saturation::term_text(int t) const {
  const auto& n = bank.node(t);
  if (n.var >= 0) return "X" + std::to_string(n.var);
  std::string s = tptp::mangle_symbol(bank.sym(n.sym).name);
  if (n.args.empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    if (i) s += ", ";
    s += term_text(n.args[i]);
  }
  return s + ')';
}

std::string Saturation::clause_text(const IClause& c) const {
  if (c.lits.empty()) return "$false";
  std::string s;
  for (std::size_t i = 0; i < c.lits.size(); ++i) {
    if (i) s += " | ";
    const int atom = lit_atom(c.lits[i]);
    const auto& n = bank.node(atom);
    if (bank.sym(n.sym).name == "=" && n.args.size() == 2) {
      s += term_text(n.args[0]) + (lit_negative(c.lits[i]) ? " != " : " = ") + term_text(n.args[1]);
    } else {
      if (lit_negative(c.lits[i])) s += "~ ";
      s += term_text(atom);
    }
  }
  return s;
}

std::vector<int> proof_clauses(const std::vector<IClause>& clauses, int root) {
  std::set<int> seen;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    if (!seen.insert(c).second) continue;
    for (int p : clauses[c].parents) stack.push_back(p);
  }
  return {seen.begin(), seen.end()};  // ascending ids: parents precede children
}

std::string Saturation::proof_block() const {
  if (empty_clause_ < 0) return {};
  std::ostringstream out;
  for (int id : proof_clauses(clauses_, empty_clause_)) {
    const auto& c = clauses_[id];
    out << "cnf(c" << id << ", ";
    if (c.rule == "input") {
      if (c.role == "axiom") {
        out << "axiom, (" << clause_text(c) << "), file('problem', " << tptp::formula_name(c.name) << ")).\n";
      } else if (c.role == "negated_conjecture") {
        out << "negated_conjecture, (" << clause_text(c) << "), inference(negate_conjecture, [], ["
            << tptp::formula_name(c.name) << "])).\n";
      } else {
        out << "axiom, (" << clause_text(c) << "), introduced(equality, [" << c.name << "])).\n";
      }
    } else {
      out << "plain, (" << clause_text(c) << "), inference(" << c.rule << ", [], [";
      for (std::size_t i = 0; i < c.parents.size(); ++i) out << (i ? ", c" : "c") << c.parents[i];
      out << "])).\n";
    }
  }
  return out.str();
}

std::vector<std::string> Saturation::used_axioms() const {
  std::vector<std::string> out;
  if (empty_clause_ < 0) return out;
  std::set<std::string> seen;
  for (int id : proof_clauses(clauses_, empty_clause_)) {
    const auto& c = clauses_[id];
    if (c.rule == "input" && c.role == "axiom" && seen.insert(c.name).second) out.push_back(c.name);
  }
  return out;
}

}  // namespace

ProofAttempt prove(std::span<const LabeledFormula> axioms, const std::optional<LabeledFormula>& conjecture,
                   const ProverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(options.limit_seconds));

  std::set<std::string> reserved;
  for (const auto& a : axioms) {
    auto s = symbols(a.formula);
    reserved.insert(s.begin(), s.end());
  }
  if (conjecture) {
    auto s = symbols(conjecture->formula);
    reserved.insert(s.begin(), s.end());
  }
  Clausifier clausifier(std::move(reserved));

  Saturation sat(options, deadline);
  const bool sos = options.set_of_support && conjecture.has_value();
  for (const auto& a : axioms)
    for (const auto& c : clausifier(a.formula, a.name)) sat.add_input(c, a.name, "axiom", !sos);
  if (conjecture) {
    for (const auto& c : clausifier(Formula::negation(universal_closure(conjecture->formula)), conjecture->name))
      sat.add_input(c, conjecture->name, "negated_conjecture", true);
  }
  if (sat.uses_equality()) sat.add_equality_axioms();

  ProofAttempt attempt;
  attempt.result.szs = sat.run();
  attempt.given = sat.given();
  attempt.generated = sat.generated();
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  attempt.result.wall_seconds = elapsed;
  attempt.result.prover_seconds = elapsed;

  const std::string problem = conjecture ? conjecture->name : std::string("problem");
  std::ostringstream out;
  out << "% SZS status " << to_string(attempt.result.szs) << " for " << problem << "\n";
  if (attempt.result.szs == SzsStatus::Theorem) {
    attempt.result.used_axioms = sat.used_axioms();
    out << "% SZS output start CNFRefutation for " << problem << "\n"
        << sat.proof_block() << "% SZS output end CNFRefutation for " << problem << "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", elapsed);
  out << "% given: " << attempt.given << ", generated: " << attempt.generated << "\n"
      << "% Total time : " << buf << "\n";
  attempt.transcript = out.str();
  return attempt;
}

ProofAttempt prove_statements(const std::vector<tptp::Statement>& statements, const ProverOptions& options) {
  std::vector<LabeledFormula> axioms;
  std::optional<LabeledFormula> conjecture;
  std::vector<Formula> conjectures;
  std::string conj_name;
  for (const auto& st : statements) {
    if (!st.formula) continue;
    if (st.role == "conjecture") {
      if (conj_name.empty()) conj_name = st.name;
      conjectures.push_back(*st.formula);
    } else if (st.role != "type") {
      axioms.push_back(LabeledFormula{st.name, *st.formula});
    }
  }
  if (conjectures.size() == 1) {
    conjecture = LabeledFormula{conj_name, conjectures.front()};
  } else if (conjectures.size() > 1) {
    // Several conjectures are read as their conjunction.
    std::vector<Formula> closed;
    for (const auto& c : conjectures) closed.push_back(universal_closure(c));
    conjecture = LabeledFormula{conj_name, Formula::conjunction(std::move(closed))};
  }
  return prove(axioms, conjecture, options);
}

}  // namespace focq::microprover
