#include "focq/tptp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "focq/cqgen.hpp"
#include "focq/errors.hpp"
#include "focq/ontology.hpp"
#include "focq/store.hpp"

namespace focq {

std::string_view to_string(SzsStatus s) {
  switch (s) {
    case SzsStatus::Theorem: return "Theorem";
    case SzsStatus::CounterSatisfiable: return "CounterSatisfiable";
    case SzsStatus::Satisfiable: return "Satisfiable";
    case SzsStatus::Timeout: return "Timeout";
    case SzsStatus::GaveUp: return "GaveUp";
    case SzsStatus::ResourceOut: return "ResourceOut";
    case SzsStatus::Error: return "Error";
    case SzsStatus::NoStatus: return "NoStatus";
  }
  return "NoStatus";
}

SzsStatus szs_from_string(std::string_view name) {
  for (auto s : kAllSzsStatuses)
    if (to_string(s) == name) return s;
  throw Error("UnknownStatus", "unknown SZS status '" + std::string(name) + "'");
}

}  // namespace focq

namespace focq::tptp {

namespace {

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_hex_upper(char c) { return std::isdigit(static_cast<unsigned char>(c)) || (c >= 'A' && c <= 'F'); }

int hex_value(char c) { return std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : c - 'A' + 10; }

}  // namespace

std::string mangle_symbol(std::string_view name) {
  static const char* kHex = "0123456789ABCDEF";
  std::string out = "s__";
  for (char c : name) {
    if (is_ident_char(c)) {
      out += c;
    } else {
      const auto u = static_cast<unsigned char>(c);
      out += '_';
      out += kHex[u >> 4];
      out += kHex[u & 0xF];
    }
  }
  return out;
}

std::string demangle_symbol(std::string_view name) {
  if (name.substr(0, 3) != "s__") return std::string(name);
  name.remove_prefix(3);
  if (name.size() > 3 && name.substr(name.size() - 3) == "__m") name.remove_suffix(3);
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '_' && i + 2 < name.size() && is_hex_upper(name[i + 1]) && is_hex_upper(name[i + 2])) {
      const char decoded = static_cast<char>(hex_value(name[i + 1]) * 16 + hex_value(name[i + 2]));
      if (!is_ident_char(decoded)) {
        out += decoded;
        i += 2;
        continue;
      }
    }
    out += name[i];
  }
  return out;
}

std::string mangle_variable(std::string_view name) {
  std::string out = "V";
  for (char c : name) out += is_ident_char(c) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : '_';
  return out;
}

void check_mangling_injective(const std::set<std::string>& symbols) {
  std::map<std::string, std::string> seen;
  for (const auto& s : symbols) {
    auto [it, inserted] = seen.emplace(mangle_symbol(s), s);
    if (!inserted && it->second != s)
      throw Error("MangleCollision", "symbols '" + it->second + "' and '" + s + "' both mangle to '" + it->first + "'");
  }
}

std::string formula_name(std::string_view name) {
  const bool lower_word = !name.empty() && std::islower(static_cast<unsigned char>(name[0])) &&
                          std::all_of(name.begin(), name.end(), is_ident_char);
  const bool integer = !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (lower_word || integer) return std::string(name);
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

// ---------------------------------------------------------------------------
// Emission

namespace {

class VariableNames {
 public:
  const std::string& get(const std::string& source) {
    auto it = names_.find(source);
    if (it != names_.end()) return it->second;
    std::string base = mangle_variable(source);
    std::string candidate = base;
    for (int n = 1; used_.count(candidate); ++n) candidate = base + "_" + std::to_string(n);
    used_.insert(candidate);
    return names_.emplace(source, candidate).first->second;
  }

 private:
  std::map<std::string, std::string> names_;
  std::set<std::string> used_;
};

void emit_term(const Term& t, VariableNames& vars, std::string& out) {
  if (t.is_variable()) {
    out += vars.get(t.name);
    return;
  }
  out += mangle_symbol(t.name);
  if (t.kind == Term::Kind::Function && !t.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ", ";
      emit_term(t.args[i], vars, out);
    }
    out += ')';
  }
}

void emit_formula(const Formula& f, VariableNames& vars, std::string& out);

// Atoms, negations and quantified formulas stand alone; binary forms get parentheses.
void emit_unit(const Formula& f, VariableNames& vars, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::And:
    case K::Or:
    case K::Implies:
    case K::Iff:
      out += '(';
      emit_formula(f, vars, out);
      out += ')';
      return;
    default:
      emit_formula(f, vars, out);
  }
}

void emit_formula(const Formula& f, VariableNames& vars, std::string& out) {
  using K = Formula::Kind;
  auto joined = [&](const char* op) {
    for (std::size_t i = 0; i < f.children().size(); ++i) {
      if (i) out += op;
      emit_unit(f.child(i), vars, out);
    }
  };
  switch (f.kind()) {
    case K::Atom:
      out += mangle_symbol(f.predicate());
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          emit_term(f.args()[i], vars, out);
        }
        out += ')';
      }
      return;
    case K::Equal:
      out += '(';
      emit_term(f.args()[0], vars, out);
      out += " = ";
      emit_term(f.args()[1], vars, out);
      out += ')';
      return;
    case K::Not:
      out += "~ ";
      emit_unit(f.child(0), vars, out);
      return;
    case K::And: return joined(" & ");
    case K::Or: return joined(" | ");
    case K::Implies: return joined(" => ");
    case K::Iff: return joined(" <=> ");
    case K::Forall:
    case K::Exists:
      out += f.kind() == K::Forall ? "! [" : "? [";
      for (std::size_t i = 0; i < f.variables().size(); ++i) {
        if (i) out += ", ";
        out += vars.get(f.variables()[i]);
      }
      out += "] : ";
      emit_unit(f.child(0), vars, out);
      return;
  }
}

}  // namespace

std::string to_fof(const Formula& f) {
  VariableNames vars;
  std::string out;
  emit_unit(universal_closure(f), vars, out);
  return out;
}

std::string emit_fof(const Formula& f, std::string_view role, std::string_view name) {
  return "fof(" + formula_name(name) + ", " + std::string(role) + ", " + to_fof(f) + ").";
}

// ---------------------------------------------------------------------------
// Reading

namespace {

enum class Tok { Lower, Upper, Dollar, SQuote, DQuote, Number, Punct, End };

struct Token {
  Tok type;
  std::string text;
  int line;
  int col;
  std::size_t begin;
  std::size_t end;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') bump(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
      const int l0 = line;
      const int c0 = col;
      bump(2);
      while (i + 1 < src.size() && !(src[i] == '*' && src[i + 1] == '/')) bump(1);
      if (i + 1 >= src.size()) throw SyntaxError(l0, c0, "unterminated comment");
      bump(2);
      continue;
    }
    Token t{Tok::Punct, {}, line, col, i, i};
    const auto start = i;
    if (std::islower(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c))) {
      t.type = std::islower(static_cast<unsigned char>(c)) ? Tok::Lower : Tok::Upper;
      while (i < src.size() && is_ident_char(src[i])) bump(1);
    } else if (c == '$') {
      t.type = Tok::Dollar;
      bump(1);
      if (i < src.size() && src[i] == '$') bump(1);
      while (i < src.size() && is_ident_char(src[i])) bump(1);
    } else if (c == '\'' || c == '"') {
      t.type = c == '\'' ? Tok::SQuote : Tok::DQuote;
      bump(1);
      while (i < src.size() && src[i] != c) bump(src[i] == '\\' ? 2 : 1);
      if (i >= src.size()) throw SyntaxError(t.line, t.col, "unterminated quoted token");
      bump(1);
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               ((c == '+' || c == '-') && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      t.type = Tok::Number;
      bump(1);
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '.' || src[i] == '/')) {
        if (src[i] == '.' && (i + 1 >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i + 1])))) break;
        bump(1);
      }
    } else {
      static const char* kOps[] = {"<=>", "<~>", "=>", "<=", "~|", "~&", "!=", "(", ")", "[", "]", ",", ".",
                                   ":",   "!",   "?",  "~",  "&",  "|",  "=",  "@", "^", "*", "+", ">", "-"};
      bool matched = false;
      for (const char* op : kOps) {
        const std::string_view ov(op);
        if (src.substr(i, ov.size()) == ov) {
          bump(ov.size());
          matched = true;
          break;
        }
      }
      if (!matched) throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
    t.end = i;
    t.text = std::string(src.substr(start, i - start));
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, {}, line, col, src.size(), src.size()});
  return out;
}

struct Unsupported {
  std::string what;
};

class FormulaParser {
 public:
  FormulaParser(const std::vector<Token>& toks, std::size_t begin, std::size_t end)
      : toks_(toks), pos_(begin), end_(end) {}

  Formula parse_all() {
    auto f = formula();
    if (pos_ != end_) fail("unexpected token '" + cur().text + "'");
    return f;
  }

 private:
  const Token& cur() const { return pos_ < end_ ? toks_[pos_] : toks_.back(); }
  bool at(std::string_view text) const { return pos_ < end_ && cur().type == Tok::Punct && cur().text == text; }

  [[noreturn]] void fail(const std::string& reason) const { throw SyntaxError(cur().line, cur().col, reason); }

  void expect(std::string_view text) {
    if (!at(text)) fail("expected '" + std::string(text) + "'");
    ++pos_;
  }

  Formula formula() {
    auto lhs = unit();
    if (at("&") || at("|")) {
      const std::string op = cur().text;
      std::vector<Formula> parts{lhs};
      while (at(op)) {
        ++pos_;
        parts.push_back(unit());
      }
      if (at("&") || at("|")) fail("mixed '&' and '|' without parentheses");
      return op == "&" ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
    }
    for (const char* op : {"=>", "<=", "<=>", "<~>", "~|", "~&"}) {
      if (!at(op)) continue;
      ++pos_;
      auto rhs = unit();
      const std::string_view o(op);
      if (o == "=>") return Formula::implies(lhs, rhs);
      if (o == "<=") return Formula::implies(rhs, lhs);
      if (o == "<=>") return Formula::iff(lhs, rhs);
      if (o == "<~>") return Formula::negation(Formula::iff(lhs, rhs));
      if (o == "~|") return Formula::negation(Formula::disjunction({lhs, rhs}));
      return Formula::negation(Formula::conjunction({lhs, rhs}));
    }
    return lhs;
  }

  Formula unit() {
    if (at("(")) {
      ++pos_;
      auto f = formula();
      expect(")");
      return f;
    }
    if (at("~")) {
      ++pos_;
      return Formula::negation(unit());
    }
    if (at("!") || at("?")) {
      const bool universal = cur().text == "!";
      ++pos_;
      expect("[");
      std::vector<std::string> vars;
      while (true) {
        if (cur().type != Tok::Upper) fail("expected variable");
        vars.push_back(variable_name(cur().text));
        ++pos_;
        if (at(":")) throw Unsupported{"typed variable"};
        if (at("]")) break;
        expect(",");
      }
      ++pos_;
      expect(":");
      auto body = unit();
      return universal ? Formula::forall(std::move(vars), std::move(body))
                       : Formula::exists(std::move(vars), std::move(body));
    }
    return atomic();
  }

  static std::string variable_name(const std::string& text) {
    if (text.size() > 1 && text[0] == 'V') return text.substr(1);
    return text;
  }

  Formula atomic() {
    if (cur().type == Tok::Dollar) throw Unsupported{"defined predicate " + cur().text};
    const bool symbolic = cur().type == Tok::Lower || cur().type == Tok::SQuote;
    auto lhs = term();
    if (at("=") || at("!=")) {
      const bool negated = cur().text == "!=";
      ++pos_;
      auto rhs = term();
      auto eq = Formula::equal(std::move(lhs), std::move(rhs));
      return negated ? Formula::negation(eq) : eq;
    }
    if (!symbolic) fail("expected '=' after term");
    return Formula::atom(std::move(lhs.name), std::move(lhs.args));
  }

  static bool is_infix(const Token& t) { return t.type == Tok::Punct && (t.text == "=" || t.text == "!="); }

  Term term() {
    const Token& t = cur();
    switch (t.type) {
      case Tok::Upper:
        ++pos_;
        return Term::variable(variable_name(t.text));
      case Tok::Lower:
      case Tok::SQuote: {
        std::string name = t.type == Tok::Lower ? demangle_symbol(t.text) : unquote(t.text);
        ++pos_;
        if (!at("(")) return Term::constant(std::move(name));
        ++pos_;
        std::vector<Term> args;
        while (true) {
          args.push_back(term());
          if (at(")")) break;
          expect(",");
        }
        ++pos_;
        return Term::function(std::move(name), std::move(args));
      }
      case Tok::Number:
        ++pos_;
        return Term::constant(t.text);
      case Tok::DQuote:
        throw Unsupported{"distinct object " + t.text};
      case Tok::Dollar:
        throw Unsupported{"defined term " + t.text};
      default:
        fail("expected term, got '" + t.text + "'");
    }
  }

  static std::string unquote(const std::string& s) {
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == '\\' && i + 2 < s.size()) ++i;
      out += s[i];
    }
    return out;
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  std::size_t end_;
};

std::size_t matching_close(const std::vector<Token>& toks, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < toks.size(); ++i) {
    if (toks[i].type != Tok::Punct) continue;
    if (toks[i].text == "(" || toks[i].text == "[") ++depth;
    if (toks[i].text == ")" || toks[i].text == "]") {
      if (--depth == 0) return i;
    }
  }
  throw SyntaxError(toks[open].line, toks[open].col, "unbalanced parentheses");
}

// Splits (begin, end) at depth-0 commas.
std::vector<std::pair<std::size_t, std::size_t>> split_args(const std::vector<Token>& toks, std::size_t begin,
                                                            std::size_t end) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  int depth = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i < end; ++i) {
    if (toks[i].type != Tok::Punct) continue;
    const auto& x = toks[i].text;
    if (x == "(" || x == "[") ++depth;
    if (x == ")" || x == "]") --depth;
    if (x == "," && depth == 0) {
      out.emplace_back(start, i);
      start = i + 1;
    }
  }
  out.emplace_back(start, end);
  return out;
}

std::string token_text(const std::vector<Token>& toks, std::pair<std::size_t, std::size_t> range) {
  if (range.first + 1 != range.second) {
    const auto& t = toks[range.first];
    throw SyntaxError(t.line, t.col, "expected a single name");
  }
  const auto& t = toks[range.first];
  if (t.type == Tok::SQuote) {
    std::string out;
    for (std::size_t i = 1; i + 1 < t.text.size(); ++i) {
      if (t.text[i] == '\\' && i + 2 < t.text.size()) ++i;
      out += t.text[i];
    }
    return out;
  }
  return t.text;
}

}  // namespace

std::vector<Statement> parse(std::string_view source) {
  const auto toks = tokenize(source);
  std::vector<Statement> out;
  std::size_t i = 0;
  while (toks[i].type != Tok::End) {
    const Token& kw = toks[i];
    if (kw.type != Tok::Lower) throw SyntaxError(kw.line, kw.col, "expected statement keyword, got '" + kw.text + "'");
    if (toks[i + 1].type != Tok::Punct || toks[i + 1].text != "(")
      throw SyntaxError(toks[i + 1].line, toks[i + 1].col, "expected '(' after " + kw.text);
    const auto close = matching_close(toks, i + 1);
    if (toks[close + 1].type != Tok::Punct || toks[close + 1].text != ".")
      throw SyntaxError(toks[close].line, toks[close].col, "expected '.' after statement");
    Statement st;
    st.line = kw.line;
    st.text = std::string(source.substr(kw.begin, toks[close + 1].end - kw.begin));
    const auto args = split_args(toks, i + 2, close);
    if (kw.text == "include") {
      st.kind = Statement::Kind::Include;
      st.include_path = token_text(toks, args.at(0));
      if (args.size() > 1) {
        for (std::size_t k = args[1].first; k < args[1].second; ++k)
          if (toks[k].type == Tok::Lower || toks[k].type == Tok::SQuote || toks[k].type == Tok::Number)
            st.include_selection.push_back(token_text(toks, {k, k + 1}));
      }
    } else if (kw.text == "fof" || kw.text == "cnf") {
      if (args.size() < 3) throw SyntaxError(kw.line, kw.col, kw.text + " needs name, role and formula");
      st.kind = kw.text == "fof" ? Statement::Kind::Fof : Statement::Kind::Cnf;
      st.name = token_text(toks, args[0]);
      st.role = token_text(toks, args[1]);
      try {
        st.formula = FormulaParser(toks, args[2].first, args[2].second).parse_all();
      } catch (const Unsupported& u) {
        st.unsupported = u.what;
      }
    } else {
      st.kind = Statement::Kind::Other;
      if (!args.empty() && args[0].first < args[0].second) st.name = toks[args[0].first].text;
      st.unsupported = kw.text + " statements";
    }
    out.push_back(std::move(st));
    i = close + 2;
  }
  return out;
}

Formula parse_formula(std::string_view text) {
  const auto toks = tokenize(text);
  try {
    return FormulaParser(toks, 0, toks.size() - 1).parse_all();
  } catch (const Unsupported& u) {
    throw UnsupportedConstruct(1, u.what);
  }
}

namespace {

void load_into(const std::filesystem::path& path, const std::vector<std::string>& selection,
               std::vector<Statement>& out, int depth) {
  if (depth > 32) throw Error("IncludeDepth", "include nesting too deep at " + path.string());
  const auto text = store::read_text(path);
  std::vector<Statement> stmts;
  try {
    stmts = parse(text);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.line(), e.col(), path.string() + ": " + e.reason());
  }
  for (auto& st : stmts) {
    if (st.kind == Statement::Kind::Include) {
      std::filesystem::path target = path.parent_path() / st.include_path;
      if (!std::filesystem::exists(target)) {
        if (const char* root = std::getenv("TPTP")) target = std::filesystem::path(root) / st.include_path;
      }
      if (!std::filesystem::exists(target))
        throw IoError("cannot resolve include '" + st.include_path + "' from " + path.string());
      load_into(target, st.include_selection, out, depth + 1);
      continue;
    }
    if (!selection.empty() && std::find(selection.begin(), selection.end(), st.name) == selection.end()) continue;
    out.push_back(std::move(st));
  }
}

}  // namespace

std::vector<Statement> load_file(const std::filesystem::path& path) {
  std::vector<Statement> out;
  load_into(path, {}, out, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Problems

std::string Problem::render() const {
  std::ostringstream os;
  for (const auto& c : header_comments) os << "% " << c << '\n';
  for (const auto& inc : includes) os << "include('" << inc << "').\n";
  for (const auto& [name, text] : local_axioms) os << text << '\n';
  os << conjecture.second << '\n';
  return os.str();
}

Problem emit_problem(const Ontology& ontology, const CompetencyQuestion& cq, const EmitOptions& options) {
  Problem p;
  p.cq_id = cq.id;
  p.header_comments = {"cq_id: " + cq.id, "pattern: " + std::string(to_string(cq.pattern)),
                       "polarity: " + std::string(to_string(cq.polarity)), "ontology: " + ontology.name};

  std::set<std::string> names;
  std::set<std::string> syms = symbols(cq.formula);
  if (options.mode == EmitOptions::Mode::Include) {
    std::string path = options.include_path.empty() ? ontology.path.string() : options.include_path;
    if (path.empty() || (ontology.format == SourceFormat::Kif && options.include_path.empty()))
      throw Error("EmitError", "include mode needs a translated TPTP axiom file for ontology " + ontology.name);
    // Include directives take a single-quoted file name.
    p.includes.push_back(path);
  } else {
    for (const auto& ax : ontology.axioms) {
      if (ax.formula && ontology.format == SourceFormat::Kif) {
        p.local_axioms.emplace_back(ax.label, emit_fof(*ax.formula, "axiom", ax.label));
        auto s = symbols(*ax.formula);
        syms.insert(s.begin(), s.end());
      } else {
        p.local_axioms.emplace_back(ax.label, ax.tptp_text);
      }
    }
  }
  for (const auto& ax : ontology.axioms) names.insert(ax.label);

  check_mangling_injective(syms);

  std::string name = cq.id;
  for (int n = 1; names.count(name); ++n) name = cq.id + "_" + std::to_string(n);
  if (name != cq.id) p.warnings.push_back("conjecture name '" + cq.id + "' collides with an axiom; renamed to '" + name + "'");
  p.conjecture = {name, emit_fof(cq.formula, "conjecture", name)};
  return p;
}

std::filesystem::path write_problem(const Problem& problem, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto path = dir / (problem.cq_id + ".p");
  store::write_atomic(path, problem.render());
  return path;
}

// ---------------------------------------------------------------------------
// SZS

namespace {

SzsStatus map_status(const std::string& word) {
  static const std::map<std::string, SzsStatus> kMap = {
      {"Theorem", SzsStatus::Theorem},
      {"Unsatisfiable", SzsStatus::Theorem},
      {"ContradictoryAxioms", SzsStatus::Theorem},
      {"CounterSatisfiable", SzsStatus::CounterSatisfiable},
      {"Satisfiable", SzsStatus::Satisfiable},
      {"Timeout", SzsStatus::Timeout},
      {"GaveUp", SzsStatus::GaveUp},
      {"Unknown", SzsStatus::GaveUp},
      {"Incomplete", SzsStatus::GaveUp},
      {"Inappropriate", SzsStatus::GaveUp},
      {"ResourceOut", SzsStatus::ResourceOut},
      {"MemoryOut", SzsStatus::ResourceOut},
      {"Error", SzsStatus::Error},
      {"OSError", SzsStatus::Error},
      {"InputError", SzsStatus::Error},
      {"SyntaxError", SzsStatus::Error},
      {"UsageError", SzsStatus::Error},
  };
  auto it = kMap.find(word);
  return it == kMap.end() ? SzsStatus::NoStatus : it->second;
}

std::string strip_quotes(std::string s) {
  if (s.size() >= 2 && s.front() == '\'' && s.back() == '\'') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

ProverResult parse_szs(std::string_view output, const std::set<std::string>& exclude) {
  static const std::regex kStatus(R"(SZS status\s+([A-Za-z]+))");
  static const std::regex kFileSource(R"(file\(\s*'(?:[^'\\]|\\.)*'\s*,\s*('(?:[^'\\]|\\.)*'|[A-Za-z0-9_]+)\s*\))");
  static const std::regex kInputName(R"(\[input(?:\([a-z_]+\))?\s+([A-Za-z0-9_']+)\])");
  static const std::regex kTime(R"((?:Time elapsed|Total time)\s*:\s*([0-9]+(?:\.[0-9]+)?))");

  ProverResult result;
  bool have_status = false;
  bool in_block = false;
  bool saw_block = false;
  std::vector<std::string> cited;
  std::set<std::string> seen;

  std::size_t start = 0;
  while (start <= output.size()) {
    auto nl = output.find('\n', start);
    if (nl == std::string_view::npos) nl = output.size();
    const std::string line(output.substr(start, nl - start));
    start = nl + 1;

    std::smatch m;
    if (!have_status && std::regex_search(line, m, kStatus)) {
      result.szs = map_status(m[1]);
      have_status = true;
    }
    if (!result.prover_seconds && std::regex_search(line, m, kTime)) result.prover_seconds = std::stod(m[1]);
    if (line.find("SZS output start") != std::string::npos) {
      in_block = true;
      saw_block = true;
      continue;
    }
    if (line.find("SZS output end") != std::string::npos) {
      in_block = false;
      continue;
    }
    if (!in_block) continue;
    for (const auto* re : {&kFileSource, &kInputName}) {
      for (std::sregex_iterator it(line.begin(), line.end(), *re), end; it != end; ++it) {
        auto name = strip_quotes((*it)[1]);
        if (exclude.count(name) || !seen.insert(name).second) continue;
        cited.push_back(std::move(name));
      }
    }
  }
  if (result.szs == SzsStatus::Theorem && saw_block) result.used_axioms = std::move(cited);
  return result;
}

}  // namespace focq::tptp
