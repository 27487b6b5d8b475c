#include "focq/kif.hpp"

#include <cctype>
#include <optional>

#include "focq/errors.hpp"

namespace focq::kif {

namespace {

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  int line = 0;
  int col = 0;
};

struct TopLevel {
  SExpr expr;
  std::map<std::string, std::string> annotations;
};

bool is_delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';' || c == '"';
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  std::vector<TopLevel> read_all() {
    std::vector<TopLevel> out;
    while (true) {
      skip_space_and_comments(true);
      if (eof()) break;
      if (peek() == ')') throw SyntaxError(line_, col_, "unbalanced ')'");
      TopLevel top;
      top.annotations = std::move(pending_);
      pending_.clear();
      top.expr = read_expr();
      out.push_back(std::move(top));
    }
    return out;
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  // Comments at top level may carry ";; key: value" annotations for the next formula.
  void skip_space_and_comments(bool top_level) {
    while (!eof()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == ';') {
        const auto start = pos_;
        while (!eof() && peek() != '\n') advance();
        if (top_level) record_annotation(src_.substr(start, pos_ - start));
      } else {
        break;
      }
    }
  }

  void record_annotation(std::string_view comment) {
    std::size_t i = 0;
    while (i < comment.size() && comment[i] == ';') ++i;
    const auto body = comment.substr(i);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) return;
    auto key = trim(body.substr(0, colon));
    if (key.empty() || key.find_first_of(" \t") != std::string::npos) return;
    pending_[key] = trim(body.substr(colon + 1));
  }

  SExpr read_expr() {
    SExpr e;
    e.line = line_;
    e.col = col_;
    const char c = peek();
    if (c == '(') {
      e.is_list = true;
      advance();
      while (true) {
        skip_space_and_comments(false);
        if (eof()) throw SyntaxError(e.line, e.col, "unterminated list");
        if (peek() == ')') {
          advance();
          break;
        }
        e.items.push_back(read_expr());
      }
      return e;
    }
    if (c == '"') throw UnsupportedConstruct(line_, "quoted term");
    const auto start = pos_;
    while (!eof() && !is_delimiter(peek())) advance();
    e.atom = std::string(src_.substr(start, pos_ - start));
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::map<std::string, std::string> pending_;
};

bool is_connective(const std::string& s) {
  return s == "=>" || s == "<=>" || s == "and" || s == "or" || s == "not" || s == "forall" || s == "exists" ||
         s == "equal" || s == "=";
}

void check_symbol(const SExpr& e) {
  if (e.atom.empty()) throw SyntaxError(e.line, e.col, "empty symbol");
  if (e.atom[0] == '@') throw UnsupportedConstruct(e.line, "row variable " + e.atom);
}

std::string variable_name(const SExpr& e) {
  check_symbol(e);
  if (e.atom[0] != '?') throw SyntaxError(e.line, e.col, "expected variable, got '" + e.atom + "'");
  if (e.atom.size() == 1) throw SyntaxError(e.line, e.col, "variable without a name");
  return e.atom.substr(1);
}

Term to_term(const SExpr& e) {
  if (!e.is_list) {
    check_symbol(e);
    if (e.atom[0] == '?') return Term::variable(variable_name(e));
    return Term::constant(e.atom);
  }
  if (e.items.empty()) throw SyntaxError(e.line, e.col, "empty list in term position");
  const auto& head = e.items.front();
  if (head.is_list) throw UnsupportedConstruct(head.line, "non-symbol function head");
  check_symbol(head);
  if (head.atom[0] == '?') throw UnsupportedConstruct(head.line, "variable in function position");
  if (is_connective(head.atom)) throw UnsupportedConstruct(head.line, "sentence in term position");
  std::vector<Term> args;
  for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(to_term(e.items[i]));
  return Term::function(head.atom, std::move(args));
}

void expect_arity(const SExpr& e, std::size_t n, const std::string& op) {
  if (e.items.size() != n + 1)
    throw SyntaxError(e.line, e.col, "'" + op + "' expects " + std::to_string(n) + " argument(s)");
}

Formula to_formula(const SExpr& e);

std::vector<Formula> formula_args(const SExpr& e) {
  std::vector<Formula> out;
  for (std::size_t i = 1; i < e.items.size(); ++i) out.push_back(to_formula(e.items[i]));
  return out;
}

Formula quantified(const SExpr& e, bool universal) {
  const auto& op = e.items.front().atom;
  expect_arity(e, 2, op);
  const auto& vars_expr = e.items[1];
  if (!vars_expr.is_list) throw SyntaxError(vars_expr.line, vars_expr.col, "'" + op + "' expects a variable list");
  if (vars_expr.items.empty()) throw SyntaxError(vars_expr.line, vars_expr.col, "empty variable list");
  std::vector<std::string> vars;
  for (const auto& v : vars_expr.items) {
    if (v.is_list) throw SyntaxError(v.line, v.col, "expected variable");
    vars.push_back(variable_name(v));
  }
  auto body = to_formula(e.items[2]);
  return universal ? Formula::forall(std::move(vars), std::move(body))
                   : Formula::exists(std::move(vars), std::move(body));
}

Formula to_formula(const SExpr& e) {
  if (!e.is_list) {
    check_symbol(e);
    if (e.atom[0] == '?') throw UnsupportedConstruct(e.line, "variable in sentence position");
    if (is_connective(e.atom)) throw SyntaxError(e.line, e.col, "connective '" + e.atom + "' used as a sentence");
    return Formula::atom(e.atom);
  }
  if (e.items.empty()) throw SyntaxError(e.line, e.col, "empty list");
  const auto& head = e.items.front();
  if (head.is_list) throw UnsupportedConstruct(head.line, "non-symbol in predicate position");
  check_symbol(head);
  const auto& op = head.atom;
  if (op[0] == '?') throw UnsupportedConstruct(head.line, "variable in predicate position");

  if (op == "not") {
    expect_arity(e, 1, op);
    return Formula::negation(to_formula(e.items[1]));
  }
  if (op == "and" || op == "or") {
    if (e.items.size() < 3) throw SyntaxError(e.line, e.col, "'" + op + "' expects at least two arguments");
    auto parts = formula_args(e);
    return op == "and" ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
  }
  if (op == "=>") {
    expect_arity(e, 2, op);
    return Formula::implies(to_formula(e.items[1]), to_formula(e.items[2]));
  }
  if (op == "<=>") {
    expect_arity(e, 2, op);
    return Formula::iff(to_formula(e.items[1]), to_formula(e.items[2]));
  }
  if (op == "forall" || op == "exists") return quantified(e, op == "forall");
  if (op == "equal" || op == "=") {
    expect_arity(e, 2, op);
    return Formula::equal(to_term(e.items[1]), to_term(e.items[2]));
  }
  std::vector<Term> args;
  for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(to_term(e.items[i]));
  return Formula::atom(op, std::move(args));
}

void print_to(const Term& t, std::string& out) {
  if (t.is_variable()) {
    out += '?';
    out += t.name;
    return;
  }
  if (t.kind == Term::Kind::Constant) {
    out += t.name;
    return;
  }
  out += '(';
  out += t.name;
  for (const auto& a : t.args) {
    out += ' ';
    print_to(a, out);
  }
  out += ')';
}

void print_to(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  auto list = [&](const char* op) {
    out += '(';
    out += op;
    for (const auto& c : f.children()) {
      out += ' ';
      print_to(c, out);
    }
    out += ')';
  };
  switch (f.kind()) {
    case K::Atom:
    case K::Equal:
      out += '(';
      out += f.kind() == K::Equal ? "equal" : f.predicate();
      for (const auto& a : f.args()) {
        out += ' ';
        print_to(a, out);
      }
      out += ')';
      return;
    case K::Not: return list("not");
    case K::And: return list("and");
    case K::Or: return list("or");
    case K::Implies: return list("=>");
    case K::Iff: return list("<=>");
    case K::Forall:
    case K::Exists: {
      out += f.kind() == K::Forall ? "(forall (" : "(exists (";
      bool first = true;
      for (const auto& v : f.variables()) {
        if (!first) out += ' ';
        first = false;
        out += '?';
        out += v;
      }
      out += ") ";
      print_to(f.child(0), out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::vector<AnnotatedFormula> parse_annotated(std::string_view source) {
  Reader reader(source);
  std::vector<AnnotatedFormula> out;
  for (auto& top : reader.read_all())
    out.push_back(AnnotatedFormula{to_formula(top.expr), std::move(top.annotations), top.expr.line});
  return out;
}

std::vector<Formula> parse(std::string_view source) {
  std::vector<Formula> out;
  for (auto& a : parse_annotated(source)) out.push_back(std::move(a.formula));
  return out;
}

Formula parse_formula(std::string_view source) {
  auto fs = parse(source);
  if (fs.size() != 1) throw SyntaxError(1, 1, "expected exactly one formula, got " + std::to_string(fs.size()));
  return fs.front();
}

std::string print(const Formula& f) {
  std::string out;
  print_to(f, out);
  return out;
}

std::string print(const Term& t) {
  std::string out;
  print_to(t, out);
  return out;
}

}  // namespace focq::kif
