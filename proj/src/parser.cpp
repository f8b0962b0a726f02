#include "sccp/parser.hpp"

#include <cctype>

namespace sccp {

namespace {

struct Token {
  enum class Kind {
    Ident,    // lowercase-led
    Var,      // uppercase-led
    Number,   // digits with optional . or /
    LBrack, RBrack, LParen, RParen,
    At, Star, Plus, Par, Comma, Dot, Semi, Eq, Arrow, Lolli, Amp, Bang, LBrace, RBrace,
    Turnstile, Minus,
    End
  };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') { ++line_; col_ = 1; ++pos_; continue; }
      if (std::isspace(static_cast<unsigned char>(c))) { ++pos_; ++col_; continue; }
      if (c == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::End, "", line_, col_};
      return;
    }
    int line = line_, col = col_;
    char c = text_[pos_];
    auto simple = [&](Token::Kind k, int len) {
      current_ = {k, text_.substr(pos_, len), line, col};
      pos_ += len;
      col_ += len;
    };
    switch (c) {
      case '[': return simple(Token::Kind::LBrack, 1);
      case ']': return simple(Token::Kind::RBrack, 1);
      case '(': return simple(Token::Kind::LParen, 1);
      case ')': return simple(Token::Kind::RParen, 1);
      case '@': return simple(Token::Kind::At, 1);
      case '*': return simple(Token::Kind::Star, 1);
      case '+': return simple(Token::Kind::Plus, 1);
      case ',': return simple(Token::Kind::Comma, 1);
      case '.': return simple(Token::Kind::Dot, 1);
      case ';': return simple(Token::Kind::Semi, 1);
      case '&': return simple(Token::Kind::Amp, 1);
      case '!': return simple(Token::Kind::Bang, 1);
      case '{': return simple(Token::Kind::LBrace, 1);
      case '}': return simple(Token::Kind::RBrace, 1);
      case '|':
        if (text_.compare(pos_, 2, "||") == 0) return simple(Token::Kind::Par, 2);
        if (text_.compare(pos_, 2, "|-") == 0) return simple(Token::Kind::Turnstile, 2);
        throw ParseError("stray '|'", line, col);
      case '=':
        if (text_.compare(pos_, 2, "=>") == 0) return simple(Token::Kind::Arrow, 2);
        return simple(Token::Kind::Eq, 1);
      case '-':
        if (text_.compare(pos_, 2, "-o") == 0) return simple(Token::Kind::Lolli, 2);
        return simple(Token::Kind::Minus, 1);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = pos_;
      while (j < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[j])) ||
                                  text_[j] == '.' || text_[j] == '/'))
        ++j;
      // trailing dot belongs to "ex X." style syntax, not to a number
      while (j > pos_ && (text_[j - 1] == '.' || text_[j - 1] == '/')) --j;
      current_ = {Token::Kind::Number, text_.substr(pos_, j - pos_), line, col};
      col_ += static_cast<int>(j - pos_);
      pos_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = pos_;
      while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) ||
                                  text_[j] == '_'))
        ++j;
      std::string word = text_.substr(pos_, j - pos_);
      Token::Kind kind = std::isupper(static_cast<unsigned char>(c)) ? Token::Kind::Var
                                                                     : Token::Kind::Ident;
      current_ = {kind, word, line, col};
      col_ += static_cast<int>(j - pos_);
      pos_ = j;
      return;
    }
    if (c == '_') throw ParseError("identifiers starting with '_' are reserved", line, col);
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token current_{Token::Kind::End, "", 1, 1};
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(msg + (t.text.empty() ? "" : " (found '" + t.text + "')"), t.line, t.col);
}

class Parser {
 public:
  Parser(const std::string& text, Semiring s) : lex_(text), semiring_(std::move(s)) {}

  // ---- terms & atoms ----

  Term parse_term() {
    Token t = lex_.take();
    if (t.kind == Token::Kind::Var) return Term::var(t.text);
    if (t.kind == Token::Kind::Number) return Term::constant(t.text);
    if (t.kind != Token::Kind::Ident) fail(t, "expected a term");
    if (lex_.peek().kind != Token::Kind::LParen) return Term::constant(t.text);
    lex_.take();
    std::vector<Term> args;
    if (lex_.peek().kind != Token::Kind::RParen) {
      args.push_back(parse_term());
      while (lex_.peek().kind == Token::Kind::Comma) {
        lex_.take();
        args.push_back(parse_term());
      }
    }
    expect(Token::Kind::RParen, "expected ')'");
    return Term::fun(t.text, std::move(args));
  }

  Atom parse_atom() {
    Token t = lex_.peek();
    if (t.kind != Token::Kind::Ident) fail(t, "expected a predicate");
    Term parsed = parse_term();
    if (parsed.kind == Term::Kind::Const) return Atom{parsed.name, {}};
    return Atom{parsed.name, parsed.args};
  }

  // ---- constraints ----

  Constraint parse_constraint_top() {
    if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "ex") {
      lex_.take();
      Token v = lex_.take();
      if (v.kind != Token::Kind::Var) fail(v, "expected a variable after 'ex'");
      expect(Token::Kind::Dot, "expected '.' after the binder");
      return Constraint::exists(v.text, parse_constraint_top());
    }
    Constraint lhs = parse_constraint_primary();
    while (lex_.peek().kind == Token::Kind::Star) {
      lex_.take();
      Constraint rhs = lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "ex"
                           ? parse_constraint_top()
                           : parse_constraint_primary();
      lhs = Constraint::tensor(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Constraint parse_constraint_primary() {
    Token t = lex_.peek();
    if (t.kind == Token::Kind::Number && t.text == "1") {
      lex_.take();
      return Constraint::one();
    }
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      Constraint c = parse_constraint_top();
      expect(Token::Kind::RParen, "expected ')'");
      return c;
    }
    if (t.kind == Token::Kind::LBrack) {
      lex_.take();
      PreConstraint pre;
      pre.atoms.push_back(parse_atom());
      while (lex_.peek().kind == Token::Kind::Star) {
        lex_.take();
        pre.atoms.push_back(parse_atom());
      }
      expect(Token::Kind::RBrack, "expected ']'");
      expect(Token::Kind::At, "expected '@level'");
      Level level = parse_level();
      for (const Atom& a : pre.atoms) {
        if (a.pred == "eq" && a.args.size() == 2 && !(level == semiring_.top()))
          fail(t, "eq atoms must carry the top level");
      }
      return Constraint::soft(std::move(pre), std::move(level));
    }
    if (t.kind == Token::Kind::Var) {
      // X = t sugar for [eq(X, t)]@top
      lex_.take();
      expect(Token::Kind::Eq, "expected '=' after the variable");
      Term rhs = parse_term();
      return Constraint::soft(PreConstraint{{Atom{"eq", {Term::var(t.text), rhs}}}},
                              semiring_.top());
    }
    fail(t, "expected a constraint");
  }

  Level parse_level() {
    Token t = lex_.take();
    std::string text = t.text;
    if (t.kind == Token::Kind::Minus) {
      Token n = lex_.take();
      if (n.kind == Token::Kind::Ident && n.text == "inf") text = "-inf";
      else if (n.kind == Token::Kind::Number) text = "-" + n.text;
      else fail(n, "expected a number after '-'");
    } else if (t.kind != Token::Kind::Number && t.kind != Token::Kind::Ident) {
      fail(t, "expected a level");
    }
    try {
      return semiring_.parse_level(text);
    } catch (const std::exception& e) {
      fail(t, e.what());
    }
  }

  // ---- processes ----

  Process parse_process() {
    Process lhs = parse_summand();
    while (lex_.peek().kind == Token::Kind::Par) {
      lex_.take();
      lhs = Process::par(std::move(lhs), parse_summand());
    }
    return lhs;
  }

  Process parse_summand() {
    if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "ask") {
      std::vector<ProcessBranch> branches;
      branches.push_back(parse_branch());
      while (lex_.peek().kind == Token::Kind::Plus) {
        lex_.take();
        branches.push_back(parse_branch());
      }
      return Process::sum(std::move(branches));
    }
    return parse_basic();
  }

  ProcessBranch parse_branch() {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Ident || t.text != "ask") fail(t, "expected 'ask'");
    Constraint guard = parse_constraint_top();
    Token then = lex_.take();
    if (then.kind != Token::Kind::Ident || then.text != "then") fail(then, "expected 'then'");
    return ProcessBranch{std::move(guard), parse_basic()};
  }

  Process parse_basic() {
    Token t = lex_.peek();
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      Process p = parse_process();
      expect(Token::Kind::RParen, "expected ')'");
      return p;
    }
    if (t.kind == Token::Kind::Ident && t.text == "tell") {
      lex_.take();
      return Process::tell(parse_constraint_top());
    }
    if (t.kind == Token::Kind::Ident && t.text == "new") {
      lex_.take();
      Token v = lex_.take();
      if (v.kind != Token::Kind::Var) fail(v, "expected a variable after 'new'");
      Token in = lex_.take();
      if (in.kind != Token::Kind::Ident || in.text != "in") fail(in, "expected 'in'");
      return Process::local(v.text, parse_basic());
    }
    if (t.kind == Token::Kind::Ident && t.text == "ask") {
      // single ask as a basic; '+' joins at the summand level
      std::vector<ProcessBranch> branches{parse_branch()};
      return Process::sum(std::move(branches));
    }
    if (t.kind == Token::Kind::Ident) {
      lex_.take();
      expect(Token::Kind::LParen, "expected '(' after the process name");
      std::vector<Term> args;
      if (lex_.peek().kind != Token::Kind::RParen) {
        args.push_back(parse_term());
        while (lex_.peek().kind == Token::Kind::Comma) {
          lex_.take();
          args.push_back(parse_term());
        }
      }
      expect(Token::Kind::RParen, "expected ')'");
      return Process::call(t.text, std::move(args));
    }
    fail(t, "expected a process");
  }

  // ---- programs ----

  Program parse_program_decls(bool& saw_semiring) {
    Program p;
    p.semiring = semiring_;
    bool saw_main = false;
    while (lex_.peek().kind != Token::Kind::End) {
      Token t = lex_.take();
      if (t.kind != Token::Kind::Ident) fail(t, "expected a declaration");
      if (t.text == "semiring") {
        Token name = lex_.take();
        if (name.kind != Token::Kind::Ident) fail(name, "expected a semiring name");
        semiring_ = Semiring::named(name.text);
        p.semiring = semiring_;
        saw_semiring = true;
      } else if (t.text == "mode") {
        Token name = lex_.take();
        if (name.kind != Token::Kind::Ident) fail(name, "expected sell or sells");
        p.mode = mode_named(name.text);
      } else if (t.text == "axiom") {
        Axiom ax;
        ax.premise = parse_constraint_top();
        expect(Token::Kind::Arrow, "expected '=>' in the axiom");
        ax.conclusion = parse_constraint_top();
        if (has_exists(ax.premise) || has_exists(ax.conclusion))
          fail(t, "axiom sides must be quantifier-free");
        std::set<std::string> vars = free_vars(ax.premise);
        vars.merge(free_vars(ax.conclusion));
        ax.vars.assign(vars.begin(), vars.end());
        p.axioms.push_back(std::move(ax));
      } else if (t.text == "def") {
        Token name = lex_.take();
        if (name.kind != Token::Kind::Ident) fail(name, "expected a definition name");
        expect(Token::Kind::LParen, "expected '('");
        std::vector<std::string> params;
        if (lex_.peek().kind != Token::Kind::RParen) {
          while (true) {
            Token v = lex_.take();
            if (v.kind != Token::Kind::Var) fail(v, "expected a parameter variable");
            params.push_back(v.text);
            if (lex_.peek().kind != Token::Kind::Comma) break;
            lex_.take();
          }
        }
        expect(Token::Kind::RParen, "expected ')'");
        expect(Token::Kind::Eq, "expected '='");
        Process body = parse_process();
        if (p.defs.count(name.text)) fail(name, "duplicate definition of " + name.text);
        p.defs[name.text] = Definition{name.text, std::move(params), std::move(body)};
      } else if (t.text == "main") {
        if (saw_main) fail(t, "duplicate main");
        saw_main = true;
        expect(Token::Kind::Eq, "expected '='");
        p.main_procs = {parse_process()};
      } else {
        fail(t, "unknown declaration " + t.text);
      }
      expect(Token::Kind::Semi, "expected ';'");
    }
    if (!saw_main) {
      Token t = lex_.peek();
      fail(t, "program has no main");
    }
    return p;
  }

  // ---- prover formulas ----

  Formula parse_formula_top() { return parse_lolli(); }

  Formula parse_lolli() {
    Formula lhs = parse_with();
    if (lex_.peek().kind == Token::Kind::Lolli) {
      lex_.take();
      return Formula::lolli(std::move(lhs), parse_lolli());
    }
    return lhs;
  }

  Formula parse_with() {
    Formula lhs = parse_tensor_f();
    if (lex_.peek().kind != Token::Kind::Amp) return lhs;
    std::vector<Formula> parts{std::move(lhs)};
    while (lex_.peek().kind == Token::Kind::Amp) {
      lex_.take();
      parts.push_back(parse_tensor_f());
    }
    return Formula::with(std::move(parts));
  }

  Formula parse_tensor_f() {
    Formula lhs = parse_formula_primary();
    while (lex_.peek().kind == Token::Kind::Star) {
      lex_.take();
      lhs = Formula::tensor(std::move(lhs), parse_formula_primary());
    }
    return lhs;
  }

  Formula parse_formula_primary() {
    Token t = lex_.peek();
    if (t.kind == Token::Kind::Number && t.text == "1") {
      lex_.take();
      return Formula::one();
    }
    if (t.kind == Token::Kind::Ident && t.text == "top") {
      lex_.take();
      return Formula::top();
    }
    if (t.kind == Token::Kind::Ident && (t.text == "ex" || t.text == "all")) {
      lex_.take();
      Token v = lex_.take();
      if (v.kind != Token::Kind::Var) fail(v, "expected a variable binder");
      expect(Token::Kind::Dot, "expected '.'");
      Formula body = parse_formula_top();
      return t.text == "ex" ? Formula::exists(v.text, std::move(body))
                            : Formula::forall(v.text, std::move(body));
    }
    if (t.kind == Token::Kind::Bang) {
      lex_.take();
      expect(Token::Kind::LBrace, "expected '{' after '!'");
      SubIndex idx = parse_index();
      expect(Token::Kind::RBrace, "expected '}'");
      return Formula::bang(idx, parse_formula_primary());
    }
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      Formula f = parse_formula_top();
      expect(Token::Kind::RParen, "expected ')'");
      return f;
    }
    if (t.kind == Token::Kind::Ident) {
      Atom a = parse_atom();
      return Formula::atomic(std::move(a));
    }
    fail(t, "expected a formula");
  }

  SubIndex parse_index() {
    Token t = lex_.peek();
    if (t.kind == Token::Kind::Ident) {
      if (t.text == "p") { lex_.take(); return SubIndex::proc(); }
      if (t.text == "d") { lex_.take(); return SubIndex::call(); }
      if (t.text == "u") { lex_.take(); return SubIndex::def(); }
      if (t.text == "botc") { lex_.take(); return SubIndex::bot_c(); }
      if (t.text == "topc") { lex_.take(); return SubIndex::top_c(); }
    }
    return SubIndex::lvl(parse_level());
  }

  Sequent parse_sequent_top() {
    Sequent seq;
    if (lex_.peek().kind != Token::Kind::Turnstile) {
      seq.context.push_back(parse_formula_top());
      while (lex_.peek().kind == Token::Kind::Comma) {
        lex_.take();
        seq.context.push_back(parse_formula_top());
      }
    }
    expect(Token::Kind::Turnstile, "expected '|-'");
    seq.goal = parse_formula_top();
    return seq;
  }

  void expect_end(const char* what) {
    if (lex_.peek().kind != Token::Kind::End) fail(lex_.peek(), std::string("trailing input after ") + what);
  }

 private:
  void expect(Token::Kind k, const char* msg) {
    Token t = lex_.take();
    if (t.kind != k) fail(t, msg);
  }

  static bool has_exists(const Constraint& c) {
    switch (c.kind()) {
      case Constraint::Kind::One:
      case Constraint::Kind::Soft: return false;
      case Constraint::Kind::Exists: return true;
      case Constraint::Kind::Tensor: return has_exists(c.lhs()) || has_exists(c.rhs());
    }
    return false;
  }

  Lexer lex_;
  Semiring semiring_;
};

// fixed arities per program for predicates and function symbols
void check_term_arities(const Term& t, std::map<std::string, std::size_t>& funs) {
  if (t.kind == Term::Kind::Fun) {
    auto [it, fresh] = funs.emplace(t.name, t.args.size());
    if (!fresh && it->second != t.args.size())
      throw ParseError("function " + t.name + " used with differing arities", 0, 0);
  }
  for (const Term& a : t.args) check_term_arities(a, funs);
}

void check_constraint_arities(const Constraint& c, std::map<std::string, std::size_t>& preds,
                              std::map<std::string, std::size_t>& funs) {
  switch (c.kind()) {
    case Constraint::Kind::One: return;
    case Constraint::Kind::Tensor:
      check_constraint_arities(c.lhs(), preds, funs);
      check_constraint_arities(c.rhs(), preds, funs);
      return;
    case Constraint::Kind::Exists:
      check_constraint_arities(c.body(), preds, funs);
      return;
    case Constraint::Kind::Soft:
      for (const Atom& a : c.pre().atoms) {
        auto [it, fresh] = preds.emplace(a.pred, a.args.size());
        if (!fresh && it->second != a.args.size())
          throw ParseError("predicate " + a.pred + " used with differing arities", 0, 0);
        for (const Term& t : a.args) check_term_arities(t, funs);
      }
      return;
  }
}

void check_process_arities(const Process& p, std::map<std::string, std::size_t>& preds,
                           std::map<std::string, std::size_t>& funs) {
  switch (p.kind()) {
    case Process::Kind::Tell:
      check_constraint_arities(p.told(), preds, funs);
      return;
    case Process::Kind::Sum:
      for (const auto& b : p.branches()) {
        check_constraint_arities(b.guard, preds, funs);
        check_process_arities(b.body, preds, funs);
      }
      return;
    case Process::Kind::Par:
      check_process_arities(p.lhs(), preds, funs);
      check_process_arities(p.rhs(), preds, funs);
      return;
    case Process::Kind::Local:
      check_process_arities(p.body(), preds, funs);
      return;
    case Process::Kind::Call:
      for (const Term& t : p.call_args()) check_term_arities(t, funs);
      return;
  }
}

}  // namespace

Program parse_program(const std::string& text) {
  Parser parser(text, Semiring::named("crisp"));
  bool saw_semiring = false;
  Program p = parser.parse_program_decls(saw_semiring);
  parser.expect_end("the program");
  validate_program(p);
  std::map<std::string, std::size_t> preds, funs;
  for (const Axiom& ax : p.axioms) {
    check_constraint_arities(ax.premise, preds, funs);
    check_constraint_arities(ax.conclusion, preds, funs);
  }
  for (const auto& [name, def] : p.defs) {
    (void)name;
    check_process_arities(def.body, preds, funs);
  }
  for (const Process& proc : p.main_procs) check_process_arities(proc, preds, funs);
  return p;
}

Constraint parse_constraint(const std::string& text, const Semiring& s) {
  Parser parser(text, s);
  Constraint c = parser.parse_constraint_top();
  parser.expect_end("the constraint");
  return c;
}

Formula parse_formula(const std::string& text, const Semiring& s) {
  Parser parser(text, s);
  Formula f = parser.parse_formula_top();
  parser.expect_end("the formula");
  return f;
}

Sequent parse_sequent(const std::string& text, const Semiring& s) {
  Parser parser(text, s);
  Sequent seq = parser.parse_sequent_top();
  parser.expect_end("the sequent");
  return seq;
}

}  // namespace sccp
