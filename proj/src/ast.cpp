#include "sccp/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace sccp {

bool Term::operator==(const Term& o) const {
  return kind == o.kind && name == o.name && args == o.args;
}

bool Term::operator<(const Term& o) const {
  if (kind != o.kind) return static_cast<int>(kind) > static_cast<int>(o.kind);  // Fun < Const < Var
  if (name != o.name) return name < o.name;
  return std::lexicographical_compare(args.begin(), args.end(), o.args.begin(), o.args.end());
}

std::string Term::str() const {
  if (kind != Kind::Fun) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i].str();
  }
  return out + ")";
}

bool Atom::operator<(const Atom& o) const {
  if (pred != o.pred) return pred < o.pred;
  return std::lexicographical_compare(args.begin(), args.end(), o.args.begin(), o.args.end());
}

std::string Atom::str() const {
  if (args.empty()) return pred;
  std::string out = pred + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i].str();
  }
  return out + ")";
}

std::string PreConstraint::str() const {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += " * ";
    out += atoms[i].str();
  }
  return out;
}

struct ConstraintNode {
  Constraint::Kind kind;
  std::shared_ptr<const ConstraintNode> lhs;  // Tensor lhs / Exists body
  std::shared_ptr<const ConstraintNode> rhs;
  std::string var;
  PreConstraint pre;
  Level level = Level::crisp(true);
  explicit ConstraintNode(Constraint::Kind k) : kind(k) {}
};

Constraint Constraint::one() {
  static const Constraint instance(std::make_shared<const ConstraintNode>(Kind::One));
  return instance;
}

Constraint Constraint::tensor(Constraint lhs, Constraint rhs) {
  auto n = std::make_shared<ConstraintNode>(Kind::Tensor);
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Constraint(std::move(n));
}

Constraint Constraint::exists(std::string var, Constraint body) {
  auto n = std::make_shared<ConstraintNode>(Kind::Exists);
  n->lhs = body.node_;
  n->var = std::move(var);
  return Constraint(std::move(n));
}

Constraint Constraint::soft(PreConstraint pre, Level level) {
  if (pre.atoms.empty()) throw std::invalid_argument("empty pre-constraint");
  auto n = std::make_shared<ConstraintNode>(Kind::Soft);
  n->pre = std::move(pre);
  n->level = std::move(level);
  return Constraint(std::move(n));
}

Constraint::Kind Constraint::kind() const { return node_->kind; }
Constraint Constraint::lhs() const { return Constraint(node_->lhs); }
Constraint Constraint::rhs() const { return Constraint(node_->rhs); }
const std::string& Constraint::var() const { return node_->var; }
Constraint Constraint::body() const { return Constraint(node_->lhs); }
const PreConstraint& Constraint::pre() const { return node_->pre; }
const Level& Constraint::level() const { return node_->level; }

bool Constraint::operator==(const Constraint& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::One: return true;
    case Kind::Tensor: return lhs() == o.lhs() && rhs() == o.rhs();
    case Kind::Exists: return var() == o.var() && body() == o.body();
    case Kind::Soft: return pre() == o.pre() && level() == o.level();
  }
  return false;
}

// Precedence: ex (loosest) < tensor < primary. Right tensor children get
// parens so printing is the exact inverse of the left-associative parse.
static std::string print_constraint(const Constraint& c, bool as_tensor_rhs) {
  switch (c.kind()) {
    case Constraint::Kind::One: return "1";
    case Constraint::Kind::Soft:
      return "[" + c.pre().str() + "]@" + c.level().str();
    case Constraint::Kind::Exists: {
      std::string inner = "ex " + c.var() + ". " + print_constraint(c.body(), false);
      return as_tensor_rhs ? "(" + inner + ")" : inner;
    }
    case Constraint::Kind::Tensor: {
      std::string l = c.lhs().kind() == Constraint::Kind::Exists
                          ? "(" + print_constraint(c.lhs(), false) + ")"
                          : print_constraint(c.lhs(), false);
      std::string r = print_constraint(c.rhs(), true);
      std::string out = l + " * " + r;
      if (c.rhs().kind() == Constraint::Kind::Tensor)
        out = l + " * (" + print_constraint(c.rhs(), false) + ")";
      return out;
    }
  }
  return "?";
}

std::string Constraint::str() const { return print_constraint(*this, false); }

struct Process::Node {
  Process::Kind kind;
  Constraint constraint = Constraint::one();
  std::vector<ProcessBranch> branches;
  std::shared_ptr<const Node> lhs;  // Par lhs / Local body
  std::shared_ptr<const Node> rhs;
  std::string var;  // Local var / Call name
  std::vector<Term> args;
  explicit Node(Process::Kind k) : kind(k) {}
};

Process Process::tell(Constraint c) {
  auto n = std::make_shared<Node>(Kind::Tell);
  n->constraint = std::move(c);
  return Process(std::move(n));
}

Process Process::sum(std::vector<ProcessBranch> branches) {
  if (branches.empty()) throw std::invalid_argument("empty sum");
  auto n = std::make_shared<Node>(Kind::Sum);
  n->branches = std::move(branches);
  return Process(std::move(n));
}

Process Process::par(Process lhs, Process rhs) {
  auto n = std::make_shared<Node>(Kind::Par);
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Process(std::move(n));
}

Process Process::local(std::string var, Process body) {
  auto n = std::make_shared<Node>(Kind::Local);
  n->lhs = body.node_;
  n->var = std::move(var);
  return Process(std::move(n));
}

Process Process::call(std::string name, std::vector<Term> args) {
  auto n = std::make_shared<Node>(Kind::Call);
  n->var = std::move(name);
  n->args = std::move(args);
  return Process(std::move(n));
}

Process::Kind Process::kind() const { return node_->kind; }
const Constraint& Process::told() const { return node_->constraint; }
const std::vector<ProcessBranch>& Process::branches() const { return node_->branches; }
Process Process::lhs() const { return Process(node_->lhs); }
Process Process::rhs() const { return Process(node_->rhs); }
const std::string& Process::var() const { return node_->var; }
Process Process::body() const { return Process(node_->lhs); }
const std::string& Process::callee() const { return node_->var; }
const std::vector<Term>& Process::call_args() const { return node_->args; }

bool Process::operator==(const Process& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Tell: return told() == o.told();
    case Kind::Sum: {
      if (branches().size() != o.branches().size()) return false;
      for (std::size_t i = 0; i < branches().size(); ++i)
        if (!(branches()[i].guard == o.branches()[i].guard) ||
            !(branches()[i].body == o.branches()[i].body))
          return false;
      return true;
    }
    case Kind::Par: return lhs() == o.lhs() && rhs() == o.rhs();
    case Kind::Local: return var() == o.var() && body() == o.body();
    case Kind::Call: return callee() == o.callee() && call_args() == o.call_args();
  }
  return false;
}

// Process printing mirrors the grammar: '+' binds tighter than '||', ask/new
// bodies are single basics (parenthesized otherwise).
static std::string print_process(const Process& p, bool as_basic);

static std::string print_branch(const ProcessBranch& b) {
  return "ask " + b.guard.str() + " then " + print_process(b.body, true);
}

static std::string print_process(const Process& p, bool as_basic) {
  switch (p.kind()) {
    case Process::Kind::Tell:
      return "tell " + p.told().str();
    case Process::Kind::Call: {
      std::string out = p.callee() + "(";
      for (std::size_t i = 0; i < p.call_args().size(); ++i) {
        if (i) out += ", ";
        out += p.call_args()[i].str();
      }
      return out + ")";
    }
    case Process::Kind::Local:
      return "new " + p.var() + " in " + print_process(p.body(), true);
    case Process::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < p.branches().size(); ++i) {
        if (i) out += " + ";
        out += print_branch(p.branches()[i]);
      }
      if (as_basic && p.branches().size() > 1) return "(" + out + ")";
      return out;
    }
    case Process::Kind::Par: {
      std::string l = print_process(p.lhs(), false);
      std::string r = p.rhs().kind() == Process::Kind::Par
                          ? "(" + print_process(p.rhs(), false) + ")"
                          : print_process(p.rhs(), false);
      std::string out = l + " || " + r;
      return as_basic ? "(" + out + ")" : out;
    }
  }
  return "?";
}

std::string Process::str() const { return print_process(*this, false); }

std::string Axiom::str() const { return premise.str() + " => " + conclusion.str(); }

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  for (const Term& a : t.args) out.merge(free_vars(a));
  return out;
}

std::set<std::string> free_vars(const Atom& a) {
  std::set<std::string> out;
  for (const Term& t : a.args) out.merge(free_vars(t));
  return out;
}

std::set<std::string> free_vars(const Constraint& c) {
  switch (c.kind()) {
    case Constraint::Kind::One: return {};
    case Constraint::Kind::Tensor: {
      auto out = free_vars(c.lhs());
      out.merge(free_vars(c.rhs()));
      return out;
    }
    case Constraint::Kind::Exists: {
      auto out = free_vars(c.body());
      out.erase(c.var());
      return out;
    }
    case Constraint::Kind::Soft: {
      std::set<std::string> out;
      for (const Atom& a : c.pre().atoms) out.merge(free_vars(a));
      return out;
    }
  }
  return {};
}

std::set<std::string> free_vars(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::Tell: return free_vars(p.told());
    case Process::Kind::Sum: {
      std::set<std::string> out;
      for (const auto& b : p.branches()) {
        out.merge(free_vars(b.guard));
        out.merge(free_vars(b.body));
      }
      return out;
    }
    case Process::Kind::Par: {
      auto out = free_vars(p.lhs());
      out.merge(free_vars(p.rhs()));
      return out;
    }
    case Process::Kind::Local: {
      auto out = free_vars(p.body());
      out.erase(p.var());
      return out;
    }
    case Process::Kind::Call: {
      std::set<std::string> out;
      for (const Term& t : p.call_args()) out.merge(free_vars(t));
      return out;
    }
  }
  return {};
}

Term substitute(const Term& t, const Subst& map) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = map.find(t.name);
      return it == map.end() ? t : it->second;
    }
    case Term::Kind::Const: return t;
    case Term::Kind::Fun: {
      std::vector<Term> args;
      args.reserve(t.args.size());
      for (const Term& a : t.args) args.push_back(substitute(a, map));
      return Term::fun(t.name, std::move(args));
    }
  }
  return t;
}

Atom substitute(const Atom& a, const Subst& map) {
  std::vector<Term> args;
  args.reserve(a.args.size());
  for (const Term& t : a.args) args.push_back(substitute(t, map));
  return Atom{a.pred, std::move(args)};
}

PreConstraint substitute(const PreConstraint& pc, const Subst& map) {
  PreConstraint out;
  out.atoms.reserve(pc.atoms.size());
  for (const Atom& a : pc.atoms) out.atoms.push_back(substitute(a, map));
  return out;
}

// Restricts the map under a binder; renames the binder to a fresh name when
// it would capture a variable of the map's range.
static std::pair<std::string, Subst> enter_binder(const std::string& var, const Subst& map,
                                                  NameSource& fresh) {
  Subst inner = map;
  inner.erase(var);
  bool capture = false;
  for (const auto& [from, to] : inner) {
    (void)from;
    if (free_vars(to).count(var)) { capture = true; break; }
  }
  if (!capture) return {var, std::move(inner)};
  std::string renamed = fresh.fresh();
  inner[var] = Term::var(renamed);
  return {renamed, std::move(inner)};
}

Constraint substitute(const Constraint& c, const Subst& map, NameSource& fresh) {
  if (map.empty()) return c;
  switch (c.kind()) {
    case Constraint::Kind::One: return c;
    case Constraint::Kind::Tensor:
      return Constraint::tensor(substitute(c.lhs(), map, fresh), substitute(c.rhs(), map, fresh));
    case Constraint::Kind::Exists: {
      auto [var, inner] = enter_binder(c.var(), map, fresh);
      return Constraint::exists(var, substitute(c.body(), inner, fresh));
    }
    case Constraint::Kind::Soft: {
      PreConstraint pre;
      pre.atoms.reserve(c.pre().atoms.size());
      for (const Atom& a : c.pre().atoms) pre.atoms.push_back(substitute(a, map));
      return Constraint::soft(std::move(pre), c.level());
    }
  }
  return c;
}

Process substitute(const Process& p, const Subst& map, NameSource& fresh) {
  if (map.empty()) return p;
  switch (p.kind()) {
    case Process::Kind::Tell:
      return Process::tell(substitute(p.told(), map, fresh));
    case Process::Kind::Sum: {
      std::vector<ProcessBranch> branches;
      branches.reserve(p.branches().size());
      for (const auto& b : p.branches())
        branches.push_back(
            ProcessBranch{substitute(b.guard, map, fresh), substitute(b.body, map, fresh)});
      return Process::sum(std::move(branches));
    }
    case Process::Kind::Par:
      return Process::par(substitute(p.lhs(), map, fresh), substitute(p.rhs(), map, fresh));
    case Process::Kind::Local: {
      auto [var, inner] = enter_binder(p.var(), map, fresh);
      return Process::local(var, substitute(p.body(), inner, fresh));
    }
    case Process::Kind::Call: {
      std::vector<Term> args;
      args.reserve(p.call_args().size());
      for (const Term& t : p.call_args()) args.push_back(substitute(t, map));
      return Process::call(p.callee(), std::move(args));
    }
  }
  return p;
}

static void normalize_into(const Constraint& c, Subst& env, NameSource& fresh, NormalForm& out) {
  switch (c.kind()) {
    case Constraint::Kind::One:
      return;
    case Constraint::Kind::Tensor:
      normalize_into(c.lhs(), env, fresh, out);
      normalize_into(c.rhs(), env, fresh, out);
      return;
    case Constraint::Kind::Exists: {
      std::string name = fresh.fresh();
      out.new_vars.push_back(name);
      auto it = env.find(c.var());
      bool had = it != env.end();
      Term prev = had ? it->second : Term{};
      env[c.var()] = Term::var(name);
      normalize_into(c.body(), env, fresh, out);
      if (had) env[c.var()] = prev; else env.erase(c.var());
      return;
    }
    case Constraint::Kind::Soft: {
      PreConstraint pre;
      pre.atoms.reserve(c.pre().atoms.size());
      for (const Atom& a : c.pre().atoms) pre.atoms.push_back(substitute(a, env));
      out.items.emplace_back(std::move(pre), c.level());
      return;
    }
  }
}

NormalForm normalize(const Constraint& c, NameSource& fresh) {
  NormalForm out;
  Subst env;
  normalize_into(c, env, fresh, out);
  return out;
}

Constraint denormalize(const NormalForm& nf) {
  Constraint body = Constraint::one();
  bool first = true;
  for (const auto& [pre, level] : nf.items) {
    Constraint item = Constraint::soft(pre, level);
    body = first ? item : Constraint::tensor(std::move(body), std::move(item));
    first = false;
  }
  for (auto it = nf.new_vars.rbegin(); it != nf.new_vars.rend(); ++it)
    body = Constraint::exists(*it, std::move(body));
  return body;
}

}  // namespace sccp
